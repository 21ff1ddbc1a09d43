#pragma once

#include "selmer/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selmer {

/// Z^ngens modulo the column span of `relations`. Elements are integer
/// column vectors; homomorphisms act by matrices on the left.
class FgAbGroup {
public:
    FgAbGroup() = default;
    FgAbGroup(std::size_t ngens, IntMatrix relations);

    static FgAbGroup free(std::size_t n);
    /// Direct sum of cyclic groups; an order of 0 stands for Z.
    static FgAbGroup from_orders(const IntVector& orders);

    std::size_t ngens() const noexcept { return ngens_; }
    const IntMatrix& relations() const noexcept { return relations_; }
    /// Hermite basis of the relation lattice.
    const IntMatrix& relation_lattice() const noexcept { return relation_hnf_; }

    /// Canonical representative of the class of x.
    IntVector reduce(const IntVector& x) const;
    bool is_zero(const IntVector& x) const;
    bool equal(const IntVector& x, const IntVector& y) const;

    std::size_t free_rank() const;
    bool is_finite() const { return free_rank() == 0; }
    /// Group order, or 0 when infinite.
    Int order() const;

private:
    std::size_t ngens_ = 0;
    IntMatrix relations_;
    IntMatrix relation_hnf_;
};

/// Canonical finite abelian group: invariant factors d_1 | d_2 | ... | d_k,
/// each at least 2. The empty list is the trivial group.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(IntVector invariants);

    const IntVector& invariants() const noexcept { return invariants_; }
    Int order() const;
    Int exponent() const;
    bool is_trivial() const { return invariants_.empty(); }
    FgAbGroup presentation() const { return FgAbGroup::from_orders(invariants_); }
    /// "0", "Z/3", "(Z/2)^2", "Z/2 × Z/4".
    std::string to_string() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    IntVector invariants_;
};

/// Invariant factors (>= 2) plus free rank.
struct GroupStructure {
    IntVector torsion;
    std::size_t free_rank = 0;

    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

struct AbHom {
    FgAbGroup domain;
    FgAbGroup codomain;
    /// codomain.ngens() x domain.ngens(); column j is the image of generator j.
    IntMatrix matrix;

    AbHom() = default;
    AbHom(FgAbGroup dom, FgAbGroup cod, IntMatrix mat);

    IntVector operator()(const IntVector& x) const;
    /// Relations of the domain land in the relation lattice of the codomain.
    bool is_well_defined() const;
};

AbHom compose(const AbHom& after, const AbHom& before);

struct SubgroupResult {
    FgAbGroup sub;
    AbHom incl;
};

struct QuotientResult {
    FgAbGroup coker;
    AbHom proj;
};

/// Subgroup of G generated by the columns of `gens` (G coordinates), with a
/// presentation whose generators are the Hermite basis of span(gens) + relations.
SubgroupResult subgroup_generated(const FgAbGroup& g, const IntMatrix& gens);

SubgroupResult kernel(const AbHom& f);
QuotientResult image_quotient(const AbHom& f);
/// x with f(x) = y in the codomain, or nothing.
std::optional<IntVector> solve(const AbHom& f, const IntVector& y);

GroupStructure structure(const FgAbGroup& g);
/// Invariant factors; throws Internal if g is infinite.
FinAbGroup finite_structure(const FgAbGroup& g);

/// Isomorphic diagonal presentation: orders[i] (0 = Z, never 1), with
/// to_simple * x giving new coordinates and from_simple mapping back.
struct SimplifiedGroup {
    FgAbGroup group;
    IntVector orders;
    IntMatrix to_simple;
    IntMatrix from_simple;

    IntVector coordinates(const IntVector& x) const;
};

SimplifiedGroup simplify(const FgAbGroup& g);

/// A subquotient top / bottom of Z^n, both given by spanning columns, with
/// bottom contained in top. Generators are reduced modulo the bottom lattice.
struct Subquotient {
    IntVector orders;
    IntMatrix generators;
    IntMatrix top_basis;
    IntMatrix bottom_basis;
    IntMatrix coordinate_transform;

    FgAbGroup group() const { return FgAbGroup::from_orders(orders); }
    GroupStructure structure() const;
    bool contains(const IntVector& x) const;
    /// Coordinates in `orders` of an element of the top lattice.
    IntVector coordinates(const IntVector& x) const;
};

Subquotient subquotient(const IntMatrix& top, const IntMatrix& bottom);

} // namespace selmer
