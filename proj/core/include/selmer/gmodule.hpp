#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/perm_group.hpp"

#include <vector>

namespace selmer {

/// A G-module whose underlying group is the direct sum of cyclic groups
/// Z/orders[i] (0 = Z). Covers finite modules, lattices, and lattices with a
/// torsion part such as S-unit groups.
class GModule {
public:
    GModule() = default;
    /// `generator_action[k]` is the matrix of the k-th group generator.
    /// Throws SchemaError on shape mismatch, InvariantViolation if an action
    /// matrix is incompatible with the orders or the map G -> Aut is not a
    /// homomorphism, NonInvertibleAction if a matrix is not an automorphism.
    GModule(PermGroup group, IntVector orders, std::vector<IntMatrix> generator_action);

    static GModule trivial(PermGroup group, IntVector orders);

    const PermGroup& group() const noexcept { return group_; }
    const IntVector& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    const FgAbGroup& abelian() const noexcept { return abelian_; }
    const std::vector<IntMatrix>& generator_action() const noexcept { return gen_action_; }
    /// Matrix of group element i, entries reduced.
    const IntMatrix& action(std::size_t i) const { return action_[i]; }

    IntVector reduce(const IntVector& x) const;
    IntVector act(std::size_t g, const IntVector& x) const { return reduce(action_[g] * x); }

    bool is_finite() const;
    /// lcm of the orders; 0 when there is a free part.
    Int exponent() const;
    FinAbGroup structure() const { return finite_structure(abelian_); }

    /// True if every element of the subgroup fixes x.
    bool fixed_by(const Subgroup& h, const IntVector& x) const;

private:
    PermGroup group_;
    IntVector orders_;
    FgAbGroup abelian_;
    std::vector<IntMatrix> gen_action_;
    std::vector<IntMatrix> action_;

    IntMatrix reduce_matrix(const IntMatrix& a) const;
};

/// A character G -> (Z/m)^x given on generators and extended along the
/// enumeration tree.
class CycloCharacter {
public:
    CycloCharacter() = default;
    /// Throws InvariantViolation if a value is not a unit or the extension is
    /// not a homomorphism.
    CycloCharacter(PermGroup group, Int modulus, IntVector generator_values);

    static CycloCharacter trivial(PermGroup group, Int modulus);

    const PermGroup& group() const noexcept { return group_; }
    const Int& modulus() const noexcept { return modulus_; }
    const IntVector& generator_values() const noexcept { return gen_values_; }
    const Int& value(std::size_t g) const { return values_[g]; }
    bool is_trivial() const;
    /// Number of distinct values.
    std::size_t image_size() const;
    /// The composite with (Z/m)^x -> (Z/n)^x; n must divide m.
    CycloCharacter reduce(const Int& n) const;

private:
    PermGroup group_;
    Int modulus_ = 1;
    IntVector gen_values_;
    IntVector values_;
};

/// Order of (Z/m)^x.
Int euler_phi(const Int& m);

/// Hom(M, Z/e) with (g f)(x) = chi(g) f(g^-1 x), e = exponent(M), in the
/// dual basis f_i(e_j) = delta_ij e / d_i. chi.modulus() must equal e (a
/// multiple is reduced).
GModule dual_module(const GModule& m, const CycloCharacter& chi);

/// V^H as a subgroup of V.
SubgroupResult invariants(const GModule& v, const Subgroup& h);

} // namespace selmer
