#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace selmer {

/// Bijection of {0, ..., degree-1} stored as its image array.
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> images);

    static Perm identity(std::size_t degree);
    /// Cycles given as point lists, e.g. {{0, 1, 2}} for (0 1 2).
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    Perm inverse() const;
    bool is_identity() const;
    /// Cycle notation, "()" for the identity.
    std::string to_string() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint32_t> images_;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Finite permutation group with a lazily built, memoized element list.
///
/// Elements are enumerated breadth first from the identity (index 0) by
/// left multiplication with the generators, so indices are reproducible.
/// Copies share the enumeration.
class PermGroup {
public:
    PermGroup() : PermGroup(0, {}) {}
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap = kDefaultGroupCap);

    std::size_t degree() const noexcept;
    const std::vector<Perm>& generators() const noexcept;

    /// Throws CapExceeded if the closure grows past the cap.
    const std::vector<Perm>& elements() const;
    std::size_t order() const { return elements().size(); }
    const Perm& element(std::size_t i) const { return elements()[i]; }
    /// Index of a group element; throws InvalidArgument if g is not in the group.
    std::size_t index_of(const Perm& g) const;
    bool contains(const Perm& g) const;

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;
    /// Index of generator k in the element list.
    std::size_t generator_index(std::size_t k) const;
    /// BFS tree: element(i) = generators()[parent_generator(i)] * element(parent(i)) for i > 0.
    std::size_t parent(std::size_t i) const;
    std::size_t parent_generator(std::size_t i) const;

    bool same_group(const PermGroup& other) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    const Impl& enumerated() const;
};

/// A subgroup of a fixed parent, stored as a membership table.
class Subgroup {
public:
    Subgroup() = default;

    static Subgroup generated(const PermGroup& g, const std::vector<Perm>& gens);
    static Subgroup whole(const PermGroup& g);
    static Subgroup trivial(const PermGroup& g);
    /// From a set of element indices; throws InvalidArgument unless it is closed.
    static Subgroup from_indices(const PermGroup& g, std::vector<std::size_t> indices);

    const PermGroup& parent() const noexcept { return parent_; }
    /// Element indices in increasing order (the identity first).
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    /// A generating set chosen greedily in element order.
    const std::vector<Perm>& generators() const noexcept { return generators_; }
    std::size_t order() const noexcept { return indices_.size(); }
    bool contains_index(std::size_t i) const { return member_[i]; }
    bool contains(const Perm& g) const;
    bool is_subgroup_of(const Subgroup& other) const;
    bool is_normal_in(const Subgroup& other) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.indices_ == b.indices_; }

private:
    PermGroup parent_;
    std::vector<bool> member_;
    std::vector<std::size_t> indices_;
    std::vector<Perm> generators_;

    void choose_generators();
};

/// {g : fixes(g)} for an action-derived predicate; the caller guarantees it
/// describes a subgroup (true for stabilizers).
Subgroup stabilizer(const PermGroup& g, const std::function<bool(std::size_t)>& fixes);

/// Left cosets gH, each represented by its smallest element index; coset 0
/// is H itself.
struct CosetSpace {
    Subgroup H;
    std::vector<std::size_t> reps;
    /// Element index to coset index.
    std::vector<std::size_t> coset_of;

    std::size_t size() const noexcept { return reps.size(); }
    /// Index of g * (coset c).
    std::size_t act(std::size_t g, std::size_t c) const;
};

CosetSpace left_cosets(const Subgroup& h);

struct DoubleCoset {
    /// Smallest element index in HgJ.
    std::size_t rep = 0;
    std::vector<std::size_t> elements;
    /// g_1, ..., g_t with HgJ the disjoint union of the H g_i, each g_i the
    /// smallest index of its coset.
    std::vector<std::size_t> left_reps;
};

/// H \ G / J, ordered by representative.
struct DoubleCosetDecomp {
    Subgroup H;
    Subgroup J;
    std::vector<DoubleCoset> cosets;
    /// Element index to double coset index.
    std::vector<std::size_t> coset_of;

    std::size_t size() const noexcept { return cosets.size(); }
};

DoubleCosetDecomp double_cosets(const Subgroup& h, const Subgroup& j);

PermGroup cyclic_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
/// Symmetries of a regular n-gon, order 2n, degree n.
PermGroup dihedral_group(std::size_t n);
/// Quaternion group acting regularly on 8 points.
PermGroup quaternion_group();
/// Product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

} // namespace selmer
