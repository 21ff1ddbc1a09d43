#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/perm_group.hpp"

#include <vector>

namespace selmer {

/// P = sum_j Z[G/H_j] with the left cosets of each block as basis, blocks
/// laid out consecutively.
struct PermModuleSpec {
    PermGroup group;
    std::vector<Subgroup> blocks;
    std::vector<CosetSpace> cosets;
    std::vector<std::size_t> offsets;

    std::size_t rank() const;
    std::size_t block_rank(std::size_t j) const { return cosets[j].size(); }
    /// Permutation matrix of group element g.
    IntMatrix action_matrix(std::size_t g) const;
    /// P as a lattice G-module.
    GModule module() const;
    /// P / nP as a finite G-module.
    GModule module_mod(const Int& n) const;

    friend bool operator==(const PermModuleSpec& a, const PermModuleSpec& b) { return a.blocks == b.blocks; }
};

PermModuleSpec perm_module(const PermGroup& g, std::vector<Subgroup> blocks);

/// A G-map between permutation modules in the double-coset basis.
///
/// For source block H and target block J, coeffs[t][s] is indexed by
/// decomps[t][s] = H \ G / J and holds c_D with
///   f(1 H) = sum_D c_D sum_{gJ in D} gJ.
struct HeckeSum {
    PermModuleSpec source;
    PermModuleSpec target;
    std::vector<std::vector<IntVector>> coeffs;
    std::vector<std::vector<DoubleCosetDecomp>> decomps;

    friend bool operator==(const HeckeSum& a, const HeckeSum& b)
    {
        return a.source == b.source && a.target == b.target && a.coeffs == b.coeffs;
    }
};

/// All coefficients zero.
HeckeSum zero_hecke(const PermModuleSpec& source, const PermModuleSpec& target);

/// target.rank() x source.rank() matrix on the coset bases.
IntMatrix hecke_matrix(const HeckeSum& t);
AbHom hecke_to_hom(const HeckeSum& t);
/// Throws NotEquivariant unless the matrix commutes with the action.
HeckeSum hom_to_hecke(const PermModuleSpec& source, const PermModuleSpec& target, const IntMatrix& matrix);

/// The transpose map, with c'_{J g^-1 H} = c_{H g J}.
HeckeSum dualize(const HeckeSum& t);
HeckeSum compose(const HeckeSum& after, const HeckeSum& before);

/// T_{HgJ}(x) = sum_i g_i^-1 x over HgJ = disjoint union of H g_i.
/// Throws NotInvariant if x is not H-fixed.
IntVector hecke_apply(const GModule& v, const Subgroup& h, const Subgroup& j, const Perm& g, const IntVector& x);

/// Matrix of y -> sum_D c_D T_D from sum_s V^{H_s} to sum_t V^{J_t}, in
/// ambient V coordinates (block s of the input is an element of V). This is
/// Hom_G(-, V) applied to dualize(t).
IntMatrix hecke_action_matrix(const HeckeSum& t, const GModule& v);

/// Hom(P / n, Z/n) with the chi-twisted action; chi has modulus n.
GModule torsion_model(const PermModuleSpec& p, const CycloCharacter& chi);

} // namespace selmer
