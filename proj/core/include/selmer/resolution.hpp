#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/hecke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selmer {

struct PermSurjection {
    PermModuleSpec P;
    /// From Z^{rank P} onto the module's abelian group.
    AbHom s;
};

/// Block j is Z[G/Stab(x_j)] with 1 Stab(x_j) mapped to x_j. Zero generators
/// are skipped. Throws NotGenerating if the G-span of the x_j is proper.
PermSurjection perm_surjection(const GModule& n, const std::vector<IntVector>& generators);
/// Uses the standard generators of n.
PermSurjection perm_surjection(const GModule& n);

/// P_depth -> ... -> P_1 -> P_0 -> M* -> 0, with d_star[i] : P_{i+1} -> P_i.
struct Resolution {
    GModule m;
    CycloCharacter chi;
    GModule mstar;
    std::vector<PermModuleSpec> P;
    AbHom s;
    std::vector<HeckeSum> d_star;
};

Resolution resolve(const GModule& m, const CycloCharacter& chi, std::size_t depth = 2);

/// Lattice module structure on ker(f) for an equivariant f out of a
/// permutation module; returns the module and its Hermite basis.
std::pair<GModule, IntMatrix> kernel_module(const PermModuleSpec& p, const IntMatrix& f, const FgAbGroup& codomain);

struct CheckResult {
    bool ok = true;
    std::string failure;
};

/// s surjective (certified element by element when |M*| <= 4096), every
/// composition zero, and ker = im at each level by Hermite form equality.
CheckResult check_exactness(const Resolution& r);

/// 0 -> M -> I_0 -> I_1 -> I_2 with d[i] = dualize(d_star[i]).
struct DualSequence {
    std::vector<PermModuleSpec> levels;
    std::vector<HeckeSum> d;
    GModule m;
    CycloCharacter chi;
    /// exponent(M), the torsion level the sequence is built for.
    Int exponent;
};

DualSequence dual_sequence(const Resolution& r);

struct PseudoInverse {
    HeckeSum psi;
    Int k;
};

/// Psi with phi o psi = k id and k minimal. Throws NotFiniteIndex if phi has
/// infinite-index image, BoundViolated if k does not divide |G|^2.
PseudoInverse pseudo_inverse(const HeckeSum& phi);

/// The minimal k, computed without asserting the bound.
PseudoInverse pseudo_inverse_unchecked(const HeckeSum& phi);

} // namespace selmer
