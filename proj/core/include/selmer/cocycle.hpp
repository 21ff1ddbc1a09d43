#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/resolution.hpp"

#include <optional>
#include <string>

namespace selmer {

inline constexpr std::size_t kCocycleGroupCap = 64;

/// Inhomogeneous 1-cochains are vectors in M^|G|, block g holding c(g).
struct CocycleSpace {
    PermGroup group;
    GModule module;
    /// Spanning columns of Z^1 and B^1 in cochain coordinates.
    IntMatrix z1;
    IntMatrix b1;
    Subquotient h1;
};

/// Throws CapExceeded if |G| > cap, InvalidArgument if M is infinite.
CocycleSpace cocycle_space(const GModule& m, std::size_t cap = kCocycleGroupCap);
FinAbGroup h1_finite(const GModule& m, std::size_t cap = kCocycleGroupCap);

struct TorsionCheck {
    bool ok = true;
    std::string failure;
    /// The offending element, in coordinates of the level named in `failure`.
    std::optional<IntVector> counterexample;
};

/// At level n: D1 D0 = 0 on I_0[n]; 0 -> P_2'/n -> P_1/n -> P_0'/n -> 0
/// exact, with P_0' = im(d_0*) and P_2' = im(d_1*); the Z/n-dual sequence
/// exact in the middle; every map equivariant on the twisted torsion models.
TorsionCheck verify_torsion_exactness(const DualSequence& ds, const Int& n);

} // namespace selmer
