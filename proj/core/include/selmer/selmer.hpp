#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/arithmetic.hpp"
#include "selmer/resolution.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace selmer {

enum class ConditionKind { Unramified, Relaxed, Custom };

std::string to_string(ConditionKind k);

struct Condition {
    ConditionKind kind = ConditionKind::Unramified;
    /// Name of the fixture local condition, for Custom.
    std::string ref;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Primes absent from `entries` carry the unramified condition.
struct SelmerSystem {
    std::map<Int, Condition> entries;

    Condition at(const Int& p) const;
};

/// H^1_S = Z^1_S / B^1_S inside the level-1 ambient U^{b_1}, U the fixture
/// S-unit module and b_1 the number of level-1 blocks.
struct H1SGroup {
    std::vector<Int> S;
    FinAbGroup group;
    /// Factor orders, aligned with the columns of reps.
    IntVector orders;
    /// Representatives in ambient coordinates, reduced modulo B^1_S.
    IntMatrix reps;
    FgAbGroup ambient;
    std::size_t blocks = 0;
    /// Spanning columns of the lattices over Z^1_S and B^1_S (ambient
    /// relations included).
    IntMatrix z1;
    IntMatrix b1;
    Subquotient quotient;

    /// Coordinates of the class of x (an element of Z^1_S) along `orders`.
    IntVector coordinates(const IntVector& x) const;
};

struct ConditionOutcome {
    Int p;
    Condition condition;
    std::string note;
    /// Whether each H^1_S generator satisfies the condition.
    std::vector<bool> passes;
};

struct SelmerGroup {
    FinAbGroup group;
    IntVector orders;
    IntMatrix reps;
    SelmerSystem system;
    std::vector<Int> S;
    H1SGroup h1;
    std::vector<ConditionOutcome> outcomes;
};

/// Primes dividing n, ascending.
std::vector<Int> prime_divisors(Int n);

struct SPolicy {
    /// Restricts the fixture pool.
    std::optional<std::vector<Int>> pool;
    /// Forced into S.
    std::vector<Int> extra;
};

/// Non-unramified primes, primes dividing exponent(M) and policy.extra, then
/// pool primes in ascending order until the level-0 class groups are spanned.
std::vector<Int> select_S(const SelmerSystem& system, const ArithmeticFixture& f, const DualSequence& ds,
                          const SPolicy& policy = {});

/// Block-diagonal basis of the sum of sunits_for(H_j, S) over the level's blocks.
IntMatrix level_sunits(const ArithmeticFixture& f, const PermModuleSpec& level, const std::vector<Int>& s);

/// Matrix of d_i on the S-unit ambients: U^{b_i} -> U^{b_{i+1}}.
IntMatrix sunit_map(const DualSequence& ds, const ArithmeticFixture& f, std::size_t i);

struct LeakReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
};

/// Images of the level-i S-unit generators under d_i, for every i: each must
/// be fixed by its target block and have zero valuation above Sigma \ S.
LeakReport sunit_leaks(const DualSequence& ds, const ArithmeticFixture& f, const std::vector<Int>& s);

/// Throws SUnitLeak on any violation, MissingPrime if S leaves the pool.
H1SGroup h1s(const DualSequence& ds, const ArithmeticFixture& f, const std::vector<Int>& s);

/// Whether the divisor of x above p lies in the image of d_0 on the level-0
/// divisor lattices. Throws DividesM or RamifiedPrime.
bool unramified_test(const IntVector& x, const Int& p, const DualSequence& ds, const ArithmeticFixture& f);

/// Throws NotWellDefined unless the condition's map has the right shape,
/// sends B^1_S into L_v and has a target killed by exponent(M).
void validate_custom(const CustomConditionData& c, const H1SGroup& h, const Int& exponent, std::size_t sunit_rank);

/// Throws NeedsLocalData for an unramified condition at a prime of S that
/// divides exponent(M) or ramifies in N.
SelmerGroup selmer_group(const SelmerSystem& system, const DualSequence& ds, const ArithmeticFixture& f,
                         const SPolicy& policy = {});

} // namespace selmer
