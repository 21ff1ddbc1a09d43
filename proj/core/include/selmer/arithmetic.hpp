#pragma once

#include "selmer/abgroup.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/perm_group.hpp"

#include <string>
#include <vector>

namespace selmer {

/// Splitting data at a rational prime p, for a fixed prime w0 of N above p.
struct PrimeData {
    Int p;
    Subgroup decomposition;
    Subgroup inertia;
    /// val_{w0} of each S-unit generator; 0 on the torsion generator.
    IntVector vals;

    bool unramified() const { return inertia.order() == 1; }
};

struct PlaceClasses {
    Int p;
    /// One class vector per double coset H \ G / D_p.
    std::vector<IntVector> classes;
};

/// Cl(L) for L = N^H, with the classes of the primes of L above the pool.
struct ClassData {
    Subgroup subgroup;
    FinAbGroup clgroup;
    std::vector<PlaceClasses> prime_classes;
};

/// A local condition L_v inside A_v, given by the images of the level-1
/// S-unit generators (one column per level-1 block and fixture generator).
struct CustomConditionData {
    std::string name;
    Int p;
    FinAbGroup target;
    IntMatrix map_matrix;
    IntMatrix subgroup_gens;
};

struct ArithmeticFixture {
    std::string name;
    std::string base_field;
    std::string splitting_field;
    PermGroup group;
    /// Cyclotomic character on the roots of unity of N.
    CycloCharacter chi;
    /// Z_{Sigma,N}^x: generator 0 is a root of unity of order t, the rest free.
    GModule sunits;
    std::vector<std::string> sunit_names;
    /// Sorted by p.
    std::vector<PrimeData> primes;
    std::vector<ClassData> class_data;
    std::vector<CustomConditionData> local_conditions;

    std::vector<Int> pool() const;
    bool in_pool(const Int& p) const;
    /// Throws MissingPrime.
    const PrimeData& prime(const Int& p) const;
    /// nullptr when absent.
    const ClassData* class_data_for(const Subgroup& h) const;
    /// Throws SchemaError when no condition carries that name.
    const CustomConditionData& condition(const std::string& name) const;
};

/// Every structural invariant of a fixture; throws SchemaError or
/// InvariantViolation naming the first failure.
void validate_fixture(const ArithmeticFixture& f);

/// Row i is val at the place tau_i w0 for the left coset reps tau_i of D_p,
/// i.e. vals * rho(tau_i^-1). G-equivariant onto Z[G/D_p].
IntMatrix divisor_matrix(const ArithmeticFixture& f, const Int& p);

/// {u fixed by H : val_w(u) = 0 for every w above Sigma \ S}.
SubgroupResult sunits_for(const ArithmeticFixture& f, const Subgroup& h, const std::vector<Int>& s);

/// From the H-fixed S-units to Z^{H \ G / D_p}. Throws RamifiedPrime if
/// p ramifies in N.
AbHom divisor_map(const ArithmeticFixture& f, const Subgroup& h, const Int& p);

/// True iff for every block subgroup the classes of the primes above S
/// generate Cl(N^H). Throws MissingClassData.
bool spanning_check(const ArithmeticFixture& f, const std::vector<Subgroup>& blocks, const std::vector<Int>& s);

bool is_prime(const Int& p);

} // namespace selmer
