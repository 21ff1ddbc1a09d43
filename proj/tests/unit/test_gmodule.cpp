#include "selmer/errors.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/hecke.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace selmer;

namespace {

// Brute-force Hom(M, Z/e) for M = sum Z/d_i: all tuples (a_i) with d_i a_i = 0 mod e,
// acted on by (g f)(x) = chi(g) f(g^-1 x). Returns the permutation of tuples.
std::vector<IntVector> all_functionals(const IntVector& d, const Int& e)
{
    std::vector<IntVector> out{IntVector()};
    for (const auto& di : d) {
        std::vector<IntVector> next;
        for (const auto& v : out) {
            for (Int a = 0; a < e; ++a) {
                if ((di * a) % e == 0) {
                    IntVector w = v;
                    w.push_back(a);
                    next.push_back(w);
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

GModule random_finite_module(std::mt19937& rng, const PermGroup& g)
{
    // Permutation action on (Z/n)^k from a block of cosets, optionally twisted by -1.
    const auto subs = testing::some_subgroups(g);
    const PermModuleSpec p = perm_module(g, {subs[rng() % subs.size()]});
    const Int n = 2 + rng() % 4;
    return p.module_mod(n);
}

} // namespace

TEST_CASE("module construction checks")
{
    const PermGroup c2 = cyclic_group(2);
    CHECK_NOTHROW(GModule(c2, {3}, {IntMatrix{{2}}}));
    CHECK_THROWS_AS(GModule(c2, {3}, {IntMatrix{{0}}}), Error);
    try {
        GModule(c2, {4}, {IntMatrix{{2}}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonInvertibleAction);
    }
    try {
        // Order 2 generator acting with order 4.
        GModule(c2, {0, 0}, {IntMatrix{{0, -1}, {1, 0}}});
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvariantViolation);
    }
    try {
        GModule(c2, {2}, {IntMatrix{{1, 0}}});
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaError);
    }
    try {
        GModule(c2, {2, 4}, {IntMatrix{{1, 0}, {1, 1}}});
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvariantViolation);
    }
}

TEST_CASE("cyclotomic characters")
{
    const PermGroup c2 = cyclic_group(2);
    const CycloCharacter chi(c2, 3, {2});
    CHECK(chi.value(0) == 1);
    CHECK(chi.value(1) == 2);
    CHECK(chi.image_size() == 2);
    CHECK_THROWS_AS(CycloCharacter(c2, 3, {0}), Error);
    // 3 has order 4 mod 5, not a character of Z/2.
    CHECK_THROWS_AS(CycloCharacter(c2, 5, {3}), Error);
    CHECK(chi.reduce(1).is_trivial());
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
}

TEST_CASE("dual module examples")
{
    SUBCASE("trivial group")
    {
        const PermGroup g(1, {});
        const GModule m = GModule::trivial(g, {2, 4});
        const GModule d = dual_module(m, CycloCharacter::trivial(g, 4));
        CHECK(d.structure() == m.structure());
    }
    SUBCASE("Z/3 over Z/2 with the nontrivial character")
    {
        const PermGroup c2 = cyclic_group(2);
        const GModule m = GModule::trivial(c2, {3});
        const GModule d = dual_module(m, CycloCharacter(c2, 3, {2}));
        CHECK(d.generator_action()[0] == IntMatrix{{2}});
    }
    SUBCASE("permutation action with trivial character")
    {
        const PermGroup s3 = symmetric_group(3);
        const PermModuleSpec p = perm_module(s3, {Subgroup::trivial(s3)});
        const GModule m = p.module_mod(5);
        const GModule d = dual_module(m, CycloCharacter::trivial(s3, 5));
        CHECK(d.generator_action() == m.generator_action());
    }
}

TEST_CASE("dual module against brute-force functionals")
{
    std::mt19937 rng(31);
    for (const auto& g : testing::small_groups()) {
        for (int trial = 0; trial < 4; ++trial) {
            const GModule m = random_finite_module(rng, g);
            const Int e = m.exponent();
            IntVector vals;
            for (const auto& gen : g.generators()) {
                vals.push_back(mod_floor(testing::sign(gen), e));
            }
            const CycloCharacter chi(g, e, vals);
            const GModule d = dual_module(m, chi);
            const auto funcs = all_functionals(m.orders(), e);
            CHECK(Int(funcs.size()) == d.abelian().order());
            // Coordinates of f in the dual basis: f = sum a_i f_i, f_i(e_j) = delta_ij e/d_i.
            for (const auto& f : funcs) {
                IntVector coords(f.size());
                for (std::size_t i = 0; i < f.size(); ++i) {
                    coords[i] = f[i] / (e / m.orders()[i]);
                }
                for (std::size_t s = 0; s < g.order(); ++s) {
                    // (s f)(e_j) = chi(s) f(s^-1 e_j).
                    IntVector sf(f.size());
                    const IntMatrix& b = m.action(g.inv(s));
                    for (std::size_t j = 0; j < f.size(); ++j) {
                        Int acc = 0;
                        for (std::size_t l = 0; l < f.size(); ++l) {
                            acc += f[l] * b(l, j);
                        }
                        sf[j] = mod_floor(chi.value(s) * acc, e);
                    }
                    IntVector expect(f.size());
                    for (std::size_t i = 0; i < f.size(); ++i) {
                        expect[i] = sf[i] / (e / m.orders()[i]);
                    }
                    CHECK(d.act(s, coords) == d.reduce(expect));
                }
            }
        }
    }
}

TEST_CASE("double dual")
{
    const PermGroup c2 = cyclic_group(2);
    const GModule m(c2, {3, 3}, {IntMatrix{{0, 1}, {1, 0}}});
    const CycloCharacter chi(c2, 3, {2});
    const GModule dd = dual_module(dual_module(m, chi), chi);
    CHECK(dd.generator_action() == m.generator_action());

    const PermGroup c4 = cyclic_group(4);
    const GModule m4(c4, {5}, {IntMatrix{{2}}});
    const CycloCharacter chi5(c4, 5, {3});
    CHECK(dual_module(dual_module(m4, chi5), chi5).generator_action() == m4.generator_action());
}

TEST_CASE("invariants")
{
    const PermGroup c2 = cyclic_group(2);
    const PermModuleSpec reg = perm_module(c2, {Subgroup::trivial(c2)});
    SUBCASE("trivial subgroup")
    {
        CHECK(invariants(reg.module(), Subgroup::trivial(c2)).sub.ngens() == 2);
    }
    SUBCASE("regular Z[Z/2]")
    {
        const SubgroupResult inv = invariants(reg.module(), Subgroup::whole(c2));
        CHECK(inv.incl.matrix == IntMatrix{{1}, {1}});
    }
    SUBCASE("coprime free action on nonzero elements")
    {
        const PermGroup c3 = cyclic_group(3);
        const GModule m(c3, {2, 2}, {IntMatrix{{0, 1}, {1, 1}}});
        const SubgroupResult inv = invariants(m, Subgroup::whole(c3));
        CHECK(finite_structure(inv.sub).is_trivial());
    }
    SUBCASE("saturation")
    {
        const PermGroup s3 = symmetric_group(3);
        const PermModuleSpec p = perm_module(s3, {Subgroup::trivial(s3)});
        const SubgroupResult inv = invariants(p.module(), Subgroup::whole(s3));
        CHECK(inv.incl.matrix == IntMatrix::column_vector(IntVector(6, Int(1))));
    }
}
