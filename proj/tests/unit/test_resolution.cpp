#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"
#include "selmer/resolution.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace selmer;

namespace {

std::vector<std::size_t> ranks(const Resolution& r)
{
    std::vector<std::size_t> out;
    for (const auto& p : r.P) {
        out.push_back(p.rank());
    }
    return out;
}

} // namespace

TEST_CASE("perm_surjection examples")
{
    SUBCASE("Z/2 over the trivial group")
    {
        const PermGroup g(1, {});
        const PermSurjection ps = perm_surjection(GModule::trivial(g, {2}));
        CHECK(ps.P.rank() == 1);
        CHECK(ps.s.matrix == IntMatrix{{1}});
    }
    SUBCASE("mu3 model")
    {
        const PermGroup c2 = cyclic_group(2);
        const GModule n(c2, {3}, {IntMatrix{{2}}});
        const PermSurjection ps = perm_surjection(n);
        CHECK(ps.P.rank() == 2);
        CHECK(ps.P.blocks[0].order() == 1);
        CHECK(ps.s.matrix == IntMatrix{{1, 2}});
    }
    SUBCASE("trivial Z/5 over S3")
    {
        const PermGroup s3 = symmetric_group(3);
        const PermSurjection ps = perm_surjection(GModule::trivial(s3, {5}));
        CHECK(ps.P.rank() == 1);
    }
    SUBCASE("not generating")
    {
        const PermGroup c2 = cyclic_group(2);
        const GModule n = GModule::trivial(c2, {2, 2});
        CHECK_THROWS_AS(perm_surjection(n, {IntVector{1, 0}}), Error);
    }
}

TEST_CASE("resolve examples")
{
    SUBCASE("Kummer")
    {
        const PermGroup g(1, {});
        const Resolution r = resolve(GModule::trivial(g, {2}), CycloCharacter::trivial(g, 2));
        CHECK(ranks(r) == std::vector<std::size_t>{1, 1, 0});
        CHECK(hecke_matrix(r.d_star[0]) == IntMatrix{{2}});
        CHECK(check_exactness(r).ok);
        const DualSequence ds = dual_sequence(r);
        CHECK(ds.d[0].coeffs[0][0] == IntVector{2});
        CHECK(hecke_matrix(ds.d[1]).cols() == 1);
        CHECK(hecke_matrix(ds.d[1]).rows() == 0);
    }
    SUBCASE("Z/3 over Z/2 with the nontrivial character")
    {
        const PermGroup c2 = cyclic_group(2);
        const Resolution r = resolve(GModule::trivial(c2, {3}), CycloCharacter(c2, 3, {2}));
        CHECK(ranks(r) == std::vector<std::size_t>{2, 3, 1});
        CHECK(r.P[1].blocks[0].order() == 2);
        CHECK(r.P[1].blocks[1].order() == 1);
        CHECK(hecke_matrix(r.d_star[0]) == IntMatrix{{1, 0, 3}, {1, 3, 0}});
        CHECK(check_exactness(r).ok);
    }
    SUBCASE("zero module")
    {
        const PermGroup s3 = symmetric_group(3);
        const Resolution r = resolve(GModule::trivial(s3, {}), CycloCharacter::trivial(s3, 1));
        CHECK(ranks(r) == std::vector<std::size_t>{0, 0, 0});
        CHECK(check_exactness(r).ok);
    }
}

TEST_CASE("exactness suite")
{
    for (const auto& g : testing::small_groups()) {
        for (const auto& c : testing::module_suite(g)) {
            CAPTURE(c.name);
            const Resolution r = resolve(c.m, c.chi);
            const CheckResult res = check_exactness(r);
            CHECK_MESSAGE(res.ok, res.failure);
            // Dual sequence composes to zero.
            const DualSequence ds = dual_sequence(r);
            CHECK((hecke_matrix(ds.d[1]) * hecke_matrix(ds.d[0])).is_zero());
        }
    }
}

TEST_CASE("exactness detects a corrupted resolution")
{
    const PermGroup c2 = cyclic_group(2);
    Resolution r = resolve(GModule::trivial(c2, {3}), CycloCharacter(c2, 3, {2}));
    r.d_star[0].coeffs[0][0][0] += 3;
    CHECK_FALSE(check_exactness(r).ok);
}

TEST_CASE("deeper resolutions")
{
    const PermGroup s3 = symmetric_group(3);
    const Resolution r = resolve(GModule::trivial(s3, {2}), CycloCharacter::trivial(s3, 2), 4);
    CHECK(r.P.size() == 5);
    CHECK(check_exactness(r).ok);
}

TEST_CASE("pseudo_inverse examples")
{
    const PermGroup c2 = cyclic_group(2);
    const PermModuleSpec reg = perm_module(c2, {Subgroup::trivial(c2)});
    const PermModuleSpec one = perm_module(c2, {Subgroup::whole(c2)});
    {
        const PseudoInverse pi = pseudo_inverse(hom_to_hecke(reg, reg, Int(2) * IntMatrix::identity(2)));
        CHECK(pi.k == 2);
        CHECK(hecke_matrix(pi.psi) == IntMatrix::identity(2));
    }
    {
        const PseudoInverse pi = pseudo_inverse(hom_to_hecke(reg, reg, IntMatrix::identity(2)));
        CHECK(pi.k == 1);
    }
    {
        const PseudoInverse pi = pseudo_inverse(hom_to_hecke(reg, one, IntMatrix{{1, 1}}));
        CHECK(pi.k == 2);
        CHECK(hecke_matrix(pi.psi) == IntMatrix{{1}, {1}});
    }
    CHECK_THROWS_AS(pseudo_inverse(hom_to_hecke(one, reg, IntMatrix{{1}, {1}})), Error);
}

TEST_CASE("pseudo_inverse gives the minimal k")
{
    std::mt19937 rng(3);
    int tested = 0;
    for (const auto& g : testing::small_groups()) {
        for (int trial = 0; trial < 6; ++trial) {
            const PermModuleSpec a = testing::random_perm_module(rng, g, 3);
            const PermModuleSpec b = testing::random_perm_module(rng, g, 2);
            const HeckeSum phi = testing::random_hecke(rng, a, b, 3);
            if (matrix_rank(hecke_matrix(phi)) != b.rank()) {
                CHECK_THROWS_AS(pseudo_inverse_unchecked(phi), Error);
                continue;
            }
            ++tested;
            const PseudoInverse pi = pseudo_inverse_unchecked(phi);
            CHECK(hecke_matrix(phi) * hecke_matrix(pi.psi) == pi.k * IntMatrix::identity(b.rank()));
            // No proper divisor of k admits an equivariant solution.
            HeckeSum basis = zero_hecke(b, a);
            std::vector<IntVector> cols;
            for (std::size_t t = 0; t < basis.coeffs.size(); ++t) {
                for (std::size_t s = 0; s < basis.coeffs[t].size(); ++s) {
                    for (auto& c : basis.coeffs[t][s]) {
                        c = 1;
                        const IntMatrix fe = hecke_matrix(phi) * hecke_matrix(basis);
                        c = 0;
                        IntVector v;
                        for (std::size_t i = 0; i < fe.rows(); ++i) {
                            for (std::size_t j = 0; j < fe.cols(); ++j) {
                                v.push_back(fe(i, j));
                            }
                        }
                        cols.push_back(v);
                    }
                }
            }
            const IntMatrix l = IntMatrix::from_columns(b.rank() * b.rank(), cols);
            for (Int d = 1; d < pi.k; ++d) {
                if (pi.k % d != 0) {
                    continue;
                }
                IntVector target;
                for (std::size_t i = 0; i < b.rank(); ++i) {
                    for (std::size_t j = 0; j < b.rank(); ++j) {
                        target.push_back(i == j ? d : Int(0));
                    }
                }
                CHECK_FALSE(solve_integer(l, target).has_value());
            }
        }
    }
    CHECK(tested > 5);
}
