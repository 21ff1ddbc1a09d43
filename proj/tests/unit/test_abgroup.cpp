#include "selmer/abgroup.hpp"
#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace selmer;

namespace {

// All elements of a finite group given by orders, as coordinate vectors.
std::vector<IntVector> enumerate_orders(const IntVector& orders)
{
    std::vector<IntVector> out{IntVector(orders.size())};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<IntVector> next;
        for (const auto& v : out) {
            for (long k = 0; k < orders[i]; ++k) {
                IntVector w = v;
                w[i] = k;
                next.push_back(w);
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("kernel examples")
{
    SUBCASE("times two on Z")
    {
        AbHom f(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
        CHECK(kernel(f).sub.ngens() == 0);
    }
    SUBCASE("difference mod 3")
    {
        AbHom f(FgAbGroup::free(2), FgAbGroup::from_orders({3}), IntMatrix{{1, -1}});
        const SubgroupResult k = kernel(f);
        CHECK(k.sub.ngens() == 2);
        CHECK(same_lattice(k.incl.matrix, IntMatrix{{1, 3}, {1, 0}}));
    }
    SUBCASE("zero map")
    {
        AbHom f(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{0}});
        CHECK(kernel(f).incl.matrix == IntMatrix{{1}});
    }
}

TEST_CASE("image_quotient examples")
{
    {
        AbHom f(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
        CHECK(finite_structure(image_quotient(f).coker).invariants() == IntVector{2});
    }
    {
        AbHom f(FgAbGroup::free(2), FgAbGroup::free(2), IntMatrix{{2, 0}, {0, 3}});
        CHECK(finite_structure(image_quotient(f).coker).invariants() == IntVector{6});
    }
    {
        AbHom f(FgAbGroup::free(3), FgAbGroup::free(3), IntMatrix::identity(3));
        CHECK(finite_structure(image_quotient(f).coker).is_trivial());
    }
}

TEST_CASE("solve examples")
{
    AbHom two(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{2}});
    CHECK(*solve(two, {4}) == IntVector{2});
    CHECK_FALSE(solve(two, {3}).has_value());

    AbHom f(FgAbGroup::free(2), FgAbGroup::from_orders({6}), IntMatrix{{1, 2}});
    auto x = solve(f, {5});
    REQUIRE(x.has_value());
    CHECK(f.codomain.equal(f(*x), {5}));
}

TEST_CASE("solve is complete on finite codomains")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const IntVector dom_orders{Int(1 + rng() % 4), Int(2 + rng() % 3)};
        const IntVector cod_orders{Int(2 + rng() % 5), Int(2 + rng() % 3)};
        const FgAbGroup dom = FgAbGroup::from_orders(dom_orders);
        const FgAbGroup cod = FgAbGroup::from_orders(cod_orders);
        // Well-defined maps need d_j * A_ij divisible by e_i.
        IntMatrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const Int step = cod_orders[i] / gcd(cod_orders[i], dom_orders[j]);
                a(i, j) = step * Int(static_cast<long>(rng() % 4));
            }
        }
        AbHom f(dom, cod, a);
        REQUIRE(f.is_well_defined());

        std::vector<IntVector> images;
        for (const auto& x : enumerate_orders(dom_orders)) {
            images.push_back(cod.reduce(f(x)));
        }
        for (const auto& y : enumerate_orders(cod_orders)) {
            bool hit = false;
            for (const auto& im : images) {
                hit = hit || im == cod.reduce(y);
            }
            auto x = solve(f, y);
            CHECK(x.has_value() == hit);
            if (x) {
                CHECK(cod.equal(f(*x), y));
            }
        }

        // Kernel order times image order is the domain order.
        const SubgroupResult k = kernel(f);
        CHECK(k.incl.is_well_defined());
        for (std::size_t j = 0; j < k.sub.ngens(); ++j) {
            CHECK(cod.is_zero(f(k.incl.matrix.column(j))));
        }
        std::size_t distinct = 0;
        for (const auto& y : enumerate_orders(cod_orders)) {
            for (const auto& im : images) {
                if (im == cod.reduce(y)) {
                    ++distinct;
                    break;
                }
            }
        }
        CHECK(finite_structure(k.sub).order() * distinct == dom.order());
        CHECK(finite_structure(image_quotient(f).coker).order() * distinct == cod.order());
    }
}

TEST_CASE("lattice rank additivity")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix a = testing::random_matrix(rng, 3, 4, 3);
        AbHom f(FgAbGroup::free(4), FgAbGroup::free(3), a);
        const SubgroupResult k = kernel(f);
        CHECK((a * k.incl.matrix).is_zero());
        CHECK(k.sub.ngens() + matrix_rank(a) == 4);
    }
}

TEST_CASE("structure and simplify")
{
    const FgAbGroup g(2, IntMatrix{{2, 0}, {0, 3}});
    CHECK(structure(g) == GroupStructure{{6}, 0});
    const SimplifiedGroup s = simplify(g);
    CHECK(s.orders == IntVector{6});
    CHECK(s.coordinates({1, 0}) != IntVector{0});
    CHECK(g.equal(s.from_simple * s.coordinates({1, 1}), {1, 1}));

    const FgAbGroup h(3, IntMatrix{{2}, {0}, {0}});
    CHECK(structure(h) == GroupStructure{{2}, 2});
    CHECK(h.order() == 0);
    CHECK(FgAbGroup::from_orders({2, 4}).order() == 8);
}

TEST_CASE("FinAbGroup printing")
{
    CHECK(FinAbGroup().to_string() == "0");
    CHECK(FinAbGroup({3}).to_string() == "Z/3");
    CHECK(FinAbGroup({2, 2}).to_string() == "(Z/2)^2");
    CHECK(FinAbGroup({2, 4}).to_string() == "Z/2 × Z/4");
    CHECK_THROWS_AS(FinAbGroup({2, 3}), Error);
}

TEST_CASE("subquotient")
{
    // 2Z + 3Z sits in Z; quotient of Z^2 by <(2,0),(0,4)> on top <(1,0),(0,2)>.
    const Subquotient q = subquotient(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{2, 0}, {0, 4}});
    CHECK(q.structure() == GroupStructure{{2, 2}, 0});
    CHECK(q.contains({1, 2}));
    CHECK_FALSE(q.contains({0, 1}));
    for (std::size_t j = 0; j < q.generators.cols(); ++j) {
        IntVector c = q.coordinates(q.generators.column(j));
        CHECK(c == unit_vector(q.orders.size(), j));
    }
    CHECK(is_zero(q.coordinates({2, 4})));
    CHECK_THROWS_AS(subquotient(IntMatrix{{2}}, IntMatrix{{3}}), Error);
}
