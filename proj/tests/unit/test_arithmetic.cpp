#include "selmer/arithmetic.hpp"
#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"
#include "test_data.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace selmer;
using namespace selmer::testing;
using json = nlohmann::json;

namespace {

// val at the place g w0 of x, over every group element g: val_{w0}(g^-1 x).
bool zero_valuation_outside(const ArithmeticFixture& f, const IntVector& x, const std::vector<Int>& s)
{
    const PermGroup& g = f.group;
    for (const auto& pd : f.primes) {
        if (std::find(s.begin(), s.end(), pd.p) != s.end()) {
            continue;
        }
        for (std::size_t e = 0; e < g.order(); ++e) {
            const IntVector y = f.sunits.action(g.inv(e)) * x;
            Int v = 0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                v += pd.vals[i] * y[i];
            }
            if (v != 0) {
                return false;
            }
        }
    }
    return true;
}

void box(const IntVector& orders, long r, const auto& fn)
{
    IntVector x(orders.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            fn(x);
            return;
        }
        const long lo = orders[i] == 0 ? -r : 0;
        const long hi = orders[i] == 0 ? r : orders[i].get_si() - 1;
        for (long a = lo; a <= hi; ++a) {
            x[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
}

void check_sunits_oracle(const ArithmeticFixture& f, const Subgroup& h, const std::vector<Int>& s)
{
    const SubgroupResult r = sunits_for(f, h, s);
    const IntMatrix lat = hnf_column(hconcat(r.incl.matrix, f.sunits.abelian().relations()));
    std::size_t members = 0;
    box(f.sunits.orders(), 3, [&](const IntVector& x) {
        const bool expected = f.sunits.fixed_by(h, x) && zero_valuation_outside(f, x, s);
        CHECK(lattice_contains(lat, x) == expected);
        members += expected;
    });
    CHECK(members > 0);
}

json fixture_json(const std::string& name)
{
    return json::parse(read_file(data_path("fixtures/" + name + ".json")));
}

} // namespace

TEST_CASE("fixtures load with their pools")
{
    const auto q = load_fixture("q_trivial");
    CHECK(q.pool() == std::vector<Int>{2, 3, 5});
    CHECK(q.sunit_names == std::vector<std::string>{"-1", "2", "3", "5"});
    const auto z = load_fixture("q_zeta3_237");
    CHECK(z.pool() == std::vector<Int>{2, 3, 7});
    CHECK(z.prime(3).inertia.order() == 2);
    CHECK(z.prime(7).decomposition.order() == 1);
    CHECK_THROWS_AS(z.prime(5), Error);
    CHECK(z.in_pool(7));
    CHECK_FALSE(z.in_pool(5));
}

TEST_CASE("S-units over Q")
{
    const auto q = load_fixture("q_trivial");
    const Subgroup t = Subgroup::trivial(q.group);
    // -1 and 2: Z/2 x Z
    const SubgroupResult r = sunits_for(q, t, {2});
    CHECK(structure(r.sub) == GroupStructure{{2}, 1});
    const SubgroupResult all = sunits_for(q, t, {2, 3, 5});
    CHECK(structure(all.sub) == GroupStructure{{2}, 3});
    CHECK(structure(sunits_for(q, t, {}).sub) == GroupStructure{{2}, 0});
}

TEST_CASE("S-units fixed by complex conjugation over Q(zeta3) are <-1, 3>")
{
    const auto z = load_fixture("q_zeta3");
    const Subgroup g = Subgroup::whole(z.group);
    const SubgroupResult r = sunits_for(z, g, {3});
    CHECK(structure(r.sub) == GroupStructure{{2}, 1});
    const IntMatrix lat = hnf_column(hconcat(r.incl.matrix, z.sunits.abelian().relations()));
    CHECK(lattice_contains(lat, IntVector{3, 0}));  // -1
    CHECK(lattice_contains(lat, IntVector{1, 2}));  // 3 = zeta6 (1-zeta3)^2
    CHECK_FALSE(lattice_contains(lat, IntVector{0, 1}));
    CHECK_FALSE(lattice_contains(lat, IntVector{1, 0}));
}

TEST_CASE("sunits_for agrees with brute force on every fixture, subgroup and S")
{
    for (const char* name : {"q_trivial", "q_zeta3", "q_zeta3_237"}) {
        const auto f = load_fixture(name);
        const auto pool = f.pool();
        for (const auto& h : some_subgroups(f.group)) {
            for (std::size_t mask = 0; mask < (1u << pool.size()); ++mask) {
                std::vector<Int> s;
                for (std::size_t i = 0; i < pool.size(); ++i) {
                    if (mask >> i & 1) {
                        s.push_back(pool[i]);
                    }
                }
                CAPTURE(name);
                CAPTURE(mask);
                check_sunits_oracle(f, h, s);
            }
        }
    }
}

TEST_CASE("divisor maps")
{
    const auto q = load_fixture("q_trivial");
    const Subgroup t = Subgroup::trivial(q.group);
    const AbHom d3 = divisor_map(q, t, 3);
    const IntMatrix units = sunits_for(q, t, {2, 3, 5}).incl.matrix;
    // images of -1, 2, 3, 5 through the inclusion
    for (std::size_t j = 0; j < units.cols(); ++j) {
        Int v = units(2, j);
        CHECK(d3.matrix.column(j) == IntVector{v});
    }
    const auto z = load_fixture("q_zeta3_237");
    CHECK_THROWS_AS(divisor_map(z, Subgroup::trivial(z.group), 3), Error);
    const AbHom d7 = divisor_map(z, Subgroup::trivial(z.group), 7);
    CHECK(d7.codomain.ngens() == 2);
    const AbHom d7g = divisor_map(z, Subgroup::whole(z.group), 7);
    // 7 = (3+zeta3)(2-zeta3) up to units: one place of Q below.
    CHECK(d7g.codomain.ngens() == 1);
}

TEST_CASE("divisor_matrix is equivariant")
{
    for (const char* name : {"q_trivial", "q_zeta3", "q_zeta3_237"}) {
        const auto f = load_fixture(name);
        for (const auto& pd : f.primes) {
            const IntMatrix dm = divisor_matrix(f, pd.p);
            const CosetSpace cs = left_cosets(pd.decomposition);
            for (std::size_t g = 0; g < f.group.order(); ++g) {
                IntMatrix perm(cs.size(), cs.size());
                for (std::size_t c = 0; c < cs.size(); ++c) {
                    perm(cs.act(g, c), c) = 1;
                }
                const IntMatrix lhs = dm * f.sunits.action(g);
                const IntMatrix rhs = perm * dm;
                // the torsion column carries no valuation
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("spanning check")
{
    auto z = load_fixture("q_zeta3_237");
    const std::vector<Subgroup> blocks{Subgroup::trivial(z.group)};
    CHECK(spanning_check(z, blocks, {}));
    ClassData& cd = z.class_data[0];
    REQUIRE(cd.subgroup == blocks[0]);
    cd.clgroup = FinAbGroup({2});
    for (auto& pc : cd.prime_classes) {
        for (auto& c : pc.classes) {
            c = IntVector{pc.p == 7 ? 1 : 0};
        }
    }
    CHECK_FALSE(spanning_check(z, blocks, {2, 3}));
    CHECK(spanning_check(z, blocks, {7}));
    auto q = load_fixture("q_trivial");
    q.class_data.clear();
    CHECK_THROWS_AS(spanning_check(q, {Subgroup::trivial(q.group)}, {2}), Error);
}

TEST_CASE("inconsistent fixtures are rejected")
{
    auto expect = [](json j, ErrorCode code) {
        try {
            parse_fixture(j.dump());
            FAIL("accepted");
        } catch (const Error& e) {
            INFO(std::string(e.what()));
            CHECK(e.code() == code);
        }
    };
    {
        // conjugation acting trivially on zeta6 contradicts chi = -1
        json j = fixture_json("q_zeta3");
        j["sunits"]["action"][0] = json::array({json::array({"1", "1"}), json::array({"0", "1"})});
        expect(j, ErrorCode::InvariantViolation);
    }
    {
        json j = fixture_json("q_trivial");
        j["primes"][0]["valuations"][0] = "1";
        expect(j, ErrorCode::InvariantViolation);
    }
    {
        json j = fixture_json("q_zeta3_237");
        // inertia not inside decomposition at 7
        j["primes"][2]["inertia"] = json::array({json::array({1, 0})});
        expect(j, ErrorCode::InvariantViolation);
    }
    {
        json j = fixture_json("q_trivial");
        j["primes"][1]["p"] = "4";
        expect(j, ErrorCode::SchemaError);
    }
    {
        json j = fixture_json("q_trivial");
        j.erase("sunits");
        expect(j, ErrorCode::SchemaError);
    }
}

TEST_CASE("S-units are saturated among H-fixed elements")
{
    // sqrt(-3) = zeta3 (1 - zeta3) is not fixed though its square is, so
    // saturation is inside the fixed field only.
    for (const char* name : {"q_trivial", "q_zeta3", "q_zeta3_237"}) {
        const auto f = load_fixture(name);
        for (const auto& h : some_subgroups(f.group)) {
            const SubgroupResult r = sunits_for(f, h, {f.pool().front()});
            const IntMatrix lat = hnf_column(hconcat(r.incl.matrix, f.sunits.abelian().relations()));
            box(f.sunits.orders(), 2, [&](const IntVector& x) {
                if (!f.sunits.fixed_by(h, x)) {
                    return;
                }
                for (long n : {2, 3, 6}) {
                    if (lattice_contains(lat, scale(Int(n), x))) {
                        CHECK(lattice_contains(lat, x));
                    }
                }
            });
        }
    }
}
