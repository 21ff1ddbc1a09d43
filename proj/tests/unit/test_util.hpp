#pragma once

#include "selmer/int_matrix.hpp"

#include <random>
#include <vector>

namespace selmer::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

inline void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                            const auto& fn)
{
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        for_each_subset(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

// gcd of all k x k minors; 0 when every minor vanishes.
inline Int determinantal_divisor(const IntMatrix& a, std::size_t k)
{
    Int g = 0;
    std::vector<std::size_t> rows;
    for_each_subset(a.rows(), k, rows, 0, [&](const std::vector<std::size_t>& r) {
        std::vector<std::size_t> cols;
        for_each_subset(a.cols(), k, cols, 0, [&](const std::vector<std::size_t>& c) {
            IntMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    minor(i, j) = a(r[i], c[j]);
                }
            }
            g = gcd(g, determinant(minor));
        });
    });
    return g;
}

// Invariant factors from determinantal divisors d_k / d_{k-1}.
inline IntVector invariant_factors_by_minors(const IntMatrix& a)
{
    IntVector out;
    Int prev = 1;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        const Int dk = determinantal_divisor(a, k);
        if (dk == 0) {
            break;
        }
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

} // namespace selmer::testing

#include "selmer/gmodule.hpp"
#include "selmer/hecke.hpp"
#include "selmer/perm_group.hpp"

namespace selmer::testing {

inline std::vector<PermGroup> small_groups()
{
    return {PermGroup(1, {}), cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3),
            dihedral_group(4)};
}

// Cyclic subgroups plus the whole group, deduplicated.
inline std::vector<Subgroup> some_subgroups(const PermGroup& g)
{
    std::vector<Subgroup> out{Subgroup::trivial(g)};
    auto add = [&](Subgroup s) {
        for (const auto& t : out) {
            if (t == s) {
                return;
            }
        }
        out.push_back(std::move(s));
    };
    for (const auto& e : g.elements()) {
        add(Subgroup::generated(g, {e}));
    }
    add(Subgroup::whole(g));
    return out;
}

inline PermModuleSpec random_perm_module(std::mt19937& rng, const PermGroup& g, std::size_t max_blocks)
{
    const auto subs = some_subgroups(g);
    std::vector<Subgroup> blocks;
    const std::size_t nb = 1 + rng() % max_blocks;
    for (std::size_t i = 0; i < nb; ++i) {
        blocks.push_back(subs[rng() % subs.size()]);
    }
    return perm_module(g, std::move(blocks));
}

inline HeckeSum random_hecke(std::mt19937& rng, const PermModuleSpec& src, const PermModuleSpec& tgt, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    HeckeSum t = zero_hecke(src, tgt);
    for (auto& row : t.coeffs) {
        for (auto& c : row) {
            for (auto& x : c) {
                x = dist(rng);
            }
        }
    }
    return t;
}

// Sum of the H-translates of r: always H-fixed.
inline IntVector orbit_sum(const GModule& v, const Subgroup& h, const IntVector& r)
{
    IntVector x = zero_vector(v.rank());
    for (auto i : h.indices()) {
        x = add(x, v.action(i) * r);
    }
    return v.reduce(x);
}

} // namespace selmer::testing

#include <string>

namespace selmer::testing {

inline int sign(const Perm& p)
{
    int s = 1;
    std::vector<bool> seen(p.degree(), false);
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        std::size_t len = 0;
        for (std::uint32_t x = i; !seen[x]; x = p(x)) {
            seen[x] = true;
            ++len;
        }
        if (len > 0 && len % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

inline CycloCharacter sign_character(const PermGroup& g, const Int& modulus)
{
    IntVector vals;
    for (const auto& gen : g.generators()) {
        vals.push_back(mod_floor(sign(gen), modulus));
    }
    return CycloCharacter(g, modulus, vals);
}

struct ModuleCase {
    std::string name;
    GModule m;
    CycloCharacter chi;
};

inline std::string group_name(const PermGroup& g)
{
    if (g.order() == 1) {
        return "1";
    }
    if (g.order() == 6) {
        return "S3";
    }
    if (g.order() == 8) {
        return "D4";
    }
    return "Z" + std::to_string(g.order());
}

// The resolution test modules over one group.
inline std::vector<ModuleCase> module_suite(const PermGroup& g)
{
    std::vector<ModuleCase> out;
    const std::string gn = group_name(g);
    auto add = [&](std::string name, GModule m, CycloCharacter chi) {
        out.push_back({gn + ":" + name, std::move(m), std::move(chi)});
    };
    add("Z2", GModule::trivial(g, {2}), CycloCharacter::trivial(g, 2));
    add("Z3-sign-chi", GModule::trivial(g, {3}), sign_character(g, 3));
    add("Z4-sign-chi", GModule::trivial(g, {4}), sign_character(g, 4));
    add("Z5", GModule::trivial(g, {5}), CycloCharacter::trivial(g, 5));
    add("Z2+Z4", GModule::trivial(g, {2, 4}), sign_character(g, 4));
    {
        std::vector<IntMatrix> acts;
        for (const auto& gen : g.generators()) {
            acts.push_back(IntMatrix{{sign(gen) > 0 ? 1 : 2}});
        }
        add("Z3-sign-action", GModule(g, {3}, acts), CycloCharacter::trivial(g, 3));
    }
    const auto subs = some_subgroups(g);
    const Subgroup& h = subs.size() > 2 ? subs[1] : subs.back();
    add("perm-mod2", perm_module(g, {h}).module_mod(2), CycloCharacter::trivial(g, 2));
    add("perm-mod3", perm_module(g, {h}).module_mod(3), sign_character(g, 3));
    add("regular-mod3", perm_module(g, {Subgroup::trivial(g)}).module_mod(3), sign_character(g, 3));
    {
        std::vector<IntMatrix> acts;
        for (const auto& gen : g.generators()) {
            acts.push_back(IntMatrix{{sign(gen) > 0 ? 1 : 3}});
        }
        add("Z4-sign-action", GModule(g, {4}, acts), sign_character(g, 4));
    }
    return out;
}

} // namespace selmer::testing

namespace selmer::testing {

struct GridGroup {
    std::string name;
    PermGroup g;
    /// Invariant factors of the abelianization.
    IntVector ab;
};

// Every group up to order 8 up to isomorphism, as permutation groups.
inline std::vector<GridGroup> cocycle_groups()
{
    return {
        {"1", PermGroup(1, {}), {}},
        {"Z2", cyclic_group(2), {2}},
        {"Z3", cyclic_group(3), {3}},
        {"Z4", cyclic_group(4), {4}},
        {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2)), {2, 2}},
        {"Z5", cyclic_group(5), {5}},
        {"Z6", cyclic_group(6), {6}},
        {"S3", symmetric_group(3), {2}},
        {"Z7", cyclic_group(7), {7}},
        {"Z8", cyclic_group(8), {8}},
        {"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4)), {2, 4}},
        {"Z2^3", direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)), {2, 2, 2}},
        {"D4", dihedral_group(4), {2, 2}},
        {"Q8", quaternion_group(), {2, 2}},
    };
}

// Generator orders of the finite abelian groups of order at most 9.
inline std::vector<IntVector> small_abelian_orders()
{
    return {{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}, {9}, {3, 3}};
}

// Hom(A, M) for A, M given by invariant factors / generator orders.
inline FinAbGroup hom_group(const IntVector& a, const IntVector& m)
{
    IntVector orders;
    for (const auto& x : a) {
        for (const auto& y : m) {
            orders.push_back(gcd(x, y));
        }
    }
    return finite_structure(FgAbGroup::from_orders(orders));
}

inline std::vector<IntVector> all_elements(const IntVector& orders)
{
    std::vector<IntVector> out{IntVector(orders.size())};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<IntVector> next;
        for (const auto& v : out) {
            for (Int a = 0; a < orders[i]; ++a) {
                IntVector w = v;
                w[i] = a;
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

// |Z^1| by trying every assignment of values to the generators, extending
// along the BFS tree and testing the cocycle identity on all pairs.
inline Int brute_force_cocycle_count(const GModule& m)
{
    const PermGroup& g = m.group();
    const auto elts = all_elements(m.orders());
    const std::size_t k = g.generators().size();
    Int count = 0;
    std::vector<std::size_t> choice(k, 0);
    while (true) {
        std::vector<IntVector> c(g.order());
        c[0] = zero_vector(m.rank());
        for (std::size_t i = 1; i < g.order(); ++i) {
            const std::size_t s = g.parent_generator(i);
            c[i] = m.reduce(add(elts[choice[s]], m.action(g.generator_index(s)) * c[g.parent(i)]));
        }
        bool ok = true;
        for (std::size_t a = 0; a < g.order() && ok; ++a) {
            for (std::size_t b = 0; b < g.order() && ok; ++b) {
                ok = c[g.mul(a, b)] == m.reduce(add(c[a], m.action(a) * c[b]));
            }
        }
        if (ok) {
            ++count;
        }
        std::size_t pos = 0;
        while (pos < k && ++choice[pos] == elts.size()) {
            choice[pos++] = 0;
        }
        if (pos == k) {
            break;
        }
    }
    return count;
}

// |B^1| = |M| / |M^G| by enumeration.
inline Int brute_force_coboundary_count(const GModule& m)
{
    const auto elts = all_elements(m.orders());
    Int fixed = 0;
    for (const auto& x : elts) {
        if (m.fixed_by(Subgroup::whole(m.group()), x)) {
            ++fixed;
        }
    }
    return Int(static_cast<unsigned long>(elts.size())) / fixed;
}

} // namespace selmer::testing
