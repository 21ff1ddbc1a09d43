#include "selmer/selmer.hpp"

#include <optional>

#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace selmer {

std::string to_string(ConditionKind k)
{
    switch (k) {
    case ConditionKind::Unramified: return "unramified";
    case ConditionKind::Relaxed: return "relaxed";
    case ConditionKind::Custom: return "custom";
    }
    return "?";
}

Condition SelmerSystem::at(const Int& p) const
{
    auto it = entries.find(p);
    return it == entries.end() ? Condition{} : it->second;
}

IntVector H1SGroup::coordinates(const IntVector& x) const
{
    IntVector c = quotient.coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = mod_floor(c[i], orders[i]);
    }
    return c;
}

namespace {

bool contains(const std::vector<Int>& s, const Int& p)
{
    return std::find(s.begin(), s.end(), p) != s.end();
}

void require_same_group(const DualSequence& ds, const ArithmeticFixture& f)
{
    const PermGroup& g = ds.levels.empty() ? ds.m.group() : ds.levels[0].group;
    if (g.degree() != f.group.degree() || g.generators() != f.group.generators()) {
        fail(ErrorCode::InvalidArgument, "dual sequence and fixture use different group presentations");
    }
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    IntMatrix out(0, 0);
    for (const auto& b : blocks) {
        out = direct_sum(out, b);
    }
    return out;
}

IntMatrix repeat_diagonal(const IntMatrix& a, std::size_t times)
{
    return block_diagonal(std::vector<IntMatrix>(times, a));
}

FgAbGroup ambient_group(const ArithmeticFixture& f, std::size_t blocks)
{
    IntVector orders;
    for (std::size_t j = 0; j < blocks; ++j) {
        orders.insert(orders.end(), f.sunits.orders().begin(), f.sunits.orders().end());
    }
    return FgAbGroup::from_orders(orders);
}

// Divisors above p of the level-1 ambient and the lattice of divisors coming
// from level 0 through d_0.
struct DivisorData {
    IntMatrix divisor;
    IntMatrix image;
};

DivisorData divisor_data(const Int& p, const DualSequence& ds, const ArithmeticFixture& f)
{
    const PrimeData& pd = f.prime(p);
    const GModule zp = perm_module(f.group, {pd.decomposition}).module();
    std::vector<IntMatrix> inv;
    for (const auto& h : ds.levels[0].blocks) {
        inv.push_back(invariants(zp, h).incl.matrix);
    }
    const IntMatrix e = hecke_action_matrix(ds.d[0], zp);
    return {repeat_diagonal(divisor_matrix(f, p), ds.levels[1].blocks.size()), e * block_diagonal(inv)};
}

void check_unramified_preconditions(const Int& p, const DualSequence& ds, const ArithmeticFixture& f)
{
    if (ds.exponent % p == 0) {
        fail(ErrorCode::DividesM, fmt::format("{} divides the exponent {} of M", p.get_str(), ds.exponent.get_str()));
    }
    if (!f.prime(p).unramified()) {
        fail(ErrorCode::RamifiedPrime, fmt::format("{} ramifies in {}", p.get_str(), f.splitting_field));
    }
}

} // namespace

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    if (n < 0) {
        n = -n;
    }
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::vector<Int> select_S(const SelmerSystem& system, const ArithmeticFixture& f, const DualSequence& ds,
                          const SPolicy& policy)
{
    std::vector<Int> candidates = f.pool();
    if (policy.pool) {
        for (const auto& p : *policy.pool) {
            f.prime(p);
        }
        std::erase_if(candidates, [&](const Int& p) { return !contains(*policy.pool, p); });
    }
    std::vector<Int> s;
    auto require = [&](const Int& p, const std::string& why) {
        if (!contains(candidates, p)) {
            fail(ErrorCode::MissingPrime, fmt::format("prime {} ({}) is not in the prime pool", p.get_str(), why));
        }
        if (!contains(s, p)) {
            s.push_back(p);
        }
    };
    for (const auto& p : prime_divisors(ds.exponent)) {
        require(p, "divides the exponent of M");
    }
    for (const auto& [p, c] : system.entries) {
        if (c.kind != ConditionKind::Unramified) {
            require(p, to_string(c.kind) + " condition");
        }
    }
    for (const auto& p : policy.extra) {
        require(p, "requested");
    }
    std::sort(s.begin(), s.end());
    const std::vector<Subgroup> blocks = ds.levels.empty() ? std::vector<Subgroup>{} : ds.levels[0].blocks;
    if (spanning_check(f, blocks, s)) {
        return s;
    }
    for (const auto& p : candidates) {
        if (contains(s, p)) {
            continue;
        }
        s.push_back(p);
        std::sort(s.begin(), s.end());
        if (spanning_check(f, blocks, s)) {
            return s;
        }
    }
    fail(ErrorCode::PoolExhausted, "the prime pool does not span the level-0 class groups");
}

IntMatrix level_sunits(const ArithmeticFixture& f, const PermModuleSpec& level, const std::vector<Int>& s)
{
    std::vector<IntMatrix> parts;
    for (const auto& h : level.blocks) {
        parts.push_back(sunits_for(f, h, s).incl.matrix);
    }
    return block_diagonal(parts);
}

IntMatrix sunit_map(const DualSequence& ds, const ArithmeticFixture& f, std::size_t i)
{
    return hecke_action_matrix(ds.d[i], f.sunits);
}

LeakReport sunit_leaks(const DualSequence& ds, const ArithmeticFixture& f, const std::vector<Int>& s)
{
    require_same_group(ds, f);
    LeakReport out;
    const std::size_t n = f.sunits.rank();
    std::vector<std::pair<Int, IntMatrix>> outside;
    for (const auto& pd : f.primes) {
        if (!contains(s, pd.p)) {
            outside.emplace_back(pd.p, divisor_matrix(f, pd.p));
        }
    }
    for (std::size_t i = 0; i < ds.d.size(); ++i) {
        const IntMatrix img = sunit_map(ds, f, i) * level_sunits(f, ds.levels[i], s);
        const PermModuleSpec& tgt = ds.levels[i + 1];
        for (std::size_t col = 0; col < img.cols(); ++col) {
            for (std::size_t j = 0; j < tgt.blocks.size(); ++j) {
                IntVector y(n);
                for (std::size_t r = 0; r < n; ++r) {
                    y[r] = img(j * n + r, col);
                }
                ++out.checked;
                if (!f.sunits.fixed_by(tgt.blocks[j], y)) {
                    out.violations.push_back(
                        fmt::format("d_{} sends level-{} generator {} outside the fixed units of block {}", i, i, col, j));
                }
                for (const auto& [p, dm] : outside) {
                    if (!is_zero(dm * y)) {
                        out.violations.push_back(fmt::format(
                            "d_{} image of level-{} generator {} has valuation above {} in block {}", i, i, col,
                            p.get_str(), j));
                    }
                }
            }
        }
    }
    return out;
}

H1SGroup h1s(const DualSequence& ds, const ArithmeticFixture& f, const std::vector<Int>& s)
{
    require_same_group(ds, f);
    for (const auto& p : s) {
        f.prime(p);
    }
    if (ds.d.size() < 2) {
        fail(ErrorCode::InvalidArgument, "H^1_S needs a dual sequence of depth 2");
    }
    const LeakReport leaks = sunit_leaks(ds, f, s);
    if (!leaks.violations.empty()) {
        fail(ErrorCode::SUnitLeak, leaks.violations.front());
    }
    H1SGroup h;
    h.S = s;
    std::sort(h.S.begin(), h.S.end());
    h.blocks = ds.levels[1].blocks.size();
    h.ambient = ambient_group(f, h.blocks);
    const FgAbGroup target = ambient_group(f, ds.levels[2].blocks.size());
    const IntMatrix w0 = level_sunits(f, ds.levels[0], h.S);
    const IntMatrix w1 = level_sunits(f, ds.levels[1], h.S);
    const IntMatrix a0 = sunit_map(ds, f, 0);
    const IntMatrix a1 = sunit_map(ds, f, 1);
    const IntMatrix& rel = h.ambient.relations();
    const IntMatrix k = kernel(AbHom(FgAbGroup::free(w1.cols()), target, a1 * w1)).incl.matrix;
    h.z1 = hconcat(w1 * k, rel);
    h.b1 = hconcat(a0 * w0, rel);
    h.quotient = subquotient(h.z1, h.b1);
    h.orders = h.quotient.orders;
    for (const auto& d : h.orders) {
        if (d == 0) {
            fail(ErrorCode::Internal, "H^1_S came out infinite");
        }
    }
    h.reps = h.quotient.generators;
    h.group = finite_structure(FgAbGroup::from_orders(h.orders));

    const IntMatrix bottom = hnf_column(h.b1);
    for (std::size_t i = 0; i < h.reps.cols(); ++i) {
        const IntVector x = h.reps.column(i);
        if (!target.is_zero(a1 * x)) {
            fail(ErrorCode::Internal, "H^1_S representative is not a cocycle");
        }
        const Int& d = h.orders[i];
        bool minimal = lattice_contains(bottom, scale(d, x));
        for (const auto& q : prime_divisors(d)) {
            minimal = minimal && !lattice_contains(bottom, scale(d / q, x));
        }
        if (!minimal) {
            fail(ErrorCode::Internal, "H^1_S representative has the wrong order");
        }
    }
    return h;
}

namespace {

// Reduced column echelon basis mod p of the span of gens, when every order is p.
std::optional<IntMatrix> elementary_basis(const IntVector& orders, const IntMatrix& gens)
{
    if (orders.empty() || !is_prime(orders[0])) {
        return std::nullopt;
    }
    const Int p = orders[0];
    for (const auto& d : orders) {
        if (d != p) {
            return std::nullopt;
        }
    }
    const std::size_t n = orders.size();
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        IntVector v = gens.column(j);
        for (auto& x : v) {
            x = mod_floor(x, p);
        }
        rows.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), rows[rank][c].get_mpz_t(), p.get_mpz_t());
        for (auto& x : rows[rank]) {
            x = mod_floor(x * inv, p);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c] != 0) {
                const Int t = rows[r][c];
                for (std::size_t i = 0; i < n; ++i) {
                    rows[r][i] = mod_floor(rows[r][i] - t * rows[rank][i], p);
                }
            }
        }
        ++rank;
    }
    IntMatrix out(n, rank);
    for (std::size_t j = 0; j < rank; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            out(i, j) = rows[j][i];
        }
    }
    return out;
}

} // namespace

bool unramified_test(const IntVector& x, const Int& p, const DualSequence& ds, const ArithmeticFixture& f)
{
    require_same_group(ds, f);
    check_unramified_preconditions(p, ds, f);
    const DivisorData dd = divisor_data(p, ds, f);
    return lattice_contains(hnf_column(dd.image), dd.divisor * x);
}

void validate_custom(const CustomConditionData& c, const H1SGroup& h, const Int& exponent, std::size_t sunit_rank)
{
    if (c.map_matrix.cols() != h.blocks * sunit_rank) {
        fail(ErrorCode::NotWellDefined,
             fmt::format("condition '{}' has {} columns, the level-1 ambient has {} generators", c.name,
                         c.map_matrix.cols(), h.blocks * sunit_rank));
    }
    if (exponent % c.target.exponent() != 0) {
        fail(ErrorCode::NotWellDefined, fmt::format("target of condition '{}' has exponent {} not dividing {}", c.name,
                                                    c.target.exponent().get_str(), exponent.get_str()));
    }
    const std::size_t k = c.target.invariants().size();
    const FgAbGroup quot(k, hconcat(IntMatrix::diagonal(c.target.invariants()), c.subgroup_gens.cols() > 0
                                                                                    ? c.subgroup_gens
                                                                                    : IntMatrix(k, 0)));
    for (std::size_t j = 0; j < h.b1.cols(); ++j) {
        if (!quot.is_zero(c.map_matrix * h.b1.column(j))) {
            fail(ErrorCode::NotWellDefined,
                 fmt::format("condition '{}' sends a coboundary outside its local subgroup", c.name));
        }
    }
}

SelmerGroup selmer_group(const SelmerSystem& system, const DualSequence& ds, const ArithmeticFixture& f,
                         const SPolicy& policy)
{
    SelmerGroup out;
    out.system = system;
    out.S = select_S(system, f, ds, policy);
    for (const auto& p : out.S) {
        const Condition c = system.at(p);
        if (c.kind == ConditionKind::Unramified && (ds.exponent % p == 0 || !f.prime(p).unramified())) {
            fail(ErrorCode::NeedsLocalData,
                 fmt::format("unramified condition at {} needs local data: {}", p.get_str(),
                             ds.exponent % p == 0 ? "it divides the exponent of M" : "it ramifies in N"));
        }
    }
    out.h1 = h1s(ds, f, out.S);
    const H1SGroup& h = out.h1;
    const std::size_t ngen = h.reps.cols();

    // Stack one target per constrained prime; the Selmer group is the kernel.
    std::vector<IntMatrix> images;
    std::vector<FgAbGroup> targets;
    for (const auto& [p, c] : system.entries) {
        if (!contains(out.S, p) && c.kind == ConditionKind::Unramified) {
            out.outcomes.push_back({p, c, "outside S: holds for all of H^1_S", std::vector<bool>(ngen, true)});
        }
    }
    for (const auto& p : out.S) {
        const Condition c = system.at(p);
        ConditionOutcome oc{p, c, "", std::vector<bool>(ngen, true)};
        if (c.kind == ConditionKind::Relaxed) {
            oc.note = "relaxed: no condition";
        } else if (c.kind == ConditionKind::Unramified) {
            const DivisorData dd = divisor_data(p, ds, f);
            const IntMatrix img = dd.divisor * h.reps;
            const FgAbGroup tgt(img.rows(), dd.image);
            for (std::size_t i = 0; i < ngen; ++i) {
                oc.passes[i] = tgt.is_zero(img.column(i));
            }
            oc.note = "unramified: divisor in the image of d_0";
            images.push_back(img);
            targets.push_back(tgt);
        } else {
            const CustomConditionData& cd = f.condition(c.ref);
            if (cd.p != p) {
                fail(ErrorCode::SchemaError, fmt::format("condition '{}' belongs to {}, not {}", cd.name,
                                                         cd.p.get_str(), p.get_str()));
            }
            validate_custom(cd, h, ds.exponent, f.sunits.rank());
            const std::size_t k = cd.target.invariants().size();
            const FgAbGroup tgt(k, hconcat(IntMatrix::diagonal(cd.target.invariants()),
                                           cd.subgroup_gens.cols() > 0 ? cd.subgroup_gens : IntMatrix(k, 0)));
            const IntMatrix img = cd.map_matrix * h.reps;
            for (std::size_t i = 0; i < ngen; ++i) {
                oc.passes[i] = tgt.is_zero(img.column(i));
            }
            oc.note = fmt::format("custom '{}': image in L_v inside {}", cd.name, cd.target.to_string());
            images.push_back(img);
            targets.push_back(tgt);
        }
        out.outcomes.push_back(std::move(oc));
    }
    std::sort(out.outcomes.begin(), out.outcomes.end(),
              [](const ConditionOutcome& a, const ConditionOutcome& b) { return a.p < b.p; });

    IntMatrix stacked(0, ngen);
    IntMatrix rel(0, 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
        stacked = vconcat(stacked, images[i]);
        rel = direct_sum(rel, targets[i].relations());
    }
    const FgAbGroup codomain(stacked.rows(), rel);
    const AbHom phi(FgAbGroup::from_orders(h.orders), codomain, stacked);
    if (!phi.is_well_defined()) {
        fail(ErrorCode::NotWellDefined, "local conditions are not well defined on H^1_S");
    }
    const IntMatrix kgens = kernel(phi).incl.matrix;
    if (const auto basis = elementary_basis(h.orders, kgens)) {
        out.orders = IntVector(basis->cols(), h.orders.empty() ? Int(1) : h.orders[0]);
        out.reps = h.reps * *basis;
    } else {
        const Subquotient sel = subquotient(hconcat(h.reps * kgens, h.b1), h.b1);
        out.orders = sel.orders;
        out.reps = sel.generators;
    }
    out.group = finite_structure(FgAbGroup::from_orders(out.orders));
    return out;
}

} // namespace selmer
