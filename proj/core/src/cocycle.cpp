#include "selmer/cocycle.hpp"

#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"

#include <fmt/format.h>

namespace selmer {

CocycleSpace cocycle_space(const GModule& m, std::size_t cap)
{
    const PermGroup& g = m.group();
    const std::size_t order = g.order();
    if (order > cap) {
        fail(ErrorCode::CapExceeded, fmt::format("group of order {} exceeds the cocycle cap of {}", order, cap));
    }
    if (!m.is_finite()) {
        fail(ErrorCode::InvalidArgument, "cocycle oracle needs a finite module");
    }
    const std::size_t n = m.rank();
    IntVector cochain_orders;
    for (std::size_t i = 0; i < order; ++i) {
        cochain_orders.insert(cochain_orders.end(), m.orders().begin(), m.orders().end());
    }
    // Row block (a, b) holds c(ab) - c(a) - a c(b).
    IntMatrix delta(order * order * n, order * n);
    IntVector pair_orders;
    for (std::size_t a = 0; a < order; ++a) {
        const IntMatrix& act = m.action(a);
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t row = (a * order + b) * n;
            const std::size_t ab = g.mul(a, b);
            for (std::size_t i = 0; i < n; ++i) {
                delta(row + i, ab * n + i) += 1;
                delta(row + i, a * n + i) -= 1;
                for (std::size_t j = 0; j < n; ++j) {
                    delta(row + i, b * n + j) -= act(i, j);
                }
            }
            pair_orders.insert(pair_orders.end(), m.orders().begin(), m.orders().end());
        }
    }
    const FgAbGroup cochains = FgAbGroup::from_orders(cochain_orders);
    const IntMatrix z1 = kernel(AbHom(cochains, FgAbGroup::from_orders(pair_orders), delta)).incl.matrix;

    IntMatrix b1(order * n, n);
    for (std::size_t a = 0; a < order; ++a) {
        const IntMatrix& act = m.action(a);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                b1(a * n + i, j) = act(i, j) - (i == j ? 1 : 0);
            }
        }
    }
    const IntMatrix& rel = cochains.relations();
    Subquotient h1 = subquotient(hconcat(z1, rel), hconcat(b1, rel));
    return {g, m, z1, b1, std::move(h1)};
}

FinAbGroup h1_finite(const GModule& m, std::size_t cap)
{
    const GroupStructure s = cocycle_space(m, cap).h1.structure();
    if (s.free_rank != 0) {
        fail(ErrorCode::Internal, "first cohomology of a finite module came out infinite");
    }
    return FinAbGroup(s.torsion);
}

namespace {

IntMatrix reduce_mod(const IntMatrix& a, const Int& n)
{
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = mod_floor(out(i, j), n);
        }
    }
    return out;
}

std::optional<IntVector> first_nonzero_column(const IntMatrix& a, const Int& n)
{
    for (std::size_t j = 0; j < a.cols(); ++j) {
        IntVector v = a.column(j);
        for (auto& x : v) {
            x = mod_floor(x, n);
        }
        if (!is_zero(v)) {
            return v;
        }
    }
    return std::nullopt;
}

// g maps basis coset b to perm[b].
std::vector<std::size_t> coset_permutation(const PermModuleSpec& p, std::size_t g)
{
    std::vector<std::size_t> perm(p.rank());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (std::size_t c = 0; c < p.cosets[b].size(); ++c) {
            perm[p.offsets[b] + c] = p.offsets[b] + p.cosets[b].act(g, c);
        }
    }
    return perm;
}

TorsionCheck failed(std::string why, std::optional<IntVector> x)
{
    return {false, std::move(why), std::move(x)};
}

// 0 -> A -f-> B -g-> C -> 0 over Z/n.
TorsionCheck short_exact(const IntMatrix& f, const IntMatrix& g, const Int& n, const std::string& name)
{
    const FgAbGroup a = FgAbGroup::from_orders(IntVector(f.cols(), n));
    const FgAbGroup b = FgAbGroup::from_orders(IntVector(f.rows(), n));
    const FgAbGroup c = FgAbGroup::from_orders(IntVector(g.rows(), n));
    const AbHom fh(a, b, f);
    const AbHom gh(b, c, g);
    if (auto x = first_nonzero_column(kernel(fh).incl.matrix, n)) {
        return failed(fmt::format("{}: first map not injective", name), x);
    }
    for (std::size_t j = 0; j < f.cols(); ++j) {
        if (!c.is_zero(gh(f.column(j)))) {
            return failed(fmt::format("{}: composition not zero", name), unit_vector(f.cols(), j));
        }
    }
    const IntMatrix kg = kernel(gh).incl.matrix;
    for (std::size_t j = 0; j < kg.cols(); ++j) {
        if (!solve(fh, kg.column(j))) {
            return failed(fmt::format("{}: kernel larger than image", name), b.reduce(kg.column(j)));
        }
    }
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (!solve(gh, unit_vector(g.rows(), i))) {
            return failed(fmt::format("{}: second map not surjective", name), unit_vector(g.rows(), i));
        }
    }
    return {};
}

} // namespace

TorsionCheck verify_torsion_exactness(const DualSequence& ds, const Int& n)
{
    if (n < 2) {
        fail(ErrorCode::InvalidArgument, "torsion level must be at least 2");
    }
    if (ds.d.size() < 2) {
        fail(ErrorCode::InvalidArgument, "torsion check needs two dual maps");
    }
    const IntMatrix dd0 = hecke_matrix(ds.d[0]);
    const IntMatrix dd1 = hecke_matrix(ds.d[1]);
    const IntMatrix comp = reduce_mod(dd1 * dd0, n);
    for (std::size_t j = 0; j < comp.cols(); ++j) {
        if (!is_zero(comp.column(j))) {
            return failed("d_1 o d_0 is not zero on I_0[n]", unit_vector(comp.cols(), j));
        }
    }

    const IntMatrix d0s = dd0.transpose();
    const IntMatrix d1s = dd1.transpose();
    const IntMatrix b0 = hnf_column(d0s);
    std::vector<IntVector> coords;
    for (std::size_t j = 0; j < d0s.cols(); ++j) {
        coords.push_back(*echelon_coordinates(b0, d0s.column(j)));
    }
    const IntMatrix c0 = IntMatrix::from_columns(b0.cols(), coords);
    const IntMatrix b2 = hnf_column(d1s);

    TorsionCheck r = short_exact(reduce_mod(b2, n), reduce_mod(c0, n), n, "0 -> P_2'/n -> P_1/n -> P_0'/n -> 0");
    if (!r.ok) {
        return r;
    }
    r = short_exact(reduce_mod(c0.transpose(), n), reduce_mod(b2.transpose(), n), n,
                    "0 -> (P_0'/n)* -> I_1[n] -> (P_2'/n)* -> 0");
    if (!r.ok) {
        return r;
    }

    // On Hom(P/n, Z/n)(chi) the element g acts by chi(g) times the
    // permutation matrix of g, since permutation matrices are orthogonal.
    const CycloCharacter chi =
        ds.chi.modulus() % n == 0 ? ds.chi.reduce(n) : CycloCharacter::trivial(ds.chi.group(), n);
    const PermGroup& g = ds.levels[0].group;
    const IntMatrix* maps[2] = {&dd0, &dd1};
    for (std::size_t i = 0; i < 2; ++i) {
        const IntMatrix& d = *maps[i];
        const PermModuleSpec& src = ds.levels[i];
        const PermModuleSpec& tgt = ds.levels[i + 1];
        for (std::size_t k = 0; k < g.generators().size(); ++k) {
            const std::size_t s = g.generator_index(k);
            const std::vector<std::size_t> ps = coset_permutation(src, s);
            const std::vector<std::size_t> pt = coset_permutation(tgt, s);
            const Int& c = chi.value(s);
            for (std::size_t col = 0; col < d.cols(); ++col) {
                for (std::size_t row = 0; row < d.rows(); ++row) {
                    // (d g)(e_col) against (g d)(e_col), compared in row pt[row].
                    if (mod_floor(c * d(pt[row], ps[col]), n) != mod_floor(c * d(row, col), n)) {
                        return failed(fmt::format("d_{} is not equivariant on the level-n models", i),
                                      unit_vector(d.cols(), col));
                    }
                }
            }
        }
    }
    return {};
}

} // namespace selmer
