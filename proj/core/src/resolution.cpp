#include "selmer/resolution.hpp"

#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"

#include <fmt/format.h>

namespace selmer {

PermSurjection perm_surjection(const GModule& n, const std::vector<IntVector>& generators)
{
    const PermGroup& g = n.group();
    std::vector<Subgroup> blocks;
    std::vector<IntVector> images;
    for (const auto& raw : generators) {
        const IntVector x = n.reduce(raw);
        if (n.abelian().is_zero(x)) {
            continue;
        }
        Subgroup stab = stabilizer(g, [&](std::size_t e) { return n.act(e, x) == x; });
        const CosetSpace cs = left_cosets(stab);
        for (auto rep : cs.reps) {
            images.push_back(n.act(rep, x));
        }
        blocks.push_back(std::move(stab));
    }
    PermModuleSpec p = perm_module(g, std::move(blocks));
    AbHom s(FgAbGroup::free(p.rank()), n.abelian(), IntMatrix::from_columns(n.rank(), images));
    if (!(structure(image_quotient(s).coker) == GroupStructure{})) {
        fail(ErrorCode::NotGenerating, "the G-orbits of the generators do not span the module");
    }
    return {std::move(p), std::move(s)};
}

PermSurjection perm_surjection(const GModule& n)
{
    // Standard generators, skipping those already in the G-span of earlier ones.
    std::vector<IntVector> gens;
    std::vector<IntVector> span;
    for (std::size_t i = 0; i < n.rank(); ++i) {
        const IntVector e = unit_vector(n.rank(), i);
        if (!span.empty()) {
            const AbHom f(FgAbGroup::free(span.size()), n.abelian(), IntMatrix::from_columns(n.rank(), span));
            if (solve(f, e)) {
                continue;
            }
        }
        gens.push_back(e);
        for (std::size_t g = 0; g < n.group().order(); ++g) {
            span.push_back(n.act(g, e));
        }
    }
    return perm_surjection(n, gens);
}

std::pair<GModule, IntMatrix> kernel_module(const PermModuleSpec& p, const IntMatrix& f, const FgAbGroup& codomain)
{
    const IntMatrix basis = kernel(AbHom(FgAbGroup::free(p.rank()), codomain, f)).incl.matrix;
    const PermGroup& g = p.group;
    std::vector<IntMatrix> acts;
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const IntMatrix moved = p.action_matrix(g.generator_index(k)) * basis;
        std::vector<IntVector> cols;
        for (std::size_t j = 0; j < moved.cols(); ++j) {
            auto c = echelon_coordinates(basis, moved.column(j));
            if (!c) {
                fail(ErrorCode::Internal, "kernel is not stable under the group action");
            }
            cols.push_back(std::move(*c));
        }
        acts.push_back(IntMatrix::from_columns(basis.cols(), cols));
    }
    GModule k(g, IntVector(basis.cols(), Int(0)), std::move(acts));
    return {std::move(k), basis};
}

Resolution resolve(const GModule& m, const CycloCharacter& chi, std::size_t depth)
{
    if (!m.is_finite()) {
        fail(ErrorCode::InvalidArgument, "resolutions are built for finite modules");
    }
    Resolution r;
    r.m = m;
    r.chi = chi.modulus() == m.exponent() ? chi : chi.reduce(m.exponent());
    r.mstar = dual_module(m, r.chi);
    PermSurjection top = perm_surjection(r.mstar);
    r.P.push_back(top.P);
    r.s = top.s;
    auto [kmod, basis] = kernel_module(top.P, top.s.matrix, r.mstar.abelian());
    for (std::size_t i = 0; i < depth; ++i) {
        PermSurjection next = perm_surjection(kmod);
        const IntMatrix d = basis * next.s.matrix;
        r.d_star.push_back(hom_to_hecke(next.P, r.P.back(), d));
        auto km = kernel_module(next.P, d, FgAbGroup::free(r.P.back().rank()));
        r.P.push_back(std::move(next.P));
        kmod = std::move(km.first);
        basis = std::move(km.second);
    }
    return r;
}

namespace {

std::vector<IntVector> enumerate_elements(const IntVector& orders)
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

} // namespace

CheckResult check_exactness(const Resolution& r)
{
    auto failed = [](std::string why) { return CheckResult{false, std::move(why)}; };
    if (!(structure(image_quotient(r.s).coker) == GroupStructure{})) {
        return failed("s is not surjective");
    }
    const FgAbGroup& mstar = r.mstar.abelian();
    if (mstar.order() <= 4096) {
        for (const auto& y : enumerate_elements(r.mstar.orders())) {
            auto x = solve(r.s, y);
            if (!x || !mstar.equal(r.s(*x), y)) {
                return failed(fmt::format("no preimage under s for {}", to_string(y)));
            }
        }
    }
    for (std::size_t g = 0; g < r.P[0].group.order(); ++g) {
        const IntMatrix lhs = r.s.matrix * r.P[0].action_matrix(g);
        const IntMatrix rhs = r.mstar.action(g) * r.s.matrix;
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            if (!mstar.equal(lhs.column(j), rhs.column(j))) {
                return failed("s is not equivariant");
            }
        }
    }
    std::vector<IntMatrix> d;
    for (const auto& t : r.d_star) {
        d.push_back(hecke_matrix(t));
    }
    if (!d.empty()) {
        const IntMatrix sd = r.s.matrix * d[0];
        for (std::size_t j = 0; j < sd.cols(); ++j) {
            if (!mstar.is_zero(sd.column(j))) {
                return failed("s o d_0* is not zero");
            }
        }
        if (!same_lattice(kernel(r.s).incl.matrix, d[0])) {
            return failed("ker(s) differs from im(d_0*)");
        }
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (!(d[i] * d[i + 1]).is_zero()) {
            return failed(fmt::format("d_{}* o d_{}* is not zero", i, i + 1));
        }
        if (!same_lattice(kernel_basis(d[i]), d[i + 1])) {
            return failed(fmt::format("ker(d_{}*) differs from im(d_{}*)", i, i + 1));
        }
    }
    return {};
}

DualSequence dual_sequence(const Resolution& r)
{
    DualSequence ds;
    ds.levels = r.P;
    for (const auto& t : r.d_star) {
        ds.d.push_back(dualize(t));
    }
    ds.m = r.m;
    ds.chi = r.chi;
    ds.exponent = r.m.exponent();
    return ds;
}

PseudoInverse pseudo_inverse_unchecked(const HeckeSum& phi)
{
    const IntMatrix f = hecke_matrix(phi);
    const std::size_t rb = phi.target.rank();
    if (matrix_rank(f) != rb) {
        fail(ErrorCode::NotFiniteIndex, "image of the map has infinite index");
    }
    HeckeSum psi = zero_hecke(phi.target, phi.source);
    // One column of L per double-coset coefficient of psi: vec(F E_i).
    std::vector<std::pair<std::size_t, std::size_t>> slot_block;
    std::vector<std::size_t> slot_index;
    std::vector<IntVector> cols;
    for (std::size_t tb = 0; tb < psi.coeffs.size(); ++tb) {
        for (std::size_t sb = 0; sb < psi.coeffs[tb].size(); ++sb) {
            for (std::size_t k = 0; k < psi.coeffs[tb][sb].size(); ++k) {
                psi.coeffs[tb][sb][k] = 1;
                const IntMatrix fe = f * hecke_matrix(psi);
                psi.coeffs[tb][sb][k] = 0;
                IntVector v;
                v.reserve(rb * rb);
                for (std::size_t i = 0; i < rb; ++i) {
                    for (std::size_t j = 0; j < rb; ++j) {
                        v.push_back(fe(i, j));
                    }
                }
                cols.push_back(std::move(v));
                slot_block.emplace_back(tb, sb);
                slot_index.push_back(k);
            }
        }
    }
    const IntMatrix l = IntMatrix::from_columns(rb * rb, cols);
    IntVector id;
    for (std::size_t i = 0; i < rb; ++i) {
        for (std::size_t j = 0; j < rb; ++j) {
            id.push_back(i == j ? 1 : 0);
        }
    }
    const SmithForm sf = snf(l);
    const IntVector w = sf.U * id;
    const IntVector dg = sf.diagonal();
    const std::size_t rank = sf.rank();
    for (std::size_t i = rank; i < w.size(); ++i) {
        if (w[i] != 0) {
            fail(ErrorCode::Internal, "no rational equivariant pseudo-inverse");
        }
    }
    Int k = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        k = lcm(k, dg[i] / gcd(dg[i], w[i]));
    }
    IntVector y(l.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        y[i] = k * w[i] / dg[i];
    }
    const IntVector c = sf.V * y;
    for (std::size_t i = 0; i < c.size(); ++i) {
        psi.coeffs[slot_block[i].first][slot_block[i].second][slot_index[i]] = c[i];
    }
    if (f * hecke_matrix(psi) != k * IntMatrix::identity(rb)) {
        fail(ErrorCode::Internal, "pseudo-inverse does not satisfy phi o psi = k id");
    }
    return {std::move(psi), k};
}

PseudoInverse pseudo_inverse(const HeckeSum& phi)
{
    PseudoInverse pi = pseudo_inverse_unchecked(phi);
    const Int order = Int(static_cast<unsigned long>(phi.source.group.order()));
    if ((order * order) % pi.k != 0) {
        fail(ErrorCode::BoundViolated,
             fmt::format("k = {} does not divide |G|^2 = {}", pi.k.get_str(), Int(order * order).get_str()));
    }
    return pi;
}

} // namespace selmer
