#include "selmer/hecke.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>

namespace selmer {

std::size_t PermModuleSpec::rank() const
{
    return offsets.empty() ? 0 : offsets.back() + cosets.back().size();
}

IntMatrix PermModuleSpec::action_matrix(std::size_t g) const
{
    const std::size_t n = rank();
    IntMatrix m(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t c = 0; c < cosets[b].size(); ++c) {
            m(offsets[b] + cosets[b].act(g, c), offsets[b] + c) = 1;
        }
    }
    return m;
}

GModule PermModuleSpec::module() const
{
    return module_mod(0);
}

GModule PermModuleSpec::module_mod(const Int& n) const
{
    std::vector<IntMatrix> acts;
    for (std::size_t k = 0; k < group.generators().size(); ++k) {
        acts.push_back(action_matrix(group.generator_index(k)));
    }
    return GModule(group, IntVector(rank(), n), std::move(acts));
}

PermModuleSpec perm_module(const PermGroup& g, std::vector<Subgroup> blocks)
{
    PermModuleSpec p{g, std::move(blocks), {}, {}};
    std::size_t offset = 0;
    for (const auto& h : p.blocks) {
        if (!h.parent().same_group(g)) {
            fail(ErrorCode::InvalidArgument, "block subgroup of a different group");
        }
        p.cosets.push_back(left_cosets(h));
        p.offsets.push_back(offset);
        offset += p.cosets.back().size();
    }
    return p;
}

HeckeSum zero_hecke(const PermModuleSpec& source, const PermModuleSpec& target)
{
    HeckeSum t{source, target, {}, {}};
    for (const auto& j : target.blocks) {
        std::vector<IntVector> row;
        std::vector<DoubleCosetDecomp> drow;
        for (const auto& h : source.blocks) {
            drow.push_back(double_cosets(h, j));
            row.emplace_back(drow.back().size());
        }
        t.coeffs.push_back(std::move(row));
        t.decomps.push_back(std::move(drow));
    }
    return t;
}

IntMatrix hecke_matrix(const HeckeSum& t)
{
    IntMatrix m(t.target.rank(), t.source.rank());
    for (std::size_t tb = 0; tb < t.target.blocks.size(); ++tb) {
        const CosetSpace& jc = t.target.cosets[tb];
        for (std::size_t sb = 0; sb < t.source.blocks.size(); ++sb) {
            const DoubleCosetDecomp& d = t.decomps[tb][sb];
            const IntVector& c = t.coeffs[tb][sb];
            // Image of the coset 1H.
            IntVector v(jc.size());
            for (std::size_t k = 0; k < d.size(); ++k) {
                for (auto e : d.cosets[k].elements) {
                    v[jc.coset_of[e]] = c[k];
                }
            }
            const CosetSpace& hc = t.source.cosets[sb];
            for (std::size_t col = 0; col < hc.size(); ++col) {
                const std::size_t rep = hc.reps[col];
                for (std::size_t gam = 0; gam < jc.size(); ++gam) {
                    if (v[gam] != 0) {
                        m(t.target.offsets[tb] + jc.act(rep, gam), t.source.offsets[sb] + col) = v[gam];
                    }
                }
            }
        }
    }
    return m;
}

AbHom hecke_to_hom(const HeckeSum& t)
{
    return AbHom(FgAbGroup::free(t.source.rank()), FgAbGroup::free(t.target.rank()), hecke_matrix(t));
}

HeckeSum hom_to_hecke(const PermModuleSpec& source, const PermModuleSpec& target, const IntMatrix& matrix)
{
    if (matrix.rows() != target.rank() || matrix.cols() != source.rank()) {
        fail(ErrorCode::InvalidArgument, "matrix shape does not match the permutation modules");
    }
    const PermGroup& g = source.group;
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const std::size_t s = g.generator_index(k);
        if (matrix * source.action_matrix(s) != target.action_matrix(s) * matrix) {
            fail(ErrorCode::NotEquivariant,
                 fmt::format("map does not commute with generator {}", g.generators()[k].to_string()));
        }
    }
    HeckeSum t = zero_hecke(source, target);
    for (std::size_t tb = 0; tb < target.blocks.size(); ++tb) {
        for (std::size_t sb = 0; sb < source.blocks.size(); ++sb) {
            const DoubleCosetDecomp& d = t.decomps[tb][sb];
            const CosetSpace& jc = target.cosets[tb];
            for (std::size_t k = 0; k < d.size(); ++k) {
                const std::size_t row = target.offsets[tb] + jc.coset_of[d.cosets[k].rep];
                t.coeffs[tb][sb][k] = matrix(row, source.offsets[sb]);
            }
        }
    }
    if (hecke_matrix(t) != matrix) {
        fail(ErrorCode::NotEquivariant, "image of the base coset is not constant on double cosets");
    }
    return t;
}

HeckeSum dualize(const HeckeSum& t)
{
    const PermGroup& g = t.source.group;
    HeckeSum out = zero_hecke(t.target, t.source);
    // New pair: source block tb (J), target block sb (H), indexed J \ G / H.
    for (std::size_t sb = 0; sb < t.source.blocks.size(); ++sb) {
        for (std::size_t tb = 0; tb < t.target.blocks.size(); ++tb) {
            const DoubleCosetDecomp& dnew = out.decomps[sb][tb];
            const DoubleCosetDecomp& dold = t.decomps[tb][sb];
            for (std::size_t k = 0; k < dnew.size(); ++k) {
                out.coeffs[sb][tb][k] = t.coeffs[tb][sb][dold.coset_of[g.inv(dnew.cosets[k].rep)]];
            }
        }
    }
    return out;
}

HeckeSum compose(const HeckeSum& after, const HeckeSum& before)
{
    if (!(after.source == before.target)) {
        fail(ErrorCode::InvalidArgument, "composition of Hecke sums with mismatched modules");
    }
    return hom_to_hecke(before.source, after.target, hecke_matrix(after) * hecke_matrix(before));
}

IntVector hecke_apply(const GModule& v, const Subgroup& h, const Subgroup& j, const Perm& g, const IntVector& x)
{
    if (!v.fixed_by(h, x)) {
        fail(ErrorCode::NotInvariant, "element is not fixed by the source subgroup");
    }
    const PermGroup& grp = v.group();
    const DoubleCosetDecomp d = double_cosets(h, j);
    const DoubleCoset& dc = d.cosets[d.coset_of[grp.index_of(g)]];
    IntVector out = zero_vector(v.rank());
    for (auto r : dc.left_reps) {
        out = add(out, v.action(grp.inv(r)) * x);
    }
    out = v.reduce(out);
    if (!v.fixed_by(j, out)) {
        fail(ErrorCode::Internal, "Hecke image is not fixed by the target subgroup");
    }
    return out;
}

IntMatrix hecke_action_matrix(const HeckeSum& t, const GModule& v)
{
    const PermGroup& g = v.group();
    const std::size_t n = v.rank();
    IntMatrix out(t.target.blocks.size() * n, t.source.blocks.size() * n);
    for (std::size_t tb = 0; tb < t.target.blocks.size(); ++tb) {
        for (std::size_t sb = 0; sb < t.source.blocks.size(); ++sb) {
            const DoubleCosetDecomp& d = t.decomps[tb][sb];
            IntMatrix block(n, n);
            for (std::size_t k = 0; k < d.size(); ++k) {
                const Int& c = t.coeffs[tb][sb][k];
                if (c == 0) {
                    continue;
                }
                for (auto r : d.cosets[k].left_reps) {
                    block = block + c * v.action(g.inv(r));
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t jj = 0; jj < n; ++jj) {
                    out(tb * n + i, sb * n + jj) = block(i, jj);
                }
            }
        }
    }
    return out;
}

GModule torsion_model(const PermModuleSpec& p, const CycloCharacter& chi)
{
    const Int& n = chi.modulus();
    if (n < 2) {
        fail(ErrorCode::InvalidArgument, "torsion level must be at least 2");
    }
    return dual_module(p.module_mod(n), chi);
}

} // namespace selmer
