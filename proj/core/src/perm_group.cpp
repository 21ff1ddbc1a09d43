#include "selmer/perm_group.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace selmer {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x]) {
            fail(ErrorCode::InvalidArgument, "image array is not a permutation");
        }
        seen[x] = true;
    }
}

Perm Perm::identity(std::size_t degree)
{
    std::vector<std::uint32_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        im[i] = static_cast<std::uint32_t>(i);
    }
    return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles)
{
    std::vector<std::uint32_t> im = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree || used[c[i]]) {
                fail(ErrorCode::InvalidArgument, "cycles are not disjoint or leave the point set");
            }
            used[c[i]] = true;
            im[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Perm(std::move(im));
}

Perm Perm::inverse() const
{
    std::vector<std::uint32_t> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        im[images_[i]] = static_cast<std::uint32_t>(i);
    }
    Perm p;
    p.images_ = std::move(im);
    return p;
}

bool Perm::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string Perm::to_string() const
{
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        if (done[i] || images_[i] == i) {
            continue;
        }
        out += "(";
        std::uint32_t x = i;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            out += first ? fmt::format("{}", x) : fmt::format(" {}", x);
            first = false;
            x = images_[x];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b)
{
    if (a.degree() != b.degree()) {
        fail(ErrorCode::InvalidArgument, "product of permutations of different degree");
    }
    Perm p;
    p.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
        p.images_[i] = a.images_[b.images_[i]];
    }
    return p;
}

struct PermGroup::Impl {
    std::size_t degree = 0;
    std::vector<Perm> gens;
    std::size_t cap = kDefaultGroupCap;

    std::once_flag once;
    std::vector<Perm> elements;
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> parent_gen;
    std::vector<std::size_t> gen_index;
    std::vector<std::size_t> inverse;
    std::vector<std::uint32_t> table;
    std::size_t table_n = 0;

    void enumerate()
    {
        std::vector<Perm> elts{Perm::identity(degree)};
        std::map<std::vector<std::uint32_t>, std::size_t> idx{{elts[0].images(), 0}};
        std::vector<std::size_t> par{0};
        std::vector<std::size_t> pgen{0};
        for (std::size_t head = 0; head < elts.size(); ++head) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Perm next = gens[k] * elts[head];
                if (idx.count(next.images())) {
                    continue;
                }
                if (elts.size() >= cap) {
                    fail(ErrorCode::CapExceeded, fmt::format("group order exceeds the cap of {}", cap));
                }
                idx.emplace(next.images(), elts.size());
                elts.push_back(std::move(next));
                par.push_back(head);
                pgen.push_back(k);
            }
        }
        const std::size_t n = elts.size();
        std::vector<std::size_t> gidx;
        for (const auto& g : gens) {
            gidx.push_back(idx.at(g.images()));
        }
        std::vector<std::size_t> invs(n);
        for (std::size_t i = 0; i < n; ++i) {
            invs[i] = idx.at(elts[i].inverse().images());
        }
        if (n <= 1024) {
            table.resize(n * n);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    table[a * n + b] = static_cast<std::uint32_t>(idx.at((elts[a] * elts[b]).images()));
                }
            }
            table_n = n;
        }
        elements = std::move(elts);
        index = std::move(idx);
        parent = std::move(par);
        parent_gen = std::move(pgen);
        gen_index = std::move(gidx);
        inverse = std::move(invs);
    }
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap)
    : impl_(std::make_shared<Impl>())
{
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            fail(ErrorCode::InvalidArgument,
                 fmt::format("generator {} has degree {}, expected {}", g.to_string(), g.degree(), degree));
        }
    }
    impl_->degree = degree;
    impl_->gens = std::move(generators);
    impl_->cap = cap;
}

const PermGroup::Impl& PermGroup::enumerated() const
{
    std::call_once(impl_->once, [this] { impl_->enumerate(); });
    return *impl_;
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const noexcept { return impl_->gens; }
const std::vector<Perm>& PermGroup::elements() const { return enumerated().elements; }

std::size_t PermGroup::index_of(const Perm& g) const
{
    const Impl& im = enumerated();
    auto it = im.index.find(g.images());
    if (it == im.index.end()) {
        fail(ErrorCode::InvalidArgument, fmt::format("{} is not in the group", g.to_string()));
    }
    return it->second;
}

bool PermGroup::contains(const Perm& g) const
{
    return g.degree() == degree() && enumerated().index.count(g.images()) > 0;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const
{
    const Impl& im = enumerated();
    if (im.table_n) {
        return im.table[a * im.table_n + b];
    }
    return im.index.at((im.elements[a] * im.elements[b]).images());
}

std::size_t PermGroup::inv(std::size_t a) const { return enumerated().inverse[a]; }
std::size_t PermGroup::generator_index(std::size_t k) const { return enumerated().gen_index[k]; }
std::size_t PermGroup::parent(std::size_t i) const { return enumerated().parent[i]; }
std::size_t PermGroup::parent_generator(std::size_t i) const { return enumerated().parent_gen[i]; }

bool PermGroup::same_group(const PermGroup& other) const
{
    if (impl_ == other.impl_) {
        return true;
    }
    if (degree() != other.degree() || order() != other.order()) {
        return false;
    }
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [this](const Perm& g) { return contains(g); });
}

namespace {

std::vector<std::size_t> closure(const PermGroup& g, const std::vector<std::size_t>& gens)
{
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> out{0};
    seen[0] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (auto s : gens) {
            const std::size_t x = g.mul(s, out[head]);
            if (!seen[x]) {
                seen[x] = true;
                out.push_back(x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void Subgroup::choose_generators()
{
    generators_.clear();
    std::vector<std::size_t> chosen;
    std::vector<bool> covered(parent_.order(), false);
    covered[0] = true;
    for (auto i : indices_) {
        if (covered[i]) {
            continue;
        }
        chosen.push_back(i);
        generators_.push_back(parent_.element(i));
        for (auto x : closure(parent_, chosen)) {
            covered[x] = true;
        }
    }
}

Subgroup Subgroup::generated(const PermGroup& g, const std::vector<Perm>& gens)
{
    std::vector<std::size_t> idx;
    for (const auto& p : gens) {
        idx.push_back(g.index_of(p));
    }
    return from_indices(g, closure(g, idx));
}

Subgroup Subgroup::whole(const PermGroup& g)
{
    std::vector<std::size_t> idx(g.order());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    return from_indices(g, std::move(idx));
}

Subgroup Subgroup::trivial(const PermGroup& g)
{
    return from_indices(g, {0});
}

Subgroup Subgroup::from_indices(const PermGroup& g, std::vector<std::size_t> indices)
{
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    Subgroup s;
    s.parent_ = g;
    s.member_.assign(g.order(), false);
    for (auto i : indices) {
        if (i >= g.order()) {
            fail(ErrorCode::InvalidArgument, "subgroup index outside the group");
        }
        s.member_[i] = true;
    }
    if (indices.empty() || indices[0] != 0) {
        fail(ErrorCode::InvalidArgument, "subgroup does not contain the identity");
    }
    for (auto a : indices) {
        for (auto b : indices) {
            if (!s.member_[g.mul(a, b)]) {
                fail(ErrorCode::InvalidArgument, "element set is not closed under products");
            }
        }
    }
    s.indices_ = std::move(indices);
    s.choose_generators();
    return s;
}

bool Subgroup::contains(const Perm& g) const
{
    return parent_.contains(g) && member_[parent_.index_of(g)];
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const
{
    return std::all_of(indices_.begin(), indices_.end(), [&](std::size_t i) { return other.contains_index(i); });
}

bool Subgroup::is_normal_in(const Subgroup& other) const
{
    if (!is_subgroup_of(other)) {
        return false;
    }
    for (auto g : other.indices()) {
        const std::size_t gi = parent_.inv(g);
        for (const auto& h : generators_) {
            const std::size_t c = parent_.mul(parent_.mul(g, parent_.index_of(h)), gi);
            if (!member_[c]) {
                return false;
            }
        }
    }
    return true;
}

Subgroup stabilizer(const PermGroup& g, const std::function<bool(std::size_t)>& fixes)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (fixes(i)) {
            idx.push_back(i);
        }
    }
    return Subgroup::from_indices(g, std::move(idx));
}

std::size_t CosetSpace::act(std::size_t g, std::size_t c) const
{
    return coset_of[H.parent().mul(g, reps[c])];
}

CosetSpace left_cosets(const Subgroup& h)
{
    const PermGroup& g = h.parent();
    const std::size_t none = g.order();
    CosetSpace cs{h, {}, std::vector<std::size_t>(g.order(), none)};
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (cs.coset_of[x] != none) {
            continue;
        }
        const std::size_t c = cs.reps.size();
        cs.reps.push_back(x);
        for (auto y : h.indices()) {
            cs.coset_of[g.mul(x, y)] = c;
        }
    }
    return cs;
}

DoubleCosetDecomp double_cosets(const Subgroup& h, const Subgroup& j)
{
    const PermGroup& g = h.parent();
    if (!g.same_group(j.parent())) {
        fail(ErrorCode::InvalidArgument, "double cosets of subgroups of different groups");
    }
    const std::size_t none = g.order();
    DoubleCosetDecomp d{h, j, {}, std::vector<std::size_t>(g.order(), none)};
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (d.coset_of[x] != none) {
            continue;
        }
        const std::size_t c = d.cosets.size();
        DoubleCoset dc;
        dc.rep = x;
        for (auto a : h.indices()) {
            const std::size_t ax = g.mul(a, x);
            for (auto b : j.indices()) {
                const std::size_t e = g.mul(ax, b);
                if (d.coset_of[e] == none) {
                    d.coset_of[e] = c;
                    dc.elements.push_back(e);
                }
            }
        }
        std::sort(dc.elements.begin(), dc.elements.end());
        std::vector<bool> covered(g.order(), false);
        for (auto e : dc.elements) {
            if (covered[e]) {
                continue;
            }
            dc.left_reps.push_back(e);
            for (auto a : h.indices()) {
                covered[g.mul(a, e)] = true;
            }
        }
        d.cosets.push_back(std::move(dc));
    }
    return d;
}

PermGroup cyclic_group(std::size_t n)
{
    if (n <= 1) {
        return PermGroup(1, {});
    }
    std::vector<std::uint32_t> cyc(n);
    for (std::size_t i = 0; i < n; ++i) {
        cyc[i] = static_cast<std::uint32_t>(i);
    }
    return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

PermGroup symmetric_group(std::size_t n)
{
    if (n <= 1) {
        return PermGroup(1, {});
    }
    if (n == 2) {
        return PermGroup(2, {Perm::from_cycles(2, {{0, 1}})});
    }
    std::vector<std::uint32_t> cyc(n);
    for (std::size_t i = 0; i < n; ++i) {
        cyc[i] = static_cast<std::uint32_t>(i);
    }
    return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cyc})});
}

PermGroup dihedral_group(std::size_t n)
{
    std::vector<std::uint32_t> rot(n);
    std::vector<std::uint32_t> refl(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<std::uint32_t>((i + 1) % n);
        refl[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return PermGroup(n, {Perm(rot), Perm(refl)});
}

PermGroup quaternion_group()
{
    // Points 4s + u stand for (-1)^s times the unit u in {1, i, j, k}.
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    auto left_mult = [](int u) {
        std::vector<std::uint32_t> im(8);
        for (int s = 0; s < 2; ++s) {
            for (int v = 0; v < 4; ++v) {
                const int sign = (s ? -1 : 1) * unit_sign[u][v];
                im[4 * s + v] = static_cast<std::uint32_t>(4 * (sign < 0 ? 1 : 0) + unit_prod[u][v]);
            }
        }
        return Perm(im);
    };
    return PermGroup(8, {left_mult(1), left_mult(2)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b)
{
    const std::size_t n = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (const auto& g : a.generators()) {
        std::vector<std::uint32_t> im = Perm::identity(n).images();
        for (std::uint32_t i = 0; i < a.degree(); ++i) {
            im[i] = g(i);
        }
        gens.emplace_back(im);
    }
    for (const auto& g : b.generators()) {
        std::vector<std::uint32_t> im = Perm::identity(n).images();
        const auto off = static_cast<std::uint32_t>(a.degree());
        for (std::uint32_t i = 0; i < b.degree(); ++i) {
            im[off + i] = off + g(i);
        }
        gens.emplace_back(im);
    }
    return PermGroup(n, std::move(gens));
}

} // namespace selmer
