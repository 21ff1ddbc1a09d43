#include "selmer/gmodule.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>

#include <set>

namespace selmer {

GModule::GModule(PermGroup group, IntVector orders, std::vector<IntMatrix> generator_action)
    : group_(std::move(group)), orders_(std::move(orders)), gen_action_(std::move(generator_action))
{
    const std::size_t n = orders_.size();
    if (gen_action_.size() != group_.generators().size()) {
        fail(ErrorCode::SchemaError, fmt::format("{} action matrices for {} group generators", gen_action_.size(),
                                                 group_.generators().size()));
    }
    for (const auto& d : orders_) {
        if (d < 0) {
            fail(ErrorCode::SchemaError, "negative generator order");
        }
    }
    abelian_ = FgAbGroup::from_orders(orders_);
    for (std::size_t k = 0; k < gen_action_.size(); ++k) {
        IntMatrix& a = gen_action_[k];
        if (a.rows() != n || a.cols() != n) {
            fail(ErrorCode::SchemaError,
                 fmt::format("action matrix {} is {}x{}, expected {}x{}", k, a.rows(), a.cols(), n, n));
        }
        AbHom f(abelian_, abelian_, a);
        if (!f.is_well_defined()) {
            fail(ErrorCode::InvariantViolation,
                 fmt::format("action of generator {} does not respect the generator orders", k));
        }
        const bool injective = selmer::structure(kernel(f).sub) == GroupStructure{};
        const GroupStructure coker = selmer::structure(image_quotient(f).coker);
        if (!injective || coker.free_rank != 0 || !coker.torsion.empty()) {
            fail(ErrorCode::NonInvertibleAction, fmt::format("action of generator {} is not invertible", k));
        }
        a = reduce_matrix(a);
    }

    const std::size_t order = group_.order();
    action_.resize(order);
    action_[0] = reduce_matrix(IntMatrix::identity(n));
    for (std::size_t i = 1; i < order; ++i) {
        action_[i] = reduce_matrix(gen_action_[group_.parent_generator(i)] * action_[group_.parent(i)]);
    }
    for (std::size_t k = 0; k < gen_action_.size(); ++k) {
        const std::size_t s = group_.generator_index(k);
        for (std::size_t e = 0; e < order; ++e) {
            if (reduce_matrix(gen_action_[k] * action_[e]) != action_[group_.mul(s, e)]) {
                fail(ErrorCode::InvariantViolation,
                     fmt::format("action is not multiplicative at generator {} and element {}", k,
                                 group_.element(e).to_string()));
            }
        }
    }
}

GModule GModule::trivial(PermGroup group, IntVector orders)
{
    const std::size_t n = orders.size();
    std::vector<IntMatrix> acts(group.generators().size(), IntMatrix::identity(n));
    return GModule(std::move(group), std::move(orders), std::move(acts));
}

IntMatrix GModule::reduce_matrix(const IntMatrix& a) const
{
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = mod_floor(out(i, j), orders_[i]);
        }
    }
    return out;
}

IntVector GModule::reduce(const IntVector& x) const
{
    IntVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = mod_floor(y[i], orders_[i]);
    }
    return y;
}

bool GModule::is_finite() const
{
    for (const auto& d : orders_) {
        if (d == 0) {
            return false;
        }
    }
    return true;
}

Int GModule::exponent() const
{
    Int e = 1;
    for (const auto& d : orders_) {
        if (d == 0) {
            return 0;
        }
        e = lcm(e, d);
    }
    return e;
}

bool GModule::fixed_by(const Subgroup& h, const IntVector& x) const
{
    const IntVector rx = reduce(x);
    for (const auto& g : h.generators()) {
        if (act(group_.index_of(g), x) != rx) {
            return false;
        }
    }
    return true;
}

CycloCharacter::CycloCharacter(PermGroup group, Int modulus, IntVector generator_values)
    : group_(std::move(group)), modulus_(std::move(modulus)), gen_values_(std::move(generator_values))
{
    if (modulus_ < 1) {
        fail(ErrorCode::InvalidArgument, "character modulus must be positive");
    }
    if (gen_values_.size() != group_.generators().size()) {
        fail(ErrorCode::SchemaError, fmt::format("{} character values for {} group generators", gen_values_.size(),
                                                 group_.generators().size()));
    }
    for (auto& v : gen_values_) {
        v = mod_floor(v, modulus_);
        if (gcd(v, modulus_) != 1) {
            fail(ErrorCode::InvariantViolation, fmt::format("character value {} is not a unit mod {}",
                                                            v.get_str(), modulus_.get_str()));
        }
    }
    const std::size_t order = group_.order();
    values_.resize(order);
    values_[0] = mod_floor(1, modulus_);
    for (std::size_t i = 1; i < order; ++i) {
        values_[i] = mod_floor(gen_values_[group_.parent_generator(i)] * values_[group_.parent(i)], modulus_);
    }
    for (std::size_t k = 0; k < gen_values_.size(); ++k) {
        const std::size_t s = group_.generator_index(k);
        for (std::size_t e = 0; e < order; ++e) {
            if (mod_floor(gen_values_[k] * values_[e], modulus_) != values_[group_.mul(s, e)]) {
                fail(ErrorCode::InvariantViolation, "character values do not extend to a homomorphism");
            }
        }
    }
}

CycloCharacter CycloCharacter::trivial(PermGroup group, Int modulus)
{
    IntVector vals(group.generators().size(), Int(1));
    return CycloCharacter(std::move(group), std::move(modulus), std::move(vals));
}

bool CycloCharacter::is_trivial() const
{
    for (const auto& v : gen_values_) {
        if (v != mod_floor(1, modulus_)) {
            return false;
        }
    }
    return true;
}

std::size_t CycloCharacter::image_size() const
{
    std::set<Int> seen(values_.begin(), values_.end());
    return seen.size();
}

CycloCharacter CycloCharacter::reduce(const Int& n) const
{
    if (n < 1 || modulus_ % n != 0) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("cannot reduce a character mod {} to mod {}", modulus_.get_str(), n.get_str()));
    }
    return CycloCharacter(group_, n, gen_values_);
}

Int euler_phi(const Int& m)
{
    Int n = m;
    Int out = m;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            out -= out / p;
        }
    }
    if (n > 1) {
        out -= out / n;
    }
    return out;
}

GModule dual_module(const GModule& m, const CycloCharacter& chi)
{
    if (!m.is_finite()) {
        fail(ErrorCode::InvalidArgument, "dual module of an infinite module");
    }
    const Int e = m.exponent();
    const CycloCharacter c = chi.modulus() == e ? chi : chi.reduce(e);
    const PermGroup& g = m.group();
    const std::size_t n = m.rank();
    const IntVector& d = m.orders();
    std::vector<IntMatrix> acts;
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const std::size_t s = g.generator_index(k);
        const IntMatrix& b = m.action(g.inv(s));
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Int v = mod_floor(c.value(s) * b(j, i) * (e / d[j]), e);
                a(i, j) = v / (e / d[i]);
            }
        }
        acts.push_back(std::move(a));
    }
    return GModule(g, d, std::move(acts));
}

SubgroupResult invariants(const GModule& v, const Subgroup& h)
{
    const std::size_t n = v.rank();
    const std::size_t k = h.generators().size();
    IntMatrix stacked(n * k, n);
    IntVector target_orders;
    for (std::size_t t = 0; t < k; ++t) {
        const IntMatrix diff = v.action(v.group().index_of(h.generators()[t])) - IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                stacked(t * n + i, j) = diff(i, j);
            }
        }
        target_orders.insert(target_orders.end(), v.orders().begin(), v.orders().end());
    }
    return kernel(AbHom(v.abelian(), FgAbGroup::from_orders(target_orders), stacked));
}

} // namespace selmer
