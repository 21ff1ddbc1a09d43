#include "selmer/arithmetic.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>
#include <gmp.h>

#include <algorithm>

namespace selmer {

namespace {

std::string describe(const Subgroup& h)
{
    std::string out = "<";
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
        out += (i ? ", " : "") + h.generators()[i].to_string();
    }
    return out + ">";
}

[[noreturn]] void violation(const std::string& what)
{
    fail(ErrorCode::InvariantViolation, what);
}

// Row vector v times matrix a.
IntVector row_times(const IntVector& v, const IntMatrix& a)
{
    return a.transpose() * v;
}

} // namespace

bool is_prime(const Int& p)
{
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

std::vector<Int> ArithmeticFixture::pool() const
{
    std::vector<Int> out;
    for (const auto& pd : primes) {
        out.push_back(pd.p);
    }
    return out;
}

bool ArithmeticFixture::in_pool(const Int& p) const
{
    return std::any_of(primes.begin(), primes.end(), [&](const PrimeData& pd) { return pd.p == p; });
}

const PrimeData& ArithmeticFixture::prime(const Int& p) const
{
    for (const auto& pd : primes) {
        if (pd.p == p) {
            return pd;
        }
    }
    fail(ErrorCode::MissingPrime, fmt::format("prime {} is not in the fixture pool", p.get_str()));
}

const ClassData* ArithmeticFixture::class_data_for(const Subgroup& h) const
{
    for (const auto& cd : class_data) {
        if (cd.subgroup == h) {
            return &cd;
        }
    }
    return nullptr;
}

const CustomConditionData& ArithmeticFixture::condition(const std::string& cname) const
{
    for (const auto& c : local_conditions) {
        if (c.name == cname) {
            return c;
        }
    }
    fail(ErrorCode::SchemaError, fmt::format("fixture has no local condition named '{}'", cname));
}

void validate_fixture(const ArithmeticFixture& f)
{
    const PermGroup& g = f.group;
    if (!f.chi.group().same_group(g) || !f.sunits.group().same_group(g)) {
        fail(ErrorCode::SchemaError, "character and S-unit module must live on the fixture group");
    }
    const IntVector& orders = f.sunits.orders();
    const std::size_t n = orders.size();
    if (n == 0 || orders[0] < 2) {
        fail(ErrorCode::SchemaError, "S-unit generator 0 must be a root of unity of order at least 2");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (orders[i] != 0) {
            fail(ErrorCode::SchemaError, "S-unit generators after the first must be free");
        }
    }
    if (f.sunit_names.size() != n) {
        fail(ErrorCode::SchemaError, fmt::format("{} S-unit names for {} generators", f.sunit_names.size(), n));
    }
    const Int& t = orders[0];
    if (t % f.chi.modulus() != 0) {
        violation(fmt::format("chi-torsion compatibility: character modulus {} does not divide the torsion order {}",
                              f.chi.modulus().get_str(), t.get_str()));
    }
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const std::size_t s = g.generator_index(k);
        const IntVector img = f.sunits.act(s, unit_vector(n, 0));
        for (std::size_t i = 1; i < n; ++i) {
            if (img[i] != 0) {
                violation("chi-torsion compatibility: a root of unity is sent outside the torsion");
            }
        }
        if (mod_floor(img[0] - f.chi.value(s), f.chi.modulus()) != 0) {
            violation(fmt::format("chi-torsion compatibility: generator {} sends zeta to zeta^{}, chi says {}", k,
                                  img[0].get_str(), f.chi.value(s).get_str()));
        }
    }

    for (std::size_t i = 0; i < f.primes.size(); ++i) {
        const PrimeData& pd = f.primes[i];
        const std::string ps = pd.p.get_str();
        if (!is_prime(pd.p)) {
            fail(ErrorCode::SchemaError, fmt::format("{} is not a prime", ps));
        }
        if (i > 0 && !(f.primes[i - 1].p < pd.p)) {
            fail(ErrorCode::SchemaError, "primes must be listed in strictly increasing order");
        }
        if (!pd.decomposition.parent().same_group(g) || !pd.inertia.parent().same_group(g)) {
            fail(ErrorCode::SchemaError, fmt::format("subgroups at {} are not subgroups of the fixture group", ps));
        }
        if (!pd.inertia.is_normal_in(pd.decomposition)) {
            violation(fmt::format("inertia at {} is not normal in the decomposition group", ps));
        }
        if (pd.vals.size() != n) {
            fail(ErrorCode::SchemaError, fmt::format("{} valuations at {} for {} S-unit generators", pd.vals.size(), ps, n));
        }
        if (pd.vals[0] != 0) {
            violation(fmt::format("valuation of the root of unity at {} is not zero", ps));
        }
        for (const auto& d : pd.decomposition.generators()) {
            if (row_times(pd.vals, f.sunits.action(g.index_of(d))) != pd.vals) {
                violation(fmt::format("valuations at {} are not invariant under the decomposition group", ps));
            }
        }
    }

    for (std::size_t i = 0; i < f.class_data.size(); ++i) {
        const ClassData& cd = f.class_data[i];
        if (!cd.subgroup.parent().same_group(g)) {
            fail(ErrorCode::SchemaError, "class data subgroup is not a subgroup of the fixture group");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (f.class_data[j].subgroup == cd.subgroup) {
                fail(ErrorCode::SchemaError, fmt::format("class data for {} given twice", describe(cd.subgroup)));
            }
        }
        for (const auto& pc : cd.prime_classes) {
            const DoubleCosetDecomp dc = double_cosets(cd.subgroup, f.prime(pc.p).decomposition);
            if (pc.classes.size() != dc.size()) {
                fail(ErrorCode::SchemaError, fmt::format("{} prime classes above {} for {}, expected {}",
                                                         pc.classes.size(), pc.p.get_str(), describe(cd.subgroup),
                                                         dc.size()));
            }
            for (const auto& c : pc.classes) {
                if (c.size() != cd.clgroup.invariants().size()) {
                    fail(ErrorCode::SchemaError, "class vector length does not match the class group");
                }
            }
        }
    }

    for (std::size_t i = 0; i < f.local_conditions.size(); ++i) {
        const CustomConditionData& c = f.local_conditions[i];
        if (c.name.empty()) {
            fail(ErrorCode::SchemaError, "local condition without a name");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (f.local_conditions[j].name == c.name) {
                fail(ErrorCode::SchemaError, fmt::format("local condition '{}' given twice", c.name));
            }
        }
        f.prime(c.p);
        const std::size_t k = c.target.invariants().size();
        if (c.map_matrix.rows() != k || (c.subgroup_gens.cols() > 0 && c.subgroup_gens.rows() != k)) {
            fail(ErrorCode::SchemaError, fmt::format("local condition '{}' does not match its target group", c.name));
        }
    }
}

IntMatrix divisor_matrix(const ArithmeticFixture& f, const Int& p)
{
    const PrimeData& pd = f.prime(p);
    const PermGroup& g = f.group;
    const CosetSpace cs = left_cosets(pd.decomposition);
    std::vector<IntVector> rows;
    for (auto rep : cs.reps) {
        rows.push_back(row_times(pd.vals, f.sunits.action(g.inv(rep))));
    }
    return IntMatrix::from_columns(f.sunits.rank(), rows).transpose();
}

SubgroupResult sunits_for(const ArithmeticFixture& f, const Subgroup& h, const std::vector<Int>& s)
{
    const std::size_t n = f.sunits.rank();
    const PermGroup& g = f.group;
    std::vector<IntVector> rows;
    IntVector target;
    for (const auto& x : h.generators()) {
        const IntMatrix diff = f.sunits.action(g.index_of(x)) - IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(diff.row(i));
            target.push_back(f.sunits.orders()[i]);
        }
    }
    for (const auto& pd : f.primes) {
        if (std::find(s.begin(), s.end(), pd.p) != s.end()) {
            continue;
        }
        const IntMatrix dm = divisor_matrix(f, pd.p);
        for (std::size_t i = 0; i < dm.rows(); ++i) {
            rows.push_back(dm.row(i));
            target.push_back(0);
        }
    }
    const IntMatrix m = rows.empty() ? IntMatrix(0, n) : IntMatrix::from_columns(n, rows).transpose();
    return kernel(AbHom(f.sunits.abelian(), FgAbGroup::from_orders(target), m));
}

AbHom divisor_map(const ArithmeticFixture& f, const Subgroup& h, const Int& p)
{
    const PrimeData& pd = f.prime(p);
    if (!pd.unramified()) {
        fail(ErrorCode::RamifiedPrime, fmt::format("{} ramifies in {}", p.get_str(), f.splitting_field));
    }
    const PermGroup& g = f.group;
    const SubgroupResult fixed = invariants(f.sunits, h);
    const IntMatrix& incl = fixed.incl.matrix;
    const DoubleCosetDecomp dc = double_cosets(h, pd.decomposition);
    std::vector<IntVector> rows;
    for (const auto& d : dc.cosets) {
        const IntVector row = row_times(row_times(pd.vals, f.sunits.action(g.inv(d.rep))), incl);
        for (auto e : d.elements) {
            if (row_times(row_times(pd.vals, f.sunits.action(g.inv(e))), incl) != row) {
                fail(ErrorCode::InvariantViolation,
                     fmt::format("valuation at {} depends on the representative of a double coset", p.get_str()));
            }
        }
        rows.push_back(row);
    }
    const IntMatrix m = rows.empty() ? IntMatrix(0, incl.cols()) : IntMatrix::from_columns(incl.cols(), rows).transpose();
    return AbHom(fixed.sub, FgAbGroup::free(dc.size()), m);
}

bool spanning_check(const ArithmeticFixture& f, const std::vector<Subgroup>& blocks, const std::vector<Int>& s)
{
    for (const auto& h : blocks) {
        const ClassData* cd = f.class_data_for(h);
        if (cd == nullptr) {
            fail(ErrorCode::MissingClassData, fmt::format("no class data for the subgroup {}", describe(h)));
        }
        const std::size_t k = cd->clgroup.invariants().size();
        std::vector<IntVector> gens;
        for (const auto& pc : cd->prime_classes) {
            if (std::find(s.begin(), s.end(), pc.p) == s.end()) {
                continue;
            }
            gens.insert(gens.end(), pc.classes.begin(), pc.classes.end());
        }
        const AbHom span(FgAbGroup::free(gens.size()), cd->clgroup.presentation(), IntMatrix::from_columns(k, gens));
        if (!(structure(image_quotient(span).coker) == GroupStructure{})) {
            return false;
        }
    }
    return true;
}

} // namespace selmer
