#include "selmer/serialize.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace selmer {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what)
{
    fail(ErrorCode::SchemaError, what);
}

const json& field(const json& j, const char* key, const std::string& ctx)
{
    if (!j.is_object() || !j.contains(key)) {
        schema_error(fmt::format("{}: missing field '{}'", ctx, key));
    }
    return j.at(key);
}

const json& array_field(const json& j, const char* key, const std::string& ctx)
{
    const json& a = field(j, key, ctx);
    if (!a.is_array()) {
        schema_error(fmt::format("{}: field '{}' must be a list", ctx, key));
    }
    return a;
}

std::string get_string(const json& j, const char* key, const std::string& ctx)
{
    const json& s = field(j, key, ctx);
    if (!s.is_string()) {
        schema_error(fmt::format("{}: field '{}' must be a string", ctx, key));
    }
    return s.get<std::string>();
}

Int to_int(const json& j, const std::string& ctx)
{
    if (j.is_number_integer()) {
        return Int(j.get<long>());
    }
    if (!j.is_string()) {
        schema_error(fmt::format("{}: expected an integer", ctx));
    }
    const std::string s = j.get<std::string>();
    Int out;
    if (s.empty() || out.set_str(s, 10) != 0) {
        schema_error(fmt::format("{}: '{}' is not a decimal integer", ctx, s));
    }
    return out;
}

std::size_t to_size(const json& j, const std::string& ctx)
{
    if (!j.is_number_unsigned()) {
        schema_error(fmt::format("{}: expected a non-negative count", ctx));
    }
    return j.get<std::size_t>();
}

IntVector to_vector(const json& j, const std::string& ctx)
{
    if (!j.is_array()) {
        schema_error(fmt::format("{}: expected a list of integers", ctx));
    }
    IntVector out;
    for (const auto& x : j) {
        out.push_back(to_int(x, ctx));
    }
    return out;
}

// A list of rows; `rows` is checked when the list is non-empty and used for
// the shape of an empty list.
IntMatrix to_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& ctx)
{
    if (!j.is_array()) {
        schema_error(fmt::format("{}: expected a matrix as a list of rows", ctx));
    }
    if (j.empty()) {
        if (rows != 0) {
            schema_error(fmt::format("{}: expected {} rows, got none", ctx, rows));
        }
        return IntMatrix(0, cols);
    }
    if (j.size() != rows) {
        schema_error(fmt::format("{}: expected {} rows, got {}", ctx, rows, j.size()));
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const IntVector r = to_vector(j[i], ctx);
        if (r.size() != cols) {
            schema_error(fmt::format("{}: row {} has {} entries, expected {}", ctx, i, r.size(), cols));
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = r[k];
        }
    }
    return m;
}

// Generators given as a list of vectors, stored as columns.
IntMatrix to_columns(const json& j, std::size_t rows, const std::string& ctx)
{
    if (!j.is_array()) {
        schema_error(fmt::format("{}: expected a list of vectors", ctx));
    }
    std::vector<IntVector> cols;
    for (const auto& c : j) {
        cols.push_back(to_vector(c, ctx));
        if (cols.back().size() != rows) {
            schema_error(fmt::format("{}: vector of length {}, expected {}", ctx, cols.back().size(), rows));
        }
    }
    return IntMatrix::from_columns(rows, cols);
}

json from_int(const Int& x)
{
    return x.get_str();
}

json from_vector(const IntVector& v)
{
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(from_int(x));
    }
    return out;
}

json from_matrix(const IntMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(from_vector(m.row(i)));
    }
    return out;
}

json from_columns(const IntMatrix& m)
{
    json out = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out.push_back(from_vector(m.column(j)));
    }
    return out;
}

Perm to_perm(const json& j, std::size_t degree, const std::string& ctx)
{
    if (!j.is_array() || j.size() != degree) {
        schema_error(fmt::format("{}: a permutation is a list of {} images", ctx, degree));
    }
    std::vector<std::uint32_t> images;
    for (const auto& x : j) {
        images.push_back(static_cast<std::uint32_t>(to_size(x, ctx)));
    }
    try {
        return Perm(std::move(images));
    } catch (const Error&) {
        schema_error(fmt::format("{}: image list is not a permutation", ctx));
    }
}

json from_perm(const Perm& p)
{
    json out = json::array();
    for (auto x : p.images()) {
        out.push_back(x);
    }
    return out;
}

PermGroup to_group(const json& j, const std::string& ctx)
{
    const std::size_t degree = to_size(field(j, "degree", ctx), ctx + " degree");
    if (degree == 0) {
        schema_error(fmt::format("{}: degree must be positive", ctx));
    }
    std::vector<Perm> gens;
    for (const auto& p : array_field(j, "generators", ctx)) {
        gens.push_back(to_perm(p, degree, ctx + " generator"));
    }
    return PermGroup(degree, std::move(gens));
}

json from_group(const PermGroup& g)
{
    json gens = json::array();
    for (const auto& p : g.generators()) {
        gens.push_back(from_perm(p));
    }
    return {{"degree", g.degree()}, {"generators", gens}};
}

Subgroup to_subgroup(const PermGroup& g, const json& j, const std::string& ctx)
{
    if (!j.is_array()) {
        schema_error(fmt::format("{}: a subgroup is a list of generators", ctx));
    }
    std::vector<Perm> gens;
    for (const auto& p : j) {
        gens.push_back(to_perm(p, g.degree(), ctx));
        if (!g.contains(gens.back())) {
            schema_error(fmt::format("{}: generator {} is not in the group", ctx, gens.back().to_string()));
        }
    }
    return Subgroup::generated(g, gens);
}

json from_subgroup(const Subgroup& h)
{
    json out = json::array();
    for (const auto& p : h.generators()) {
        out.push_back(from_perm(p));
    }
    return out;
}

CycloCharacter to_chi(const PermGroup& g, const json& j, const std::string& ctx)
{
    return CycloCharacter(g, to_int(field(j, "modulus", ctx), ctx + " modulus"),
                          to_vector(field(j, "values", ctx), ctx + " values"));
}

json from_chi(const CycloCharacter& c)
{
    return {{"modulus", from_int(c.modulus())}, {"values", from_vector(c.generator_values())}};
}

std::vector<IntMatrix> to_actions(const json& j, std::size_t n, const std::string& ctx)
{
    if (!j.is_array()) {
        schema_error(fmt::format("{}: expected one matrix per group generator", ctx));
    }
    std::vector<IntMatrix> out;
    for (const auto& a : j) {
        out.push_back(to_matrix(a, n, n, ctx));
    }
    return out;
}

json from_actions(const GModule& m)
{
    json out = json::array();
    for (const auto& a : m.generator_action()) {
        out.push_back(from_matrix(a));
    }
    return out;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        schema_error(fmt::format("not a JSON document: {}", e.what()));
    }
}

void expect_schema(const json& j, std::string_view schema)
{
    const std::string s = get_string(j, "schema", "document");
    if (s != schema) {
        schema_error(fmt::format("unsupported schema '{}', expected '{}'", s, schema));
    }
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

ModuleFile module_from_json(const json& j)
{
    ModuleFile mf;
    mf.name = get_string(j, "name", "module");
    mf.base_field = get_string(j, "base_field", "module");
    const PermGroup g = to_group(field(j, "group", "module"), "module group");
    const IntVector orders = to_vector(field(j, "orders", "module"), "module orders");
    mf.m = GModule(g, orders, to_actions(field(j, "action", "module"), orders.size(), "module action"));
    mf.chi = to_chi(g, field(j, "chi", "module"), "module chi");
    if (!mf.m.is_finite()) {
        schema_error("module must be finite");
    }
    if (mf.chi.modulus() != mf.m.exponent()) {
        schema_error(fmt::format("chi modulus {} differs from the exponent {} of M", mf.chi.modulus().get_str(),
                                 mf.m.exponent().get_str()));
    }
    if (mf.base_field == "Q" && Int(static_cast<unsigned long>(mf.chi.image_size())) != euler_phi(mf.chi.modulus())) {
        fail(ErrorCode::GroupTooSmall,
             fmt::format("over Q the cyclotomic character mod {} has image of order {}, the group only reaches {}",
                         mf.chi.modulus().get_str(), euler_phi(mf.chi.modulus()).get_str(), mf.chi.image_size()));
    }
    return mf;
}

json module_to_json(const ModuleFile& mf)
{
    return {{"name", mf.name},
            {"base_field", mf.base_field},
            {"group", from_group(mf.m.group())},
            {"orders", from_vector(mf.m.orders())},
            {"action", from_actions(mf.m)},
            {"chi", from_chi(mf.chi)}};
}

template <class F>
auto wrap(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        schema_error(e.what());
    }
}

} // namespace

ModuleFile parse_module(std::string_view text)
{
    return wrap([&] {
        const json j = parse_json(text);
        expect_schema(j, kModuleSchema);
        return module_from_json(j);
    });
}

std::string write_module(const ModuleFile& mf)
{
    json j = module_to_json(mf);
    j["schema"] = kModuleSchema;
    return dump(j);
}

ArithmeticFixture parse_fixture(std::string_view text)
{
    return wrap([&] {
        const json j = parse_json(text);
        expect_schema(j, kFixtureSchema);
        ArithmeticFixture f;
        f.name = get_string(j, "name", "fixture");
        f.base_field = get_string(j, "base_field", "fixture");
        f.splitting_field = get_string(j, "splitting_field", "fixture");
        f.group = to_group(field(j, "group", "fixture"), "fixture group");
        f.chi = to_chi(f.group, field(j, "chi", "fixture"), "fixture chi");

        const json& su = field(j, "sunits", "fixture");
        const IntVector orders = to_vector(field(su, "orders", "sunits"), "sunits orders");
        f.sunits = GModule(f.group, orders, to_actions(field(su, "action", "sunits"), orders.size(), "sunits action"));
        for (const auto& nm : array_field(su, "names", "sunits")) {
            if (!nm.is_string()) {
                schema_error("sunits: names must be strings");
            }
            f.sunit_names.push_back(nm.get<std::string>());
        }

        for (const auto& pj : array_field(j, "primes", "fixture")) {
            PrimeData pd;
            pd.p = to_int(field(pj, "p", "prime"), "prime p");
            const std::string ctx = "prime " + pd.p.get_str();
            pd.decomposition = to_subgroup(f.group, field(pj, "decomposition", ctx), ctx + " decomposition");
            pd.inertia = to_subgroup(f.group, field(pj, "inertia", ctx), ctx + " inertia");
            pd.vals = to_vector(field(pj, "valuations", ctx), ctx + " valuations");
            f.primes.push_back(std::move(pd));
        }

        if (j.contains("class_data")) {
            for (const auto& cj : array_field(j, "class_data", "fixture")) {
                ClassData cd;
                cd.subgroup = to_subgroup(f.group, field(cj, "subgroup", "class data"), "class data subgroup");
                cd.clgroup = FinAbGroup(to_vector(field(cj, "class_group", "class data"), "class group"));
                for (const auto& pc : array_field(cj, "prime_classes", "class data")) {
                    PlaceClasses place;
                    place.p = to_int(field(pc, "p", "prime classes"), "prime classes p");
                    for (const auto& c : array_field(pc, "classes", "prime classes")) {
                        place.classes.push_back(to_vector(c, "class vector"));
                    }
                    cd.prime_classes.push_back(std::move(place));
                }
                f.class_data.push_back(std::move(cd));
            }
        }

        if (j.contains("local_conditions")) {
            for (const auto& lj : array_field(j, "local_conditions", "fixture")) {
                CustomConditionData c;
                c.name = get_string(lj, "name", "local condition");
                const std::string ctx = "local condition '" + c.name + "'";
                c.p = to_int(field(lj, "p", ctx), ctx + " p");
                c.target = FinAbGroup(to_vector(field(lj, "target", ctx), ctx + " target"));
                const std::size_t k = c.target.invariants().size();
                const json& mj = field(lj, "map", ctx);
                const std::size_t cols = mj.is_array() && !mj.empty() && mj[0].is_array() ? mj[0].size() : 0;
                c.map_matrix = to_matrix(mj, k, cols, ctx + " map");
                c.subgroup_gens = to_columns(field(lj, "subgroup", ctx), k, ctx + " subgroup");
                f.local_conditions.push_back(std::move(c));
            }
        }
        validate_fixture(f);
        return f;
    });
}

std::string write_fixture(const ArithmeticFixture& f)
{
    json primes = json::array();
    for (const auto& pd : f.primes) {
        primes.push_back({{"p", from_int(pd.p)},
                          {"decomposition", from_subgroup(pd.decomposition)},
                          {"inertia", from_subgroup(pd.inertia)},
                          {"valuations", from_vector(pd.vals)}});
    }
    json classes = json::array();
    for (const auto& cd : f.class_data) {
        json pcs = json::array();
        for (const auto& pc : cd.prime_classes) {
            json cl = json::array();
            for (const auto& c : pc.classes) {
                cl.push_back(from_vector(c));
            }
            pcs.push_back({{"p", from_int(pc.p)}, {"classes", cl}});
        }
        classes.push_back({{"subgroup", from_subgroup(cd.subgroup)},
                           {"class_group", from_vector(cd.clgroup.invariants())},
                           {"prime_classes", pcs}});
    }
    json conds = json::array();
    for (const auto& c : f.local_conditions) {
        conds.push_back({{"name", c.name},
                         {"p", from_int(c.p)},
                         {"target", from_vector(c.target.invariants())},
                         {"map", from_matrix(c.map_matrix)},
                         {"subgroup", from_columns(c.subgroup_gens)}});
    }
    json names = json::array();
    for (const auto& nm : f.sunit_names) {
        names.push_back(nm);
    }
    const json j = {{"schema", kFixtureSchema},
                    {"name", f.name},
                    {"base_field", f.base_field},
                    {"splitting_field", f.splitting_field},
                    {"group", from_group(f.group)},
                    {"chi", from_chi(f.chi)},
                    {"sunits",
                     {{"names", names}, {"orders", from_vector(f.sunits.orders())}, {"action", from_actions(f.sunits)}}},
                    {"primes", primes},
                    {"class_data", classes},
                    {"local_conditions", conds}};
    return dump(j);
}

SelmerSystem parse_system(std::string_view text)
{
    return wrap([&] {
        const json j = parse_json(text);
        expect_schema(j, kSystemSchema);
        SelmerSystem s;
        for (const auto& e : array_field(j, "entries", "system")) {
            const Int p = to_int(field(e, "p", "system entry"), "system entry p");
            if (!is_prime(p)) {
                schema_error(fmt::format("system entry: {} is not a prime", p.get_str()));
            }
            const std::string kind = get_string(e, "condition", "system entry");
            Condition c;
            if (kind == "unramified") {
                c.kind = ConditionKind::Unramified;
            } else if (kind == "relaxed") {
                c.kind = ConditionKind::Relaxed;
            } else if (kind == "custom") {
                c.kind = ConditionKind::Custom;
                c.ref = get_string(e, "ref", "custom system entry");
            } else {
                schema_error(fmt::format("system entry at {}: unknown condition '{}'", p.get_str(), kind));
            }
            if (!s.entries.emplace(p, c).second) {
                schema_error(fmt::format("system lists the prime {} twice", p.get_str()));
            }
        }
        return s;
    });
}

std::string write_system(const SelmerSystem& s)
{
    json entries = json::array();
    for (const auto& [p, c] : s.entries) {
        json e = {{"p", from_int(p)}, {"condition", to_string(c.kind)}};
        if (c.kind == ConditionKind::Custom) {
            e["ref"] = c.ref;
        }
        entries.push_back(e);
    }
    return dump({{"schema", kSystemSchema}, {"entries", entries}});
}

std::string write_resolution(const Resolution& r, const std::string& module_name)
{
    json levels = json::array();
    for (const auto& p : r.P) {
        json blocks = json::array();
        for (const auto& h : p.blocks) {
            blocks.push_back(from_subgroup(h));
        }
        levels.push_back({{"blocks", blocks}});
    }
    json dstar = json::array();
    for (const auto& t : r.d_star) {
        json coeffs = json::array();
        for (const auto& row : t.coeffs) {
            json jr = json::array();
            for (const auto& c : row) {
                jr.push_back(from_vector(c));
            }
            coeffs.push_back(jr);
        }
        dstar.push_back({{"coeffs", coeffs}});
    }
    const ModuleFile mf{module_name, "", r.m, r.chi};
    return dump({{"schema", kResolutionSchema},
                 {"module", module_to_json(mf)},
                 {"levels", levels},
                 {"s", from_matrix(r.s.matrix)},
                 {"d_star", dstar}});
}

Resolution parse_resolution(std::string_view text)
{
    return wrap([&] {
        const json j = parse_json(text);
        expect_schema(j, kResolutionSchema);
        const json& mj = field(j, "module", "resolution");
        const PermGroup g = to_group(field(mj, "group", "module"), "module group");
        const IntVector orders = to_vector(field(mj, "orders", "module"), "module orders");
        Resolution r;
        r.m = GModule(g, orders, to_actions(field(mj, "action", "module"), orders.size(), "module action"));
        r.chi = to_chi(g, field(mj, "chi", "module"), "module chi");
        r.mstar = dual_module(r.m, r.chi);
        for (const auto& lj : array_field(j, "levels", "resolution")) {
            std::vector<Subgroup> blocks;
            for (const auto& b : array_field(lj, "blocks", "level")) {
                blocks.push_back(to_subgroup(g, b, "block"));
            }
            r.P.push_back(perm_module(g, std::move(blocks)));
        }
        if (r.P.empty()) {
            schema_error("resolution has no levels");
        }
        r.s = AbHom(FgAbGroup::free(r.P[0].rank()), r.mstar.abelian(),
                    to_matrix(field(j, "s", "resolution"), r.mstar.rank(), r.P[0].rank(), "s"));
        const json& dj = array_field(j, "d_star", "resolution");
        if (dj.size() + 1 != r.P.size()) {
            schema_error(fmt::format("{} maps for {} levels", dj.size(), r.P.size()));
        }
        for (std::size_t i = 0; i < dj.size(); ++i) {
            HeckeSum t = zero_hecke(r.P[i + 1], r.P[i]);
            const json& cj = array_field(dj[i], "coeffs", "d_star");
            if (cj.size() != t.coeffs.size()) {
                schema_error(fmt::format("d_{}*: {} target blocks, expected {}", i, cj.size(), t.coeffs.size()));
            }
            for (std::size_t a = 0; a < cj.size(); ++a) {
                if (!cj[a].is_array() || cj[a].size() != t.coeffs[a].size()) {
                    schema_error(fmt::format("d_{}*: wrong number of source blocks", i));
                }
                for (std::size_t b = 0; b < cj[a].size(); ++b) {
                    IntVector c = to_vector(cj[a][b], "coefficients");
                    if (c.size() != t.coeffs[a][b].size()) {
                        schema_error(fmt::format("d_{}*: block ({}, {}) has {} coefficients, expected {}", i, a, b,
                                                 c.size(), t.coeffs[a][b].size()));
                    }
                    t.coeffs[a][b] = std::move(c);
                }
            }
            r.d_star.push_back(std::move(t));
        }
        const CheckResult ok = check_exactness(r);
        if (!ok.ok) {
            fail(ErrorCode::InvariantViolation, "resolution file is not exact: " + ok.failure);
        }
        return r;
    });
}

bool same_resolution(const Resolution& a, const Resolution& b)
{
    if (a.m.group().degree() != b.m.group().degree() || a.m.group().generators() != b.m.group().generators()) {
        return false;
    }
    if (a.m.orders() != b.m.orders() || a.m.generator_action() != b.m.generator_action()) {
        return false;
    }
    if (a.chi.modulus() != b.chi.modulus() || a.chi.generator_values() != b.chi.generator_values()) {
        return false;
    }
    if (a.P.size() != b.P.size() || a.d_star.size() != b.d_star.size() || a.s.matrix != b.s.matrix) {
        return false;
    }
    for (std::size_t i = 0; i < a.P.size(); ++i) {
        if (!(a.P[i] == b.P[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.d_star.size(); ++i) {
        if (a.d_star[i].coeffs != b.d_star[i].coeffs) {
            return false;
        }
    }
    return true;
}

FieldRequests field_requests(const Resolution& r, const std::string& module_name, const std::string& base_field,
                             const std::vector<Int>& pool)
{
    FieldRequests fr;
    fr.module_name = module_name;
    fr.base_field = base_field;
    fr.group = r.m.group();
    fr.chi = r.chi;
    for (std::size_t level = 0; level < r.P.size(); ++level) {
        for (const auto& h : r.P[level].blocks) {
            std::size_t k = 0;
            while (k < fr.subgroups.size() && !(fr.subgroups[k] == h)) {
                ++k;
            }
            if (k == fr.subgroups.size()) {
                fr.subgroups.push_back(h);
                fr.levels.emplace_back();
            }
            if (fr.levels[k].empty() || fr.levels[k].back() != level) {
                fr.levels[k].push_back(level);
            }
            if (level == 0 && std::find(fr.class_data_subgroups.begin(), fr.class_data_subgroups.end(), h) ==
                                  fr.class_data_subgroups.end()) {
                fr.class_data_subgroups.push_back(h);
            }
        }
    }
    fr.required_primes = prime_divisors(r.m.exponent());
    fr.prime_pool = pool;
    for (const auto& p : fr.required_primes) {
        if (std::find(fr.prime_pool.begin(), fr.prime_pool.end(), p) == fr.prime_pool.end()) {
            fr.prime_pool.push_back(p);
        }
    }
    std::sort(fr.prime_pool.begin(), fr.prime_pool.end());
    return fr;
}

std::string write_field_requests(const FieldRequests& fr)
{
    json subs = json::array();
    for (std::size_t k = 0; k < fr.subgroups.size(); ++k) {
        json lv = json::array();
        for (auto l : fr.levels[k]) {
            lv.push_back(l);
        }
        subs.push_back({{"generators", from_subgroup(fr.subgroups[k])},
                        {"order", std::to_string(fr.subgroups[k].order())},
                        {"levels", lv}});
    }
    json cls = json::array();
    for (const auto& h : fr.class_data_subgroups) {
        cls.push_back(from_subgroup(h));
    }
    json pool = json::array();
    for (const auto& p : fr.prime_pool) {
        pool.push_back(from_int(p));
    }
    json req = json::array();
    for (const auto& p : fr.required_primes) {
        req.push_back(from_int(p));
    }
    return dump({{"schema", kFieldRequestsSchema},
                 {"module", fr.module_name},
                 {"base_field", fr.base_field},
                 {"group", from_group(fr.group)},
                 {"chi", from_chi(fr.chi)},
                 {"subgroups", subs},
                 {"class_data_subgroups", cls},
                 {"prime_pool", pool},
                 {"required_primes", req}});
}

std::string schema_of(std::string_view text)
{
    return wrap([&] { return get_string(parse_json(text), "schema", "document"); });
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::SchemaError, fmt::format("cannot read '{}'", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            fail(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
        }
        out << contents;
        if (!out) {
            fail(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        fail(ErrorCode::InvalidArgument, fmt::format("cannot write '{}': {}", path, ec.message()));
    }
}

} // namespace selmer
