#include "selmer/pipeline.hpp"

#include "selmer/cocycle.hpp"
#include "selmer/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace selmer {

using json = nlohmann::json;

ModuleFile attach_to_fixture(const ModuleFile& mf, const ArithmeticFixture& f)
{
    const PermGroup& g = mf.m.group();
    if (g.degree() != f.group.degree() || g.generators() != f.group.generators()) {
        fail(ErrorCode::InvariantViolation,
             fmt::format("module '{}' and fixture '{}' present different groups", mf.name, f.name));
    }
    const Int& m = mf.chi.modulus();
    if (f.chi.modulus() % m != 0) {
        fail(ErrorCode::InvariantViolation,
             fmt::format("roots of unity of order {} are not in {} (fixture has {})", m.get_str(), f.splitting_field,
                         f.chi.modulus().get_str()));
    }
    const CycloCharacter fc = f.chi.reduce(m);
    if (fc.generator_values() != mf.chi.generator_values()) {
        fail(ErrorCode::InvariantViolation,
             fmt::format("module '{}' and fixture '{}' disagree on chi", mf.name, f.name));
    }
    ModuleFile out = mf;
    out.m = GModule(f.group, mf.m.orders(), mf.m.generator_action());
    out.chi = fc;
    return out;
}

TorsionSummary torsion_check(const DualSequence& ds, const Int& bound)
{
    TorsionSummary out;
    for (long n : kTorsionLevels) {
        if (bound % n != 0) {
            continue;
        }
        out.levels.emplace_back(n);
        const TorsionCheck r = verify_torsion_exactness(ds, n);
        if (!r.ok) {
            out.ok = false;
            out.failure = fmt::format("level {}: {}{}", n, r.failure,
                                      r.counterexample ? " at " + to_string(*r.counterexample) : "");
            return out;
        }
    }
    return out;
}

namespace {

SelmerRun prepare(const ModuleFile& mf, const ArithmeticFixture& f, const RunOptions& opt)
{
    if (opt.depth < 2) {
        fail(ErrorCode::InvalidArgument, "Selmer computations need resolution depth at least 2");
    }
    SelmerRun run;
    run.module = attach_to_fixture(mf, f);
    run.fixture_name = f.name;
    run.sunit_names = f.sunit_names;
    run.resolution = resolve(run.module.m, run.module.chi, opt.depth);
    run.ds = dual_sequence(run.resolution);
    run.torsion = torsion_check(run.ds, opt.torsion_bound);
    if (!run.torsion.ok) {
        fail(ErrorCode::Internal, "torsion-model check failed: " + run.torsion.failure);
    }
    return run;
}

std::string group_line(const char* label, const FinAbGroup& g, const IntMatrix& reps,
                       const std::vector<std::string>& names)
{
    std::string out = fmt::format("{} ≅ {}", label, g.to_string());
    if (reps.cols() > 0) {
        out += "; generators: ";
        for (std::size_t i = 0; i < reps.cols(); ++i) {
            out += (i ? ", " : "") + format_element(names, reps.column(i));
        }
    }
    return out;
}

std::string prime_list(const std::vector<Int>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? ", " : "") + s[i].get_str();
    }
    return out + "}";
}

json int_list(const IntVector& v)
{
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(x.get_str());
    }
    return out;
}

json group_json(const FinAbGroup& g, const IntVector& orders, const IntMatrix& reps,
                const std::vector<std::string>& names)
{
    json gens = json::array();
    json labels = json::array();
    for (std::size_t i = 0; i < reps.cols(); ++i) {
        gens.push_back(int_list(reps.column(i)));
        labels.push_back(format_element(names, reps.column(i)));
    }
    return {{"invariants", int_list(g.invariants())},
            {"structure", g.to_string()},
            {"order", g.order().get_str()},
            {"factor_orders", int_list(orders)},
            {"generators", gens},
            {"labels", labels}};
}

std::string ranks(const Resolution& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.P.size(); ++i) {
        out += (i ? " " : "") + std::to_string(r.P[i].rank());
    }
    return out;
}

} // namespace

SelmerRun run_selmer(const ModuleFile& mf, const ArithmeticFixture& f, const SelmerSystem& system,
                     const RunOptions& opt)
{
    SelmerRun run = prepare(mf, f, opt);
    run.sel = selmer_group(system, run.ds, f, opt.policy);
    run.has_selmer = true;
    return run;
}

SelmerRun run_h1s(const ModuleFile& mf, const ArithmeticFixture& f, const RunOptions& opt)
{
    SelmerRun run = prepare(mf, f, opt);
    run.sel.S = select_S(SelmerSystem{}, f, run.ds, opt.policy);
    run.sel.h1 = h1s(run.ds, f, run.sel.S);
    return run;
}

std::string format_element(const std::vector<std::string>& names, const IntVector& x)
{
    const std::size_t n = names.size();
    if (n == 0 || x.size() % n != 0) {
        return to_string(x);
    }
    auto one_block = [&](std::size_t b) {
        std::string out;
        for (std::size_t i = 0; i < n; ++i) {
            const Int& e = x[b * n + i];
            if (e == 0) {
                continue;
            }
            const bool compound = names[i].find_first_of("+-*") != std::string::npos && names[i] != "-1";
            std::string term = compound ? "(" + names[i] + ")" : names[i];
            if (e != 1) {
                if (names[i] == "-1") {
                    term = "(-1)";
                }
                term += "^" + e.get_str();
            }
            out += (out.empty() ? "" : "*") + term;
        }
        return out.empty() ? std::string("1") : out;
    };
    const std::size_t blocks = x.size() / n;
    if (blocks == 1) {
        return one_block(0);
    }
    std::string out = "(";
    for (std::size_t b = 0; b < blocks; ++b) {
        out += (b ? " | " : "") + one_block(b);
    }
    return out + ")";
}

std::string render_text(const SelmerRun& run)
{
    std::string out;
    out += fmt::format("module: {} over {}; group of order {}\n", run.module.name, run.module.base_field,
                       run.module.m.group().order());
    out += fmt::format("fixture: {}\n", run.fixture_name);
    out += fmt::format("resolution ranks: {}\n", ranks(run.resolution));
    std::vector<std::string> lv;
    for (const auto& n : run.torsion.levels) {
        lv.push_back(n.get_str());
    }
    out += fmt::format("torsion models exact at levels: {}\n", lv.empty() ? "none" : fmt::format("{}", fmt::join(lv, " ")));
    out += fmt::format("S = {}\n", prime_list(run.sel.S));
    const H1SGroup& h = run.sel.h1;
    out += group_line("H^1_S", h.group, h.reps, run.sunit_names) + "\n";
    if (run.has_selmer) {
        for (const auto& oc : run.sel.outcomes) {
            out += fmt::format("condition at {}: {}\n", oc.p.get_str(), oc.note);
        }
        out += group_line("Sel", run.sel.group, run.sel.reps, run.sunit_names) + "\n";
    }
    return out;
}

std::string render_machine(const SelmerRun& run)
{
    const H1SGroup& h = run.sel.h1;
    json levels = json::array();
    for (const auto& p : run.resolution.P) {
        levels.push_back(p.rank());
    }
    json tl = json::array();
    for (const auto& n : run.torsion.levels) {
        tl.push_back(n.get_str());
    }
    json s = json::array();
    for (const auto& p : run.sel.S) {
        s.push_back(p.get_str());
    }
    json names = json::array();
    for (const auto& nm : run.sunit_names) {
        names.push_back(nm);
    }
    json j = {{"schema", kReportSchema},
              {"module", run.module.name},
              {"fixture", run.fixture_name},
              {"resolution_ranks", levels},
              {"torsion_levels", tl},
              {"S", s},
              {"sunit_names", names},
              {"h1s", group_json(h.group, h.orders, h.reps, run.sunit_names)}};
    if (run.has_selmer) {
        json conds = json::array();
        for (const auto& oc : run.sel.outcomes) {
            json passes = json::array();
            for (bool b : oc.passes) {
                passes.push_back(b);
            }
            json c = {{"p", oc.p.get_str()},
                      {"condition", to_string(oc.condition.kind)},
                      {"note", oc.note},
                      {"generator_passes", passes}};
            if (oc.condition.kind == ConditionKind::Custom) {
                c["ref"] = oc.condition.ref;
            }
            conds.push_back(c);
        }
        j["conditions"] = conds;
        j["selmer"] = group_json(run.sel.group, run.sel.orders, run.sel.reps, run.sunit_names);
    }
    return j.dump(2) + "\n";
}

std::string render_explain(const SelmerRun& run)
{
    std::string out;
    const Resolution& r = run.resolution;
    out += fmt::format("M = {} with chi mod {}; M* = {}\n", run.module.m.structure().to_string(),
                       run.module.chi.modulus().get_str(), r.mstar.structure().to_string());
    for (std::size_t i = 0; i < r.P.size(); ++i) {
        std::vector<std::string> blocks;
        for (const auto& h : r.P[i].blocks) {
            blocks.push_back(fmt::format("Z[G/H], |H| = {}", h.order()));
        }
        out += fmt::format("P_{}: rank {}{}{}\n", i, r.P[i].rank(), blocks.empty() ? "" : ": ",
                           fmt::join(blocks, " + "));
    }
    for (std::size_t i = 0; i < run.ds.d.size(); ++i) {
        std::vector<std::string> cs;
        for (const auto& row : run.ds.d[i].coeffs) {
            for (const auto& c : row) {
                cs.push_back(to_string(c));
            }
        }
        out += fmt::format("d_{} double-coset coefficients: {}\n", i, cs.empty() ? "none" : fmt::format("{}", fmt::join(cs, " ")));
    }
    out += fmt::format("torsion check: {} levels, {}\n", run.torsion.levels.size(), run.torsion.ok ? "exact" : run.torsion.failure);
    out += fmt::format("S = {}: primes dividing {} and non-unramified primes, extended until the class groups are spanned\n",
                       prime_list(run.sel.S), run.ds.exponent.get_str());
    const H1SGroup& h = run.sel.h1;
    out += group_line("H^1_S", h.group, h.reps, run.sunit_names) + "\n";
    if (run.has_selmer) {
        for (const auto& oc : run.sel.outcomes) {
            out += fmt::format("  at {} ({}): ", oc.p.get_str(), oc.note);
            for (std::size_t i = 0; i < oc.passes.size(); ++i) {
                out += fmt::format("{}{} {}", i ? ", " : "", format_element(run.sunit_names, h.reps.column(i)),
                                   oc.passes[i] ? "passes" : "fails");
            }
            out += "\n";
        }
        out += group_line("Sel", run.sel.group, run.sel.reps, run.sunit_names) + "\n";
    }
    return out;
}

} // namespace selmer
