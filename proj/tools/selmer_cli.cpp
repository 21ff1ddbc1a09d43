#include "selmer/errors.hpp"
#include "selmer/pipeline.hpp"
#include "selmer/serialize.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <sstream>

using namespace selmer;

namespace {

enum Exit { kOk = 0, kValidation = 2, kAlgorithm = 3, kLocalData = 4, kFixture = 5 };

struct StageError {
    std::string stage;
    ErrorCode code;
    std::string message;
    int exit;
};

int exit_for(ErrorCode c)
{
    switch (c) {
    case ErrorCode::SchemaError:
    case ErrorCode::InvariantViolation:
    case ErrorCode::NonInvertibleAction:
    case ErrorCode::GroupTooSmall:
    case ErrorCode::InvalidArgument:
        return kValidation;
    case ErrorCode::NeedsLocalData:
        return kLocalData;
    case ErrorCode::RamifiedPrime:
    case ErrorCode::DividesM:
    case ErrorCode::MissingClassData:
    case ErrorCode::PoolExhausted:
    case ErrorCode::MissingPrime:
    case ErrorCode::SUnitLeak:
    case ErrorCode::NotWellDefined:
        return kFixture;
    default:
        return kAlgorithm;
    }
}

// Runs fn, tagging any library error with the stage; errors while reading a
// fixture count as fixture inconsistencies.
template <class F>
auto stage(const std::string& name, F&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        int code = exit_for(e.code());
        if (name == "fixture" && code == kValidation) {
            code = kFixture;
        }
        throw StageError{name, e.code(), e.what(), code};
    }
}

std::vector<Int> parse_primes(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) {
            continue;
        }
        Int p;
        if (p.set_str(tok, 10) != 0 || !is_prime(p)) {
            fail(ErrorCode::InvalidArgument, fmt::format("'{}' is not a prime", tok));
        }
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Common {
    std::size_t depth = 2;
    std::string torsion_bound = "360";
    std::string pool;
    std::string extra;
    std::string output = "text";
};

RunOptions options(const Common& c)
{
    return stage("options", [&] {
        RunOptions o;
        o.depth = c.depth;
        if (o.torsion_bound.set_str(c.torsion_bound, 10) != 0 || o.torsion_bound <= 0) {
            fail(ErrorCode::InvalidArgument, "torsion bound must be a positive integer");
        }
        if (!c.pool.empty()) {
            o.policy.pool = parse_primes(c.pool);
        }
        o.policy.extra = parse_primes(c.extra);
        return o;
    });
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

void add_common(CLI::App* cmd, Common& c, bool run)
{
    cmd->add_option("--depth", c.depth, "resolution depth")->check(CLI::Range(1, 8));
    cmd->add_option("--pool", c.pool, "comma separated primes");
    if (run) {
        cmd->add_option("--torsion-bound", c.torsion_bound, "check torsion models at levels dividing this");
        cmd->add_option("--extra-primes", c.extra, "primes forced into S");
        cmd->add_option("--output", c.output, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Selmer groups of finite Galois modules"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    auto* validate = app.add_subcommand("validate", "check module, fixture, system or resolution files");
    validate->add_option("files", files)->required()->check(CLI::ExistingFile);

    Common common;
    std::string module_path, fixture_path, system_path, out_path, requests_path;

    auto* resolve_cmd = app.add_subcommand("resolve", "resolve the dual module; write resolution and field requests");
    resolve_cmd->add_option("module", module_path)->required()->check(CLI::ExistingFile);
    resolve_cmd->add_option("-o,--out", out_path, "resolution file");
    resolve_cmd->add_option("--requests", requests_path, "field-requests file");
    add_common(resolve_cmd, common, false);

    auto* fr_cmd = app.add_subcommand("field-requests", "subgroups and primes a fixture must cover");
    fr_cmd->add_option("module", module_path)->required()->check(CLI::ExistingFile);
    fr_cmd->add_option("-o,--out", out_path);
    add_common(fr_cmd, common, false);

    auto* h1s_cmd = app.add_subcommand("h1s", "compute H^1_S");
    h1s_cmd->add_option("module", module_path)->required()->check(CLI::ExistingFile);
    h1s_cmd->add_option("fixture", fixture_path)->required()->check(CLI::ExistingFile);
    add_common(h1s_cmd, common, true);

    auto* selmer_cmd = app.add_subcommand("selmer", "compute the Selmer group of a system");
    auto* explain_cmd = app.add_subcommand("explain", "selmer with the intermediate data");
    for (auto* cmd : {selmer_cmd, explain_cmd}) {
        cmd->add_option("module", module_path)->required()->check(CLI::ExistingFile);
        cmd->add_option("fixture", fixture_path)->required()->check(CLI::ExistingFile);
        cmd->add_option("system", system_path)->required()->check(CLI::ExistingFile);
        add_common(cmd, common, true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kValidation;
    }

    try {
        if (validate->parsed()) {
            for (const auto& f : files) {
                const std::string text = stage("read", [&] { return read_file(f); });
                const std::string schema = stage("validate", [&] { return schema_of(text); });
                if (schema == kModuleSchema) {
                    stage("module", [&] { return parse_module(text); });
                } else if (schema == kFixtureSchema) {
                    stage("fixture", [&] { return parse_fixture(text); });
                } else if (schema == kSystemSchema) {
                    stage("system", [&] { return parse_system(text); });
                } else if (schema == kResolutionSchema) {
                    stage("resolution", [&] { return parse_resolution(text); });
                } else if (schema != kFieldRequestsSchema && schema != kReportSchema) {
                    throw StageError{"validate", ErrorCode::SchemaError, "unknown schema " + schema, kValidation};
                }
                std::cout << "ok " << schema << " " << f << "\n";
            }
            return kOk;
        }

        const ModuleFile mf = stage("module", [&] { return parse_module(read_file(module_path)); });
        const RunOptions opt = options(common);

        if (resolve_cmd->parsed() || fr_cmd->parsed()) {
            const Resolution r = stage("resolve", [&] { return resolve(mf.m, mf.chi, opt.depth); });
            const std::vector<Int> pool = opt.policy.pool.value_or(std::vector<Int>{});
            const FieldRequests fr = field_requests(r, mf.name, mf.base_field, pool);
            if (fr_cmd->parsed()) {
                emit(write_field_requests(fr), out_path);
                return kOk;
            }
            if (!out_path.empty()) {
                write_file(out_path, write_resolution(r, mf.name));
            }
            if (!requests_path.empty()) {
                write_file(requests_path, write_field_requests(fr));
            }
            std::string ranks;
            for (std::size_t i = 0; i < r.P.size(); ++i) {
                ranks += (i ? " " : "") + std::to_string(r.P[i].rank());
            }
            std::cout << "resolution ranks: " << ranks << "\n";
            if (out_path.empty()) {
                std::cout << write_resolution(r, mf.name);
            }
            return kOk;
        }

        const ArithmeticFixture fx = stage("fixture", [&] { return parse_fixture(read_file(fixture_path)); });
        stage("cross-check", [&] { return attach_to_fixture(mf, fx); });

        SelmerRun run;
        if (h1s_cmd->parsed()) {
            run = stage("h1s", [&] { return run_h1s(mf, fx, opt); });
        } else {
            const SelmerSystem sys = stage("system", [&] { return parse_system(read_file(system_path)); });
            run = stage("selmer", [&] { return run_selmer(mf, fx, sys, opt); });
        }
        if (explain_cmd->parsed()) {
            std::cout << render_explain(run);
        } else if (common.output == "machine") {
            std::cout << render_machine(run);
        } else {
            std::cout << render_text(run);
        }
        return kOk;
    } catch (const StageError& e) {
        std::cerr << "error [" << e.stage << "]: " << e.message << "\n";
        return e.exit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAlgorithm;
    }
}
