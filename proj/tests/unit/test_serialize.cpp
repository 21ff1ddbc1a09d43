#include "selmer/errors.hpp"
#include "selmer/serialize.hpp"
#include "test_data.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>

using namespace selmer;
using namespace selmer::testing;
using json = nlohmann::json;

namespace {

ErrorCode code_of(const auto& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

json module_json(const std::string& name)
{
    return json::parse(read_file(data_path("modules/" + name + ".json")));
}

} // namespace

TEST_CASE("module files round trip")
{
    for (const char* name : {"kummer_z2", "cubic_z3", "kummer_z2_over_zeta3"}) {
        const std::string text = read_file(data_path(std::string("modules/") + name + ".json"));
        const ModuleFile mf = parse_module(text);
        const std::string out = write_module(mf);
        CHECK(schema_of(out) == kModuleSchema);
        const ModuleFile back = parse_module(out);
        CHECK(back.name == mf.name);
        CHECK(back.m.orders() == mf.m.orders());
        CHECK(back.m.generator_action() == mf.m.generator_action());
        CHECK(back.chi.generator_values() == mf.chi.generator_values());
        CHECK(write_module(back) == out);
    }
}

TEST_CASE("fixture and system files round trip")
{
    for (const char* name : {"q_trivial", "q_zeta3", "q_zeta3_237"}) {
        const ArithmeticFixture f = load_fixture(name);
        const std::string out = write_fixture(f);
        const ArithmeticFixture back = parse_fixture(out);
        CHECK(write_fixture(back) == out);
        CHECK(back.pool() == f.pool());
        CHECK(back.local_conditions.size() == f.local_conditions.size());
    }
    for (const auto& e : std::filesystem::directory_iterator(data_path("systems"))) {
        const SelmerSystem s = parse_system(read_file(e.path().string()));
        const SelmerSystem back = parse_system(write_system(s));
        CHECK(back.entries == s.entries);
    }
    const SelmerSystem k5 = load_system("kummer_custom_5");
    CHECK(k5.at(5).kind == ConditionKind::Custom);
    CHECK(k5.at(5).ref == "q5-kummer-unramified");
    CHECK(k5.at(7).kind == ConditionKind::Unramified);
}

TEST_CASE("resolutions survive a write and reload")
{
    for (const auto& g : small_groups()) {
        for (const auto& c : module_suite(g)) {
            CAPTURE(c.name);
            const Resolution r = resolve(c.m, c.chi, 2);
            const std::string text = write_resolution(r, c.name);
            CHECK(schema_of(text) == kResolutionSchema);
            const Resolution back = parse_resolution(text);
            CHECK(same_resolution(r, back));
            CHECK(write_resolution(back, c.name) == text);
        }
    }
}

TEST_CASE("a corrupted resolution is refused on load")
{
    const Resolution r = resolve(GModule::trivial(cyclic_group(2), {2}), CycloCharacter::trivial(cyclic_group(2), 2), 2);
    json j = json::parse(write_resolution(r, "z2"));
    bool changed = false;
    for (auto& d : j["d_star"]) {
        for (auto& row : d["coeffs"]) {
            for (auto& cell : row) {
                for (auto& x : cell) {
                    if (!changed) {
                        x = "5";
                        changed = true;
                    }
                }
            }
        }
    }
    REQUIRE(changed);
    CHECK(code_of([&] { parse_resolution(j.dump()); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("module validation")
{
    CHECK(code_of([] { load_module("singular_action"); }) == ErrorCode::NonInvertibleAction);
    CHECK(code_of([] { load_module("z3_trivial_group"); }) == ErrorCode::GroupTooSmall);
    {
        json j = module_json("cubic_z3");
        j["chi"]["modulus"] = "9";
        CHECK(code_of([&] { parse_module(j.dump()); }) != ErrorCode::Internal);
    }
    {
        json j = module_json("kummer_z2");
        j["schema"] = "selmer-module/2";
        CHECK(code_of([&] { parse_module(j.dump()); }) == ErrorCode::SchemaError);
    }
    {
        json j = module_json("kummer_z2");
        j["orders"] = json::array({"0"});
        CHECK(code_of([&] { parse_module(j.dump()); }) != ErrorCode::Internal);
    }
    CHECK(code_of([] { parse_module("{not json"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_module("[1, 2]"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_system(R"({"schema": "selmer-system/1", "entries": [{"p": "2", "condition": "odd"}]})"); }) ==
          ErrorCode::SchemaError);
}

TEST_CASE("field requests list every block subgroup")
{
    const ModuleFile mf = load_module("cubic_z3");
    const Resolution r = resolve(mf.m, mf.chi, 2);
    const FieldRequests fr = field_requests(r, mf.name, mf.base_field, {7, 2});
    CHECK(fr.prime_pool == std::vector<Int>{2, 3, 7});
    CHECK(fr.required_primes == std::vector<Int>{3});
    std::size_t blocks = 0;
    for (const auto& p : r.P) {
        for (const auto& h : p.blocks) {
            ++blocks;
            CHECK(std::find(fr.subgroups.begin(), fr.subgroups.end(), h) != fr.subgroups.end());
        }
    }
    CHECK(fr.subgroups.size() <= blocks);
    CHECK(fr.class_data_subgroups.size() <= r.P[0].blocks.size());
    const json j = json::parse(write_field_requests(fr));
    CHECK(j["schema"] == kFieldRequestsSchema);
    CHECK(j["subgroups"].size() == fr.subgroups.size());
    CHECK(write_field_requests(fr) == write_field_requests(field_requests(r, mf.name, mf.base_field, {2, 7})));
}

TEST_CASE("write_file replaces atomically")
{
    const auto dir = std::filesystem::temp_directory_path() / "selmer_serialize_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "out.json").string();
    write_file(path, "one\n");
    write_file(path, "two\n");
    CHECK(read_file(path) == "two\n");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    CHECK(code_of([] { read_file("/nonexistent/selmer.json"); }) == ErrorCode::SchemaError);
    std::filesystem::remove_all(dir);
}
