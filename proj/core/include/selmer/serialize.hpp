#pragma once

#include "selmer/arithmetic.hpp"
#include "selmer/gmodule.hpp"
#include "selmer/resolution.hpp"
#include "selmer/selmer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace selmer {

inline constexpr std::string_view kModuleSchema = "selmer-module/1";
inline constexpr std::string_view kFixtureSchema = "selmer-fixture/1";
inline constexpr std::string_view kSystemSchema = "selmer-system/1";
inline constexpr std::string_view kResolutionSchema = "selmer-resolution/1";
inline constexpr std::string_view kFieldRequestsSchema = "selmer-field-requests/1";
inline constexpr std::string_view kReportSchema = "selmer-report/1";

/// JSON documents; integers are decimal strings, keys sorted. All readers
/// throw SchemaError on malformed input and run the domain validators.

struct ModuleFile {
    std::string name;
    std::string base_field;
    GModule m;
    CycloCharacter chi;
};

/// Throws GroupTooSmall when the base field is Q and chi does not map onto
/// (Z/m)^x.
ModuleFile parse_module(std::string_view text);
std::string write_module(const ModuleFile& mf);

ArithmeticFixture parse_fixture(std::string_view text);
std::string write_fixture(const ArithmeticFixture& f);

SelmerSystem parse_system(std::string_view text);
std::string write_system(const SelmerSystem& s);

/// The module travels with the resolution; M* is rebuilt on load.
std::string write_resolution(const Resolution& r, const std::string& module_name);
Resolution parse_resolution(std::string_view text);
bool same_resolution(const Resolution& a, const Resolution& b);

struct FieldRequests {
    std::string module_name;
    std::string base_field;
    PermGroup group;
    CycloCharacter chi;
    /// Every block subgroup, first occurrence order, with its levels.
    std::vector<Subgroup> subgroups;
    std::vector<std::vector<std::size_t>> levels;
    /// Level-0 blocks, which need class data.
    std::vector<Subgroup> class_data_subgroups;
    std::vector<Int> prime_pool;
    /// Primes dividing exponent(M); always in the pool.
    std::vector<Int> required_primes;
};

FieldRequests field_requests(const Resolution& r, const std::string& module_name, const std::string& base_field,
                             const std::vector<Int>& pool);
std::string write_field_requests(const FieldRequests& fr);

/// Reads the "schema" field of a document.
std::string schema_of(std::string_view text);

std::string read_file(const std::string& path);
/// Writes atomically through a temporary file in the same directory.
void write_file(const std::string& path, const std::string& contents);

} // namespace selmer
