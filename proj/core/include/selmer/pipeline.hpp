#pragma once

#include "selmer/arithmetic.hpp"
#include "selmer/resolution.hpp"
#include "selmer/selmer.hpp"
#include "selmer/serialize.hpp"

#include <string>
#include <vector>

namespace selmer {

/// The module rebuilt on the fixture's group. Throws InvariantViolation if
/// the two disagree on the group presentation or on chi.
ModuleFile attach_to_fixture(const ModuleFile& mf, const ArithmeticFixture& f);

inline constexpr long kTorsionLevels[] = {2, 3, 4, 5, 6, 8, 9};

struct TorsionSummary {
    std::vector<Int> levels;
    bool ok = true;
    std::string failure;
};

/// verify_torsion_exactness for every level in kTorsionLevels dividing bound.
TorsionSummary torsion_check(const DualSequence& ds, const Int& bound);

struct RunOptions {
    std::size_t depth = 2;
    Int torsion_bound = 360;
    SPolicy policy;
};

struct SelmerRun {
    ModuleFile module;
    std::string fixture_name;
    std::vector<std::string> sunit_names;
    Resolution resolution;
    DualSequence ds;
    TorsionSummary torsion;
    /// Set by run_selmer; run_h1s fills only sel.h1 and sel.S.
    bool has_selmer = false;
    SelmerGroup sel;
};

/// Throws InternalError-coded Error when the torsion check fails.
SelmerRun run_selmer(const ModuleFile& mf, const ArithmeticFixture& f, const SelmerSystem& system,
                     const RunOptions& opt = {});
SelmerRun run_h1s(const ModuleFile& mf, const ArithmeticFixture& f, const RunOptions& opt = {});

/// "-1", "2", "zeta6^2*(1-zeta3)"; blocks of a multi-block ambient are
/// joined as "(a | b)".
std::string format_element(const std::vector<std::string>& names, const IntVector& x);

/// "Sel ≅ (Z/2)^2; generators: -1, 2" and the rest of the text report.
std::string render_text(const SelmerRun& run);
std::string render_machine(const SelmerRun& run);
std::string render_explain(const SelmerRun& run);

} // namespace selmer
