#ifndef MEDIATOR_SCENARIO_IO_HPP
#define MEDIATOR_SCENARIO_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "mediator/scenario.hpp"

namespace mediator {

/// Outcome of loading a scenario file. Parse errors carry the offending
/// line number; validation issues come from validate_scenario. A scenario
/// is only present when parsing succeeded (it may still be invalid).
struct LoadResult {
    std::optional<Scenario> scenario;
    std::vector<std::string> parse_errors;
    ValidationReport validation;

    bool parsed() const { return scenario.has_value(); }
    bool ok() const { return parsed() && validation.valid(); }
};

/// Parses the scenario text format. Lines are `key: value` with keys
/// users, delta, negotiators, uploader, targets, group, policy, tie.
/// Blank lines and lines starting with '#' are ignored; unknown keys are
/// rejected. The scenario id defaults to the given fallback (usually the
/// file stem).
LoadResult parse_scenario(const std::string& text,
                          const std::string& fallback_id = "scenario");

LoadResult load_scenario(const std::string& path);

/// Canonical serialization: save(load(f)) is byte-identical for canonical
/// fixtures.
std::string to_text(const Scenario& s);

/// Writes to_text(s) to path. Returns false on IO failure.
bool save_scenario(const Scenario& s, const std::string& path);

}  // namespace mediator

#endif
