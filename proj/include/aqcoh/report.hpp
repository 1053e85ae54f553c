#pragma once

#include <string>
#include <vector>

#include "aqcoh/classification.hpp"
#include "aqcoh/root_system.hpp"

namespace aqcoh {

// Pretty-print a root as a signed combination of the base simple roots,
// e.g. "φ1+2φ2+2φ3", "φ2", "-(φ1+φ2)".
std::string render_root(const Root& root);

// "{φ1, φ1+φ2, ...}" with elements in the given order.
std::string render_root_set(const std::vector<Root>& roots);

enum class OutputFormat { markdown, csv, json };

OutputFormat parse_output_format(const std::string& name); // throws SpecParseError

// Positive-systems listing: one row per system with its simple roots and the
// noncompact half it determines.
std::string render_positive_systems(const ClassificationReport& report, OutputFormat fmt);

// Full classification: one row per equivalence class with R, Levi type,
// Poincaré polynomial and the discrete-series / Borel-de Siebenthal flags,
// plus the representative (system, Γ) pairs.
std::string render_classification(const ClassificationReport& report, OutputFormat fmt);

// Cross-check results, one line per check.  Text for the terminal, JSON for
// machines (fmt == csv falls back to text).
std::string render_checks(const ClassificationReport& report, OutputFormat fmt);

// Golden-file comparison: parse `golden_json` (same schema as the JSON
// classification output) and diff it against `report`.  Returns a list of
// human-readable mismatches; empty means the report matches the golden file.
std::vector<std::string> diff_against_golden(const ClassificationReport& report,
                                             const std::string& golden_json);

} // namespace aqcoh
