#pragma once

#include <string>
#include <vector>

#include "aqcoh/cartan.hpp"

namespace aqcoh {

// Resolved input for one run: a Cartan matrix plus the coloring that selects
// the noncompact simple roots.
struct AlgebraSpec {
    std::string label;                  // "F4", "A2", "custom(rank=3)", ...
    CartanMatrix cartan;
    std::vector<std::size_t> noncompact_nodes; // 0-based node indices
};

// Build a spec from a series name ("A2", "B3", "F4", "G2", ...) and 1-based
// noncompact node indices.  Throws SpecParseError on malformed names or
// out-of-range nodes.
AlgebraSpec make_named_spec(const std::string& name,
                            const std::vector<int>& noncompact_one_based);

// Build a spec from a JSON document holding either a named type
//   {"type": "F4"}
// or an explicit matrix
//   {"cartan": [[2,-1],[-1,2]], "noncompact": [1], "label": "A2"}
// where "noncompact" holds 1-based node indices and "label" is optional.
// A "--noncompact" given on the command line overrides the file's list; pass
// it through noncompact_override (1-based, empty = use the file).
// Throws SpecParseError on malformed documents.
AlgebraSpec parse_algebra_spec_json(const std::string& json_text,
                                    const std::vector<int>& noncompact_override);

} // namespace aqcoh
