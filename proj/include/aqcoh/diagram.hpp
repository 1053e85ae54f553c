#pragma once

#include <string>
#include <vector>

#include "aqcoh/root_system.hpp"

namespace aqcoh {

// One irreducible factor of a diagram classification.
struct DiagramFactor {
    char family = 'A';             // 'A','B','C','D','E','F','G'
    int rank = 0;
    // 1-based positions of noncompact nodes in the canonical node order of the
    // family (chains numbered along the diagram, double edge at the end for
    // B/C, fork last for D, G2 = (short, long), F4 = (long, long, short,
    // short)); among the orderings allowed by the diagram's automorphisms the
    // lexicographically smallest position list is chosen.
    std::vector<int> noncompact_positions;

    std::string label() const; // e.g. "C3", "A2(ν=1)"
};

// Classify the Dynkin diagram spanned by `simple_roots` (arbitrary roots of
// rs forming a simple system of some subsystem).  `noncompact` marks each
// root, aligned with simple_roots.  Factors are returned sorted by
// (rank descending, family letter, positions).  Throws
// UnrecognizedDiagramError for non-finite shapes.
std::vector<DiagramFactor> classify_diagram(const RootSystem& rs,
                                            const std::vector<Root>& simple_roots,
                                            const std::vector<bool>& noncompact);

// Factors joined with "×"; empty input renders as "1".
std::string diagram_label(const std::vector<DiagramFactor>& factors);

} // namespace aqcoh
