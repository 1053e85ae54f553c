#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqcoh/real_form.hpp"
#include "aqcoh/root_system.hpp"
#include "aqcoh/weyl.hpp"

namespace aqcoh {

// A positive system of Delta containing Delta_k^+, with its simple system.
struct PositiveSystem {
    int index = 0;                    // 1-based id in canonical order
    std::vector<Root> roots;          // sorted lexicographically
    std::vector<Root> simple_system;  // sorted lexicographically
    // Case number in the reference classification table for f4(4); only set
    // when the algebra is the built-in F4 with noncompact node 1.
    std::optional<int> reference_case;
};

// All positive systems containing the compact positive roots, obtained as the
// Weyl orbit of the base positive system, deduplicated, and sorted
// canonically (lexicographically on the sorted simple-system vectors).
std::vector<PositiveSystem> enumerate_positive_systems(const RootSystem& rs,
                                                       const WeylGroup& weyl,
                                                       const Coloring& coloring);

// Reference case numbering (1..12) for the split real form of F4 with
// noncompact node 1: the fixed case order used by the classification tables
// for this real form, identified by simple-system equality.  Empty optional
// when the configuration is not that real form or the system is not listed.
std::optional<int> f4_split_reference_case(const RootSystem& rs,
                                           const Coloring& coloring,
                                           const std::vector<Root>& simple_system);

struct ForbiddenPatternReport {
    bool passed = true;
    // Pairs {a, b} of positive noncompact roots whose sum is a compact
    // positive root (so −a, −b can never coexist in a system containing
    // Delta_k^+: the system would contain −a−b by closure and a+b as a
    // compact positive root).  For a single-node coloring these sums land in
    // the even layers Delta_2, Delta_4, ...
    std::vector<std::pair<Root, Root>> checked_pairs;
    std::vector<int> offending_systems; // 1-based indices of violations
    std::string detail;
};

// Checks every enumerated system against all pairs a, b ∈ Delta_n^+ whose sum
// is a compact positive root: no system may contain both −a and −b.
// Vacuously passes when no such pairs exist.
ForbiddenPatternReport verify_forbidden_patterns(const RootSystem& rs,
                                                 const Coloring& coloring,
                                                 const std::vector<PositiveSystem>& systems);

} // namespace aqcoh
