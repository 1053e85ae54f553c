#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqcoh/cohomology.hpp"
#include "aqcoh/parabolics.hpp"
#include "aqcoh/positive_systems.hpp"
#include "aqcoh/real_form.hpp"
#include "aqcoh/root_system.hpp"
#include "aqcoh/weyl.hpp"

namespace aqcoh {

// Exact half-integer vector: value[i] = twice[i] / 2.
struct HalfVector {
    std::vector<long long> twice;
    std::string to_string() const;
};

// Half the componentwise sum of a set of roots (delta_g for a positive
// system, delta_k for its compact part, ...).
HalfVector half_sum(const std::vector<Root>& roots);

// Data attached to a class that passes the discrete-series test.
struct DiscreteSeriesData {
    std::vector<Root> harish_chandra_order;   // Delta_k^+ ∪ Delta(u∩p), sorted
    std::vector<long long> blattner;          // Λ = Σ_{β ∈ Δ(u∩p)} β
    HalfVector lambda;                        // Harish-Chandra parameter = δ_g
    BdsKind bds_kind = BdsKind::not_bds;
};

// Theorem-1 test: Delta_k^+ ∪ Delta(u∩p) is a positive system of Delta.
// Implemented twice (cardinality + no ±pair + closure under addition, and
// membership in the enumerated positive-system list); the two must agree and
// a std::logic_error is thrown if they ever disagree.
bool is_discrete_series(const RootSystem& rs, const Coloring& coloring,
                        const AqClass& cls,
                        const std::vector<PositiveSystem>& systems);

// Borel-de Siebenthal refinement: per irreducible component, the
// Harish-Chandra order must be Borel-de Siebenthal with the highest-root
// coefficient (1 or 2) matching that component's Hermitian-ness.
// Throws NotDiscreteSeriesError when the class is not discrete series.
bool is_bds_discrete_series(const RootSystem& rs, const Coloring& coloring,
                            const AqClass& cls,
                            const std::vector<PositiveSystem>& systems);

// Λ = componentwise sum of Delta(u∩p); equals the lowest K-type weight.
// Throws NotDiscreteSeriesError when the class is not discrete series.
std::vector<long long> blattner_parameter(const RootSystem& rs,
                                          const Coloring& coloring,
                                          const AqClass& cls,
                                          const std::vector<PositiveSystem>& systems);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ClassRow {
    AqClass cls;
    LeviData levi;
    Polynomial compact_dual; // P(Y_q, t)
    Polynomial poincare;     // P_q(t) = t^R * P(Y_q, t)
    bool discrete_series = false;
    bool bds = false;
    std::optional<DiscreteSeriesData> ds;
};

struct ReportCounts {
    int total = 0;
    int discrete_series = 0;
    int bds = 0;
};

struct ClassificationReport {
    std::string algebra_label;
    std::vector<int> noncompact_nodes; // 1-based, as presented to users
    std::vector<PositiveSystem> systems;
    std::vector<ClassRow> rows;        // sorted by (R, key)
    ReportCounts counts;
    std::vector<CheckOutcome> cross_checks;
    bool empty_input_warning = false;
    HalfVector delta_g;                // half sum of base positive roots
    HalfVector delta_k;                // half sum of compact positive roots
    int qx_stable_radius = 0;          // box radius at which the oracle stabilized

    bool all_checks_passed() const;
};

// Assemble the final report from upstream results: Levi data, polynomials and
// flags are computed here for every class, rows sorted by (R, key), counts
// and the cross-check suite embedded.  An empty class list yields zero counts
// plus a validation warning instead of an error.
ClassificationReport assemble_report(const RootSystem& rs, const Coloring& coloring,
                                     const std::vector<PositiveSystem>& systems,
                                     const std::vector<AqClass>& classes,
                                     std::string algebra_label);

// Whole pipeline for one real form: Weyl group, positive systems, parabolic
// enumeration, dedupe, report.
ClassificationReport classify_real_form(const RootSystem& rs, const Coloring& coloring,
                                        std::string algebra_label);

} // namespace aqcoh
