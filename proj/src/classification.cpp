#include "aqcoh/classification.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aqcoh/errors.hpp"

namespace aqcoh {

std::string HalfVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < twice.size(); ++i) {
        if (i) os << ", ";
        if (twice[i] % 2 == 0) os << twice[i] / 2;
        else os << twice[i] << "/2";
    }
    os << ")";
    return os.str();
}

HalfVector half_sum(const std::vector<Root>& roots) {
    HalfVector h;
    if (roots.empty()) return h;
    h.twice.assign(roots[0].size(), 0);
    for (const Root& r : roots) {
        for (std::size_t i = 0; i < r.size(); ++i) h.twice[i] += r[i];
    }
    return h;
}

namespace {

std::vector<Root> harish_chandra_candidate(const Coloring& coloring,
                                           const AqClass& cls) {
    std::vector<Root> candidate = coloring.compact_positive();
    candidate.insert(candidate.end(), cls.key.begin(), cls.key.end());
    std::sort(candidate.begin(), candidate.end());
    return candidate;
}

// First route: the defining properties of a positive system, checked
// directly (cardinality, no ± pair, closure under root addition).
bool positive_by_closure(const RootSystem& rs, const std::vector<Root>& candidate) {
    if (2 * candidate.size() != rs.roots().size()) return false;
    const std::set<Root> cset(candidate.begin(), candidate.end());
    if (cset.size() != candidate.size()) return false;
    for (const Root& r : candidate) {
        if (!rs.contains(r)) return false;
        if (cset.count(negated(r))) return false;
    }
    for (const Root& a : candidate) {
        for (const Root& b : candidate) {
            const Root s = added(a, b);
            if (rs.contains(s) && !cset.count(s)) return false;
        }
    }
    return true;
}

// Second route: membership in the independently enumerated system list.
bool positive_by_enumeration(const std::vector<Root>& candidate,
                             const std::vector<PositiveSystem>& systems) {
    for (const PositiveSystem& sys : systems) {
        if (sys.roots == candidate) return true;
    }
    return false;
}

} // namespace

bool is_discrete_series(const RootSystem& rs, const Coloring& coloring,
                        const AqClass& cls,
                        const std::vector<PositiveSystem>& systems) {
    const std::vector<Root> candidate = harish_chandra_candidate(coloring, cls);
    const bool by_closure = positive_by_closure(rs, candidate);
    const bool by_list = positive_by_enumeration(candidate, systems);
    if (by_closure != by_list) {
        throw std::logic_error(
            "discrete-series tests disagree: closure says " +
            std::to_string(by_closure) + ", enumeration says " +
            std::to_string(by_list));
    }
    return by_closure;
}

bool is_bds_discrete_series(const RootSystem& rs, const Coloring& coloring,
                            const AqClass& cls,
                            const std::vector<PositiveSystem>& systems) {
    if (!is_discrete_series(rs, coloring, cls, systems)) {
        throw NotDiscreteSeriesError(
            "Borel-de Siebenthal refinement requires a discrete-series class");
    }
    const std::vector<Root> candidate = harish_chandra_candidate(coloring, cls);
    const std::vector<int> coefficients =
        bds_component_coefficients(rs, coloring, candidate);
    if (coefficients.empty()) return false;
    const std::vector<bool> hermitian = component_is_hermitian(rs, coloring);
    for (std::size_t c = 0; c < coefficients.size(); ++c) {
        const int expected = hermitian[c] ? 1 : 2;
        if (coefficients[c] != expected) return false;
    }
    return true;
}

std::vector<long long> blattner_parameter(const RootSystem& rs,
                                          const Coloring& coloring,
                                          const AqClass& cls,
                                          const std::vector<PositiveSystem>& systems) {
    if (!is_discrete_series(rs, coloring, cls, systems)) {
        throw NotDiscreteSeriesError(
            "the Blattner parameter is defined for discrete-series classes only");
    }
    std::vector<long long> lambda(rs.rank(), 0);
    for (const Root& r : cls.key) {
        for (std::size_t i = 0; i < r.size(); ++i) lambda[i] += r[i];
    }
    return lambda;
}

bool ClassificationReport::all_checks_passed() const {
    return std::all_of(cross_checks.begin(), cross_checks.end(),
                       [](const CheckOutcome& c) { return c.passed; });
}

namespace {

void run_cross_checks(const RootSystem& rs, const Coloring& coloring,
                      ClassificationReport& report) {
    auto& checks = report.cross_checks;
    const auto add = [&checks](std::string name, bool passed, std::string detail) {
        checks.push_back(CheckOutcome{std::move(name), passed, std::move(detail)});
    };

    // Positive-system count against the Weyl index |W_g| / |W_k|.
    {
        const WeylGroup w_g = generate_weyl_group(rs);
        const WeylGroup w_k =
            generate_reflection_subgroup(rs, coloring.compact_positive());
        const long long expected =
            static_cast<long long>(w_g.order()) / static_cast<long long>(w_k.order());
        std::ostringstream os;
        os << report.systems.size() << " systems, |W_g|/|W_k| = " << w_g.order()
           << "/" << w_k.order() << " = " << expected;
        add("positive_system_count_matches_weyl_index",
            static_cast<long long>(report.systems.size()) == expected, os.str());
    }

    // Incompatible-pair exclusion across all systems.
    {
        const ForbiddenPatternReport fp =
            verify_forbidden_patterns(rs, coloring, report.systems);
        add("forbidden_patterns_respected", fp.passed, fp.detail);
    }

    // Per-class polynomial laws.
    {
        std::ostringstream failures;
        bool ok = true;
        for (const ClassRow& row : report.rows) {
            const auto fail = [&](const std::string& what) {
                ok = false;
                failures << " [R=" << row.cls.r_dim << " key size "
                         << row.cls.key.size() << ": " << what << "]";
            };
            if (!row.compact_dual.is_palindromic()) fail("not palindromic");
            if (!row.compact_dual.even_degrees_only()) fail("odd degree present");
            if (row.levi.compact_weyl_order == 0 ||
                row.compact_dual.value_at_one() !=
                    row.levi.weyl_order / row.levi.compact_weyl_order) {
                fail("Euler characteristic != |W_l|/|W_l∩k|");
            }
            if (row.compact_dual.degree() != 2 * row.levi.noncompact_count_positive) {
                fail("top degree != 2 * noncompact positive count");
            }
            if (!(row.poincare == row.compact_dual.shifted(row.cls.r_dim))) {
                fail("P_q != t^R * P(Y_q)");
            }
        }
        add("poincare_polynomial_laws", ok,
            ok ? "palindromic, even, Euler and degree laws hold for every class"
               : "violations:" + failures.str());
    }

    // Discrete series ⟺ R = |Delta_n^+|.
    {
        const int full = static_cast<int>(coloring.noncompact_positive().size());
        bool ok = true;
        for (const ClassRow& row : report.rows) {
            if (row.discrete_series != (row.cls.r_dim == full)) ok = false;
        }
        std::ostringstream os;
        os << report.counts.discrete_series << " discrete-series classes; R range ["
           << (report.rows.empty() ? 0 : report.rows.front().cls.r_dim) << ", "
           << (report.rows.empty() ? 0 : report.rows.back().cls.r_dim) << "], full R = "
           << full;
        add("discrete_series_iff_maximal_r", ok, os.str());
    }

    // The Gamma = Phi parabolics: one distinct maximal-R class per system.
    {
        std::set<std::vector<Root>> borel_keys;
        const int rank = rs.rank();
        int full_r_classes = 0;
        for (const ClassRow& row : report.rows) {
            if (row.cls.r_dim ==
                static_cast<int>(coloring.noncompact_positive().size())) {
                ++full_r_classes;
            }
            for (const ParabolicDescriptor& d : row.cls.representatives) {
                if (static_cast<int>(d.gamma.size()) == rank) {
                    borel_keys.insert(d.u_cap_p);
                }
            }
        }
        std::ostringstream os;
        os << borel_keys.size() << " distinct Borel-type keys, " << full_r_classes
           << " maximal-R classes, " << report.systems.size() << " systems";
        const bool ok =
            borel_keys.size() == report.systems.size() &&
            full_r_classes == static_cast<int>(report.systems.size());
        add("borel_type_parabolics_biject_with_systems", ok, os.str());
    }

    // Independent oracle: theta-stable parabolics from dominant functionals.
    {
        const auto sweep = q_x_sweep_until_stable(rs, coloring);
        bool ok = sweep.has_value();
        std::ostringstream os;
        if (!sweep) {
            os << "functional sweep did not stabilize";
        } else {
            report.qx_stable_radius = sweep->stable_radius;
            std::set<std::vector<Root>> class_keys;
            for (const ClassRow& row : report.rows) class_keys.insert(row.cls.key);
            ok = sweep->keys == class_keys;
            os << "sweep stable at radius " << sweep->stable_radius << " with "
               << sweep->keys.size() << " keys vs " << class_keys.size()
               << " enumerated classes"
               << (ok ? "; identical" : "; MISMATCH");
        }
        add("functional_oracle_matches_classes", ok, os.str());
    }

    // Blattner parameters: agree with the lowest K-type weights and are
    // dominant for Delta_k^+.
    {
        bool ok = true;
        std::ostringstream os;
        for (const ClassRow& row : report.rows) {
            if (!row.discrete_series) continue;
            if (!row.ds || row.ds->blattner != row.cls.lowest_k_type_weight) {
                ok = false;
                os << " [Blattner != lowest K-type weight]";
            }
            if (row.ds) {
                Root lambda(row.ds->blattner.size());
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    lambda[i] = static_cast<int>(row.ds->blattner[i]);
                }
                for (const Root& gamma : coloring.compact_simple_system()) {
                    if (2 * rs.inner(lambda, gamma) < 0) {
                        ok = false;
                        os << " [Blattner not Delta_k^+-dominant]";
                    }
                }
            }
        }
        add("blattner_parameters_dominant", ok,
            ok ? "all discrete-series Blattner parameters dominant and consistent"
               : "violations:" + os.str());
    }

    // Representative bookkeeping: every (system, Gamma) pair lands in exactly
    // one class.
    {
        std::size_t reps = 0;
        for (const ClassRow& row : report.rows) reps += row.cls.representatives.size();
        const std::size_t expected =
            report.systems.size() * (std::size_t{1} << rs.rank());
        std::ostringstream os;
        os << reps << " representatives vs " << report.systems.size() << " * 2^"
           << rs.rank() << " = " << expected;
        add("every_parabolic_classified", reps == expected, os.str());
    }

    // Total Euler characteristic over all classes (recorded for regression).
    {
        long long total = 0;
        for (const ClassRow& row : report.rows) total += row.poincare.value_at_one();
        add("euler_characteristic_total", true,
            "sum of P_q(1) over all classes = " + std::to_string(total));
    }
}

} // namespace

ClassificationReport assemble_report(const RootSystem& rs, const Coloring& coloring,
                                     const std::vector<PositiveSystem>& systems,
                                     const std::vector<AqClass>& classes,
                                     std::string algebra_label) {
    ClassificationReport report;
    report.algebra_label = std::move(algebra_label);
    for (int node : coloring.noncompact_nodes()) {
        report.noncompact_nodes.push_back(node + 1);
    }
    report.systems = systems;
    report.delta_g = half_sum(rs.base_positive());
    report.delta_k = half_sum(coloring.compact_positive());

    if (classes.empty()) {
        report.empty_input_warning = true;
        report.cross_checks.push_back(CheckOutcome{
            "classification_nonempty", false,
            "no equivalence classes were supplied; counts are vacuously zero"});
        return report;
    }

    for (const AqClass& cls : classes) {
        ClassRow row;
        row.cls = cls;
        const ParabolicDescriptor& rep = cls.representatives.front();
        if (rep.system_index < 1 ||
            rep.system_index > static_cast<int>(systems.size())) {
            throw Error("class representative refers to an unknown positive system");
        }
        const PositiveSystem& sys = systems[rep.system_index - 1];
        row.levi = build_levi_data(rs, coloring, rep, sys.roots);
        row.cls.levi_type = row.levi.type_label;
        row.compact_dual = poincare_compact_dual(rs, row.levi);
        row.poincare = poincare_aq(cls, row.compact_dual);
        row.discrete_series = is_discrete_series(rs, coloring, cls, systems);
        if (row.discrete_series) {
            DiscreteSeriesData ds;
            ds.harish_chandra_order = harish_chandra_candidate(coloring, cls);
            ds.blattner = blattner_parameter(rs, coloring, cls, systems);
            ds.lambda = half_sum(ds.harish_chandra_order);
            row.bds = is_bds_discrete_series(rs, coloring, cls, systems);
            ds.bds_kind = row.bds
                ? is_borel_de_siebenthal(rs, coloring, ds.harish_chandra_order)
                : BdsKind::not_bds;
            row.ds = std::move(ds);
        }
        report.rows.push_back(std::move(row));
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ClassRow& a, const ClassRow& b) {
                  if (a.cls.r_dim != b.cls.r_dim) return a.cls.r_dim < b.cls.r_dim;
                  return a.cls.key < b.cls.key;
              });
    report.counts.total = static_cast<int>(report.rows.size());
    for (const ClassRow& row : report.rows) {
        if (row.discrete_series) ++report.counts.discrete_series;
        if (row.bds) ++report.counts.bds;
    }
    run_cross_checks(rs, coloring, report);
    return report;
}

ClassificationReport classify_real_form(const RootSystem& rs, const Coloring& coloring,
                                        std::string algebra_label) {
    const WeylGroup weyl = generate_weyl_group(rs);
    const std::vector<PositiveSystem> systems =
        enumerate_positive_systems(rs, weyl, coloring);
    const std::vector<ParabolicDescriptor> descriptors =
        enumerate_all_parabolics(rs, coloring, systems);
    const std::vector<AqClass> classes = dedupe_classes(descriptors);
    return assemble_report(rs, coloring, systems, classes, std::move(algebra_label));
}

} // namespace aqcoh
