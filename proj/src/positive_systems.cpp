#include "aqcoh/positive_systems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aqcoh/cartan.hpp"
#include "aqcoh/errors.hpp"

namespace aqcoh {

namespace {

// The twelve simple systems of the positive systems of f4(4) (noncompact node
// 1) that contain Delta_k^+, in the fixed case order used by the reference
// classification for this real form.  Each entry is the simple system as a
// set; comparison is on the lexicographically sorted vectors.
const std::vector<std::vector<Root>>& f4_split_case_table() {
    static const std::vector<std::vector<Root>> table = [] {
        std::vector<std::vector<Root>> t = {
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
            {{1, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
            {{1, 1, 1, 0}, {-1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
            {{1, 1, 2, 0}, {1, 1, 1, 1}, {-1, -1, -1, 0}, {0, 1, 0, 0}},
            {{1, 1, 2, 0}, {-1, -1, -1, -1}, {0, 1, 0, 0}, {0, 0, 0, 1}},
            {{1, 2, 2, 0}, {1, 1, 1, 1}, {-1, -1, -2, 0}, {0, 0, 1, 0}},
            {{1, 1, 1, 1}, {-1, -2, -2, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
            {{1, 2, 2, 0}, {1, 1, 2, 1}, {-1, -1, -2, 0}, {-1, -1, -1, -1}},
            {{1, 2, 2, 0}, {1, 1, 2, 2}, {-1, -1, -2, -1}, {0, 0, 1, 0}},
            {{1, 1, 2, 1}, {-1, -2, -2, 0}, {-1, -1, -1, -1}, {0, 1, 0, 0}},
            {{2, 3, 4, 2}, {-1, -1, -2, -2}, {0, 0, 1, 0}, {0, 0, 0, 1}},
            {{2, 3, 4, 2}, {-1, -2, -2, 0}, {-1, -1, -2, -1}, {0, 0, 1, 0}},
        };
        for (auto& sys : t) std::sort(sys.begin(), sys.end());
        return t;
    }();
    return table;
}

} // namespace

std::optional<int> f4_split_reference_case(const RootSystem& rs,
                                           const Coloring& coloring,
                                           const std::vector<Root>& simple_system) {
    if (!(rs.cartan() == cartan_F4())) return std::nullopt;
    if (coloring.noncompact_nodes() != std::vector<int>{0}) return std::nullopt;
    std::vector<Root> sorted = simple_system;
    std::sort(sorted.begin(), sorted.end());
    const auto& table = f4_split_case_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == sorted) return static_cast<int>(i) + 1;
    }
    return std::nullopt;
}

std::vector<PositiveSystem> enumerate_positive_systems(const RootSystem& rs,
                                                       const WeylGroup& weyl,
                                                       const Coloring& coloring) {
    const std::vector<Root>& base = rs.base_positive();
    const std::vector<Root>& compact = coloring.compact_positive();
    std::set<std::vector<Root>> distinct;
    for (const WeylElement& w : weyl.elements) {
        std::vector<Root> image;
        image.reserve(base.size());
        for (const Root& r : base) image.push_back(w.apply(r));
        std::sort(image.begin(), image.end());
        if (std::includes(image.begin(), image.end(), compact.begin(), compact.end())) {
            distinct.insert(std::move(image));
        }
    }
    std::vector<PositiveSystem> systems;
    for (const auto& roots : distinct) {
        PositiveSystem sys;
        sys.roots = roots;
        sys.simple_system = extract_simple_system(rs, roots);
        systems.push_back(std::move(sys));
    }
    std::sort(systems.begin(), systems.end(),
              [](const PositiveSystem& a, const PositiveSystem& b) {
                  return a.simple_system < b.simple_system;
              });
    for (std::size_t i = 0; i < systems.size(); ++i) {
        systems[i].index = static_cast<int>(i) + 1;
        systems[i].reference_case =
            f4_split_reference_case(rs, coloring, systems[i].simple_system);
    }
    return systems;
}

ForbiddenPatternReport verify_forbidden_patterns(const RootSystem& rs,
                                                 const Coloring& coloring,
                                                 const std::vector<PositiveSystem>& systems) {
    (void)rs;
    ForbiddenPatternReport report;
    const std::set<Root> compact_pos(coloring.compact_positive().begin(),
                                     coloring.compact_positive().end());
    const auto& ncp = coloring.noncompact_positive();
    for (std::size_t i = 0; i < ncp.size(); ++i) {
        for (std::size_t j = i; j < ncp.size(); ++j) {
            if (compact_pos.count(added(ncp[i], ncp[j]))) {
                report.checked_pairs.emplace_back(ncp[i], ncp[j]);
            }
        }
    }
    for (const PositiveSystem& sys : systems) {
        const std::set<Root> roots(sys.roots.begin(), sys.roots.end());
        for (const auto& [a, b] : report.checked_pairs) {
            if (roots.count(negated(a)) && roots.count(negated(b))) {
                report.offending_systems.push_back(sys.index);
                break;
            }
        }
    }
    report.passed = report.offending_systems.empty();
    std::ostringstream os;
    os << report.checked_pairs.size() << " forbidden pair(s) checked against "
       << systems.size() << " system(s): "
       << (report.passed ? std::string("no")
                         : std::to_string(report.offending_systems.size()))
       << " violation(s)";
    report.detail = os.str();
    return report;
}

} // namespace aqcoh
