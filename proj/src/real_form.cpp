#include "aqcoh/real_form.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aqcoh/errors.hpp"
#include "int_linalg.hpp"

namespace aqcoh {

Coloring::Coloring(const RootSystem& rs, std::vector<int> noncompact_nodes)
    : nodes_(std::move(noncompact_nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    for (int i : nodes_) {
        if (i < 0 || i >= rs.rank()) {
            throw Error("noncompact node index out of range");
        }
    }
    for (const Root& r : rs.roots()) {
        (is_compact(r) ? compact_ : noncompact_).push_back(r);
        if (is_base_positive(r)) {
            (is_compact(r) ? compact_pos_ : noncompact_pos_).push_back(r);
        }
    }
    // Indecomposables of Delta_k^+ within the compact subsystem.
    const std::set<Root> kset(compact_pos_.begin(), compact_pos_.end());
    for (const Root& r : compact_pos_) {
        bool decomposable = false;
        for (const Root& a : compact_pos_) {
            if (a == r) continue;
            Root b(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) b[i] = r[i] - a[i];
            if (kset.count(b)) { // r = a + b with both in Delta_k^+
                decomposable = true;
                break;
            }
        }
        if (!decomposable) compact_simple_.push_back(r);
    }
    // Layer decomposition by the coefficient at the single noncompact node.
    if (nodes_.size() == 1) {
        const int nu = nodes_[0];
        std::map<int, std::vector<Root>> by_degree;
        for (const Root& r : rs.roots()) by_degree[r[nu]].push_back(r);
        for (auto& [deg, roots] : by_degree) {
            layers_.push_back(GradedLayer{deg, std::move(roots)});
        }
    }
}

bool Coloring::is_compact(const Root& r) const {
    int s = 0;
    for (int i : nodes_) s += r[i];
    return s % 2 == 0;
}

Coloring color_roots(const RootSystem& rs, const std::vector<int>& noncompact_nodes) {
    return Coloring(rs, noncompact_nodes);
}

std::vector<int> bds_component_coefficients(const RootSystem& rs,
                                            const Coloring& coloring,
                                            const std::vector<Root>& P) {
    const int n = rs.rank();
    const std::vector<Root> simple = extract_simple_system(rs, P);

    // Decompose arbitrary roots over P's simple system (unimodular solve).
    detail::IMat basis_cols(n, detail::IVec(n, 0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) basis_cols[i][j] = simple[j][i];
    }
    const auto coords_over_simple = [&](const Root& r) {
        detail::IVec b(n), x;
        for (int i = 0; i < n; ++i) b[i] = r[i];
        if (!detail::solve_unimodular(basis_cols, b, x)) {
            throw BasisDecompositionFailureError(
                "simple system transition matrix is not unimodular");
        }
        return x;
    };

    const auto& comps = rs.cartan().components();
    std::vector<int> coefficients;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        // Highest root of component c with respect to P: the unique element of
        // P in that component that no simple root of P can be added to.
        std::vector<int> comp_simple_slots; // indices into `simple`
        for (int j = 0; j < n; ++j) {
            if (rs.component_of(simple[j]) == static_cast<int>(c)) {
                comp_simple_slots.push_back(j);
            }
        }
        Root highest;
        for (const Root& r : P) {
            if (rs.component_of(r) != static_cast<int>(c)) continue;
            bool maximal = true;
            for (int j : comp_simple_slots) {
                if (rs.contains(added(r, simple[j]))) { maximal = false; break; }
            }
            if (maximal) {
                if (!highest.empty()) {
                    throw Error("component has several maximal roots for P");
                }
                highest = r;
            }
        }
        if (highest.empty()) throw Error("component has no maximal root for P");

        const detail::IVec coords = coords_over_simple(highest);
        int noncompact_slot = -1;
        for (int j : comp_simple_slots) {
            if (!coloring.is_compact(simple[j])) {
                if (noncompact_slot != -1) return {}; // more than one noncompact
                noncompact_slot = j;
            }
        }
        if (noncompact_slot == -1) return {}; // no noncompact simple root
        coefficients.push_back(static_cast<int>(coords[noncompact_slot]));
    }
    return coefficients;
}

BdsKind is_borel_de_siebenthal(const RootSystem& rs, const Coloring& coloring,
                               const std::vector<Root>& P) {
    if (!is_positive_system(rs, P)) {
        throw NotPositiveSystemError("Borel-de Siebenthal test needs a positive system");
    }
    const std::set<Root> pset(P.begin(), P.end());
    for (const Root& r : coloring.compact_positive()) {
        if (!pset.count(r)) {
            throw DoesNotContainCompactPositiveError(
                "positive system does not contain the compact positive roots");
        }
    }
    const std::vector<int> coefficients = bds_component_coefficients(rs, coloring, P);
    if (coefficients.empty()) return BdsKind::not_bds;
    const bool all_one = std::all_of(coefficients.begin(), coefficients.end(),
                                     [](int c) { return c == 1; });
    const bool all_two = std::all_of(coefficients.begin(), coefficients.end(),
                                     [](int c) { return c == 2; });
    if (all_one) return BdsKind::hermitian_bds;
    if (all_two) return BdsKind::nonhermitian_bds;
    return BdsKind::not_bds;
}

std::vector<bool> component_is_hermitian(const RootSystem& rs,
                                         const Coloring& coloring) {
    const auto& comps = rs.cartan().components();
    std::vector<bool> hermitian;
    for (const auto& comp : comps) {
        // Restrict the compact roots of this component to its coordinates and
        // compare the rank of their span with the component rank.
        detail::IMat rows;
        for (const Root& r : coloring.compact_roots()) {
            bool in_comp = true;
            detail::IVec restricted;
            for (std::size_t i = 0; i < r.size(); ++i) {
                const bool node_in_comp =
                    std::find(comp.begin(), comp.end(), static_cast<int>(i)) != comp.end();
                if (node_in_comp) restricted.push_back(r[i]);
                else if (r[i] != 0) { in_comp = false; break; }
            }
            if (in_comp) rows.push_back(std::move(restricted));
        }
        const std::size_t span = rows.empty() ? 0 : detail::irank(rows);
        hermitian.push_back(span < comp.size());
    }
    return hermitian;
}

} // namespace aqcoh
