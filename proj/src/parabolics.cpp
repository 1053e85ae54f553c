#include "aqcoh/parabolics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "aqcoh/errors.hpp"
#include "int_linalg.hpp"

namespace aqcoh {

namespace {

// Integer inverse of the simple-system column matrix; exists exactly because
// a simple system is a lattice basis of the root lattice (det = ±1).
detail::IMat simple_system_inverse(const std::vector<Root>& simple) {
    const std::size_t n = simple.size();
    detail::IMat cols(n, detail::IVec(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) cols[i][j] = simple[j][i];
    }
    detail::IMat inv(n, detail::IVec(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        detail::IVec e(n, 0), x;
        e[k] = 1;
        if (!detail::solve_unimodular(cols, e, x)) {
            throw BasisDecompositionFailureError(
                "simple-system matrix is not unimodular; not a simple system "
                "of the full root system");
        }
        for (std::size_t i = 0; i < n; ++i) inv[i][k] = x[i];
    }
    return inv;
}

detail::IVec apply_matrix(const detail::IMat& m, const Root& r) {
    const std::size_t n = m.size();
    detail::IVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * r[j];
    }
    return out;
}

// Partition the full root set by the sign pattern of a per-root evaluation:
// 0 everywhere relevant -> Levi, >= 0 with something positive -> u.
template <typename Eval>
void partition_roots(const RootSystem& rs, const Coloring& coloring, Eval&& eval,
                     ParabolicDescriptor& out) {
    for (const Root& r : rs.roots()) {
        const int sign = eval(r);
        if (sign == 0) {
            out.levi_roots.push_back(r);
        } else if (sign > 0) {
            out.u_roots.push_back(r);
            (coloring.is_compact(r) ? out.u_cap_k : out.u_cap_p).push_back(r);
        }
    }
}

} // namespace

ParabolicDescriptor build_parabolic(const RootSystem& rs, const Coloring& coloring,
                                    const PositiveSystem& system,
                                    const std::vector<Root>& gamma) {
    const std::vector<Root>& simple = system.simple_system;
    std::vector<std::size_t> gamma_slots;
    for (const Root& g : gamma) {
        const auto it = std::find(simple.begin(), simple.end(), g);
        if (it == simple.end()) {
            throw Error("Gamma must be a subset of the system's simple roots");
        }
        gamma_slots.push_back(static_cast<std::size_t>(it - simple.begin()));
    }
    const detail::IMat inv = simple_system_inverse(simple);

    ParabolicDescriptor out;
    out.system_index = system.index;
    out.gamma = gamma;
    std::sort(out.gamma.begin(), out.gamma.end());
    for (std::size_t j = 0; j < simple.size(); ++j) {
        if (std::find(gamma_slots.begin(), gamma_slots.end(), j) == gamma_slots.end()) {
            out.levi_simple.push_back(simple[j]);
        }
    }
    std::sort(out.levi_simple.begin(), out.levi_simple.end());
    partition_roots(rs, coloring, [&](const Root& r) {
        const detail::IVec coords = apply_matrix(inv, r);
        int pos = 0, neg = 0;
        for (std::size_t slot : gamma_slots) {
            if (coords[slot] > 0) ++pos;
            if (coords[slot] < 0) ++neg;
        }
        if (pos > 0 && neg > 0) {
            throw BasisDecompositionFailureError(
                "root has mixed signs over Gamma; the basis is not a simple system");
        }
        return pos > 0 ? 1 : neg > 0 ? -1 : 0;
    }, out);
    return out;
}

std::vector<ParabolicDescriptor> enumerate_all_parabolics(
    const RootSystem& rs, const Coloring& coloring,
    const std::vector<PositiveSystem>& systems) {
    std::vector<ParabolicDescriptor> out;
    for (const PositiveSystem& sys : systems) {
        const std::size_t n = sys.simple_system.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Root> gamma;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask & (std::size_t{1} << j)) gamma.push_back(sys.simple_system[j]);
            }
            out.push_back(build_parabolic(rs, coloring, sys, gamma));
        }
    }
    return out;
}

std::vector<AqClass> dedupe_classes(const std::vector<ParabolicDescriptor>& descriptors) {
    std::map<std::vector<Root>, AqClass> by_key;
    for (const ParabolicDescriptor& d : descriptors) {
        AqClass& cls = by_key[d.u_cap_p];
        if (cls.representatives.empty()) {
            cls.key = d.u_cap_p;
            cls.r_dim = d.r_dim();
            cls.levi_simple = d.levi_simple;
            const std::size_t rank = !cls.key.empty() ? cls.key[0].size()
                                   : !d.levi_roots.empty() ? d.levi_roots[0].size()
                                   : d.u_roots.empty() ? 0 : d.u_roots[0].size();
            cls.lowest_k_type_weight.assign(rank, 0);
            for (const Root& r : cls.key) {
                for (std::size_t i = 0; i < r.size(); ++i) {
                    cls.lowest_k_type_weight[i] += r[i];
                }
            }
        }
        cls.representatives.push_back(d);
    }
    std::vector<AqClass> classes;
    for (auto& [key, cls] : by_key) classes.push_back(std::move(cls));
    std::sort(classes.begin(), classes.end(), [](const AqClass& a, const AqClass& b) {
        if (a.r_dim != b.r_dim) return a.r_dim < b.r_dim;
        return a.key < b.key;
    });
    return classes;
}

ParabolicDescriptor build_q_x(const RootSystem& rs, const Coloring& coloring,
                              const std::vector<int>& x) {
    if (x.size() != static_cast<std::size_t>(rs.rank())) {
        throw Error("functional has wrong dimension");
    }
    const auto value = [&x](const Root& r) {
        long long v = 0;
        for (std::size_t i = 0; i < r.size(); ++i) v += static_cast<long long>(r[i]) * x[i];
        return v;
    };
    for (const Root& r : coloring.compact_positive()) {
        if (value(r) < 0) {
            throw NotDominantError(
                "functional is negative on a compact positive root");
        }
    }
    ParabolicDescriptor out;
    out.system_index = 0;
    partition_roots(rs, coloring, [&](const Root& r) {
        const long long v = value(r);
        return v > 0 ? 1 : v < 0 ? -1 : 0;
    }, out);
    // Simple roots of l: indecomposables of Delta(l) relative to the base
    // positivity (Delta(l) is a genuine subsystem, so this is a simple system
    // of it even though it need not extend to a Gamma complement).
    std::vector<Root> levi_pos;
    for (const Root& r : out.levi_roots) {
        if (is_base_positive(r)) levi_pos.push_back(r);
    }
    const std::set<Root> lset(levi_pos.begin(), levi_pos.end());
    for (const Root& r : levi_pos) {
        bool decomposable = false;
        for (const Root& a : levi_pos) {
            if (a == r) continue;
            Root b(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) b[i] = r[i] - a[i];
            if (lset.count(b)) { decomposable = true; break; }
        }
        if (!decomposable) out.levi_simple.push_back(r);
    }
    return out;
}

std::set<std::vector<Root>> q_x_keys_in_box(const RootSystem& rs,
                                            const Coloring& coloring, int radius) {
    const int n = rs.rank();
    std::set<std::vector<Root>> keys;
    std::vector<int> x(n, -radius);
    while (true) {
        bool dominant = true;
        for (const Root& r : coloring.compact_positive()) {
            long long v = 0;
            for (int i = 0; i < n; ++i) v += static_cast<long long>(r[i]) * x[i];
            if (v < 0) { dominant = false; break; }
        }
        if (dominant) keys.insert(build_q_x(rs, coloring, x).u_cap_p);
        // Odometer increment over the box.
        int i = 0;
        while (i < n && x[i] == radius) x[i++] = -radius;
        if (i == n) break;
        ++x[i];
    }
    return keys;
}

std::optional<QxSweepResult> q_x_sweep_until_stable(const RootSystem& rs,
                                                    const Coloring& coloring,
                                                    int max_radius) {
    std::set<std::vector<Root>> prev = q_x_keys_in_box(rs, coloring, 0);
    for (int r = 0; r < max_radius; ++r) {
        std::set<std::vector<Root>> next = q_x_keys_in_box(rs, coloring, r + 1);
        if (next == prev) return QxSweepResult{r, std::move(prev)};
        prev = std::move(next);
    }
    return std::nullopt;
}

} // namespace aqcoh
