#include "aqcoh/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "aqcoh/errors.hpp"

namespace aqcoh {

bool is_base_positive(const Root& r) {
    bool nonzero = false;
    for (int c : r) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

RootSystem::RootSystem(CartanMatrix cartan, std::size_t max_roots)
    : cartan_(std::move(cartan)) {
    const int n = cartan_.rank();
    for (int i = 0; i < n; ++i) {
        Root phi(n, 0);
        phi[i] = 1;
        simple_.push_back(std::move(phi));
    }
    std::set<Root> known(simple_.begin(), simple_.end());
    std::queue<Root> todo;
    for (const Root& r : simple_) todo.push(r);
    while (!todo.empty()) {
        const Root r = todo.front();
        todo.pop();
        for (int i = 0; i < n; ++i) {
            Root image = simple_reflection(i, r);
            if (known.insert(image).second) {
                if (known.size() > max_roots) {
                    std::ostringstream os;
                    os << "reflection closure exceeded " << max_roots
                       << " roots; the Cartan matrix is not of finite type";
                    throw NotFiniteTypeError(os.str());
                }
                todo.push(std::move(image));
            }
        }
    }
    roots_.assign(known.begin(), known.end());
    for (const Root& r : roots_) {
        if (is_base_positive(r)) positive_.push_back(r);
    }
    // Every root must be base-positive or base-negative; mixed signs would
    // mean the closure produced a non-root vector.
    if (2 * positive_.size() != roots_.size()) {
        throw NotFiniteTypeError("reflection closure produced mixed-sign vectors");
    }
    // Highest root per component: the positive root that cannot be raised by
    // any simple root of its component.
    comp_highest_.assign(cartan_.components().size(), Root{});
    for (const Root& r : positive_) {
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i) {
            Root up = r;
            up[i] += 1;
            if (contains(up)) maximal = false;
        }
        if (!maximal) continue;
        const int comp = component_of(r);
        if (!comp_highest_[comp].empty()) {
            throw NotFiniteTypeError("component has more than one maximal root");
        }
        comp_highest_[comp] = r;
    }
    for (std::size_t c = 0; c < comp_highest_.size(); ++c) {
        if (comp_highest_[c].empty()) {
            throw NotFiniteTypeError("component has no maximal root");
        }
        // Componentwise dominance: the maximal root must dominate every
        // positive root of its component.
        for (const Root& r : positive_) {
            if (component_of(r) != static_cast<int>(c)) continue;
            for (int i = 0; i < n; ++i) {
                if (r[i] > comp_highest_[c][i]) {
                    throw NotFiniteTypeError("maximal root is not componentwise highest");
                }
            }
        }
    }
}

bool RootSystem::contains(const Root& r) const {
    return std::binary_search(roots_.begin(), roots_.end(), r);
}

int RootSystem::pairing_with_simple_coroot(const Root& alpha, int i) const {
    int v = 0;
    for (int j = 0; j < cartan_.rank(); ++j) v += alpha[j] * cartan_.at(j, i);
    return v;
}

long long RootSystem::inner(const Root& alpha, const Root& beta) const {
    long long v = 0;
    const int n = cartan_.rank();
    for (int i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            v += static_cast<long long>(alpha[i]) * beta[j] * cartan_.gram(i, j);
        }
    }
    return v;
}

int RootSystem::pairing(const Root& alpha, const Root& beta) const {
    const long long bb = inner(beta, beta);
    const long long num = 2 * inner(alpha, beta);
    if (bb == 0 || num % bb != 0) {
        throw Error("coroot pairing is not integral; beta is not a root");
    }
    return static_cast<int>(num / bb);
}

Root RootSystem::simple_reflection(int i, const Root& alpha) const {
    Root image = alpha;
    image[i] -= pairing_with_simple_coroot(alpha, i);
    return image;
}

Root RootSystem::reflect(const Root& beta, const Root& alpha) const {
    const int k = pairing(alpha, beta);
    Root image = alpha;
    for (int j = 0; j < cartan_.rank(); ++j) image[j] -= k * beta[j];
    return image;
}

const Root& RootSystem::highest_root() const {
    if (!is_irreducible()) {
        throw Error("highest_root() requires an irreducible root system; "
                    "use component_highest() instead");
    }
    return comp_highest_[0];
}

int RootSystem::component_of(const Root& r) const {
    const auto& comps = cartan_.components();
    int found = -1;
    for (int i = 0; i < cartan_.rank(); ++i) {
        if (r[i] == 0) continue;
        int c = -1;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (std::find(comps[k].begin(), comps[k].end(), i) != comps[k].end()) {
                c = static_cast<int>(k);
                break;
            }
        }
        if (found == -1) found = c;
        else if (found != c) throw Error("root support spans several components");
    }
    if (found == -1) throw Error("zero vector has no component");
    return found;
}

bool is_positive_system(const RootSystem& rs, const std::vector<Root>& P) {
    if (2 * P.size() != rs.roots().size()) return false;
    std::set<Root> seen;
    for (const Root& r : P) {
        if (!rs.contains(r)) return false;
        if (!seen.insert(r).second) return false;       // duplicate
        if (seen.count(negated(r))) return false;        // contains a ± pair
    }
    // One root from each ± pair.  Such a choice comes from a regular
    // functional exactly when it is closed under root addition: if it were
    // P_x for some x, then a, b ∈ P and a + b ∈ Δ force (a+b)(x) > 0.
    // Conversely a closed choice of signs is a Weyl image of the base
    // positive system.  Without this check, e.g. {φ1, φ2, −φ1−φ2} in A2
    // would pass, although no functional is positive on all three.
    for (const Root& a : P) {
        for (const Root& b : P) {
            const Root s = added(a, b);
            if (rs.contains(s) && !seen.count(s)) return false;
        }
    }
    return true;
}

std::vector<Root> extract_simple_system(const RootSystem& rs,
                                        const std::vector<Root>& P) {
    if (!is_positive_system(rs, P)) {
        throw NotPositiveSystemError(
            "the given set is not a positive system of the root system");
    }
    const std::set<Root> pset(P.begin(), P.end());
    std::set<Root> decomposable;
    for (const Root& a : P) {
        for (const Root& b : P) {
            const Root s = added(a, b);
            if (pset.count(s)) decomposable.insert(s);
        }
    }
    std::vector<Root> simple;
    for (const Root& r : P) {
        if (!decomposable.count(r)) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end());
    if (simple.size() != static_cast<std::size_t>(rs.rank())) {
        throw NotPositiveSystemError("indecomposable set has wrong cardinality");
    }
    return simple;
}

} // namespace aqcoh
