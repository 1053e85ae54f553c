#include "aqcoh/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aqcoh/diagram.hpp"
#include "aqcoh/errors.hpp"
#include "aqcoh/weyl.hpp"
#include "int_linalg.hpp"

namespace aqcoh {

long long Polynomial::value_at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

bool Polynomial::is_palindromic() const {
    // Palindromic over the support: coefficients read the same from the
    // lowest nonzero degree up and from the highest down.
    int lo = 0;
    while (lo < static_cast<int>(coeffs.size()) && coeffs[lo] == 0) ++lo;
    if (lo == static_cast<int>(coeffs.size())) return true; // zero polynomial
    const int hi = degree();
    for (int i = 0; lo + i <= hi - i; ++i) {
        if (coeffs[lo + i] != coeffs[hi - i]) return false;
    }
    return true;
}

bool Polynomial::even_degrees_only() const {
    for (std::size_t d = 1; d < coeffs.size(); d += 2) {
        if (coeffs[d] != 0) return false;
    }
    return true;
}

Polynomial Polynomial::shifted(int by) const {
    Polynomial out;
    out.coeffs.assign(coeffs.size() + by, 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) out.coeffs[d + by] = coeffs[d];
    return out;
}

namespace {

std::string monomial(long long coeff, int degree) {
    std::ostringstream os;
    if (degree == 0) {
        os << coeff;
        return os.str();
    }
    if (coeff != 1) os << coeff;
    os << "t";
    if (degree != 1) os << "^" << degree;
    return os.str();
}

} // namespace

std::string Polynomial::expanded_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d < static_cast<int>(coeffs.size()); ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) os << "+";
        os << monomial(coeffs[d], d);
        first = false;
    }
    return first ? "0" : os.str();
}

std::string Polynomial::factored_string(int shift) const {
    if (shift == 0) return expanded_string();
    const std::string power = monomial(1, shift);
    if (*this == one()) return power;
    return power + "(" + expanded_string() + ")";
}

LeviData build_levi_data(const RootSystem& rs, const Coloring& coloring,
                         const ParabolicDescriptor& descriptor,
                         const std::vector<Root>& system_roots) {
    LeviData levi;
    levi.simple_roots = descriptor.levi_simple;
    levi.root_subsystem = descriptor.levi_roots;
    const std::set<Root> pset(system_roots.begin(), system_roots.end());
    for (const Root& r : descriptor.levi_roots) {
        const bool compact = coloring.is_compact(r);
        if (compact) levi.compact_subsystem.push_back(r);
        if (pset.count(r)) {
            levi.positive.push_back(r);
            if (compact) levi.compact_positive.push_back(r);
        }
    }
    levi.noncompact_count_positive =
        static_cast<int>(levi.positive.size() - levi.compact_positive.size());
    levi.center_dim = rs.rank() - static_cast<int>(levi.simple_roots.size());
    levi.weyl_order = static_cast<long long>(
        generate_reflection_subgroup(rs, levi.simple_roots).order());
    levi.compact_weyl_order = static_cast<long long>(
        generate_reflection_subgroup(rs, levi.compact_positive).order());
    levi.type_label = levi_type_label(rs, coloring, levi);
    return levi;
}

namespace {

// Dimension of the fixed subspace of w acting on the rational span of the
// base: n minus the rank of (matrix of w) - identity.
int fixed_space_dimension(const WeylElement& w) {
    const int n = static_cast<int>(w.images.size());
    detail::IMat rows(n, detail::IVec(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = w.images[i][j];
        rows[i][i] -= 1;
    }
    return n - static_cast<int>(detail::irank(rows));
}

// Invariant-polynomial degrees of a finite reflection group acting on the
// n-dimensional base span, recovered exactly from the fixed-space dimension
// distribution (Shephard–Todd / Solomon):
//
//   sum_{w in W} t^{dim fix(w)}  =  prod_i (t + m_i),      d_i = m_i + 1.
//
// Directions fixed by the whole group contribute m = 0, i.e. degree-1
// factors, so the list always has exactly n entries.
std::vector<int> invariant_degrees(const WeylGroup& group, int rank) {
    std::vector<__int128> poly(rank + 1, 0);
    for (const WeylElement& w : group.elements) poly[fixed_space_dimension(w)] += 1;

    // The exponents m_i are the (nonnegative integer) roots of poly(-t);
    // extract them by synthetic division.  Each m_i is at most the number of
    // reflections in the group (= sum of all exponents).
    const __int128 exponent_sum = poly[rank - 1 >= 0 ? rank - 1 : 0];
    std::vector<int> degrees;
    int top = rank;
    long long m = 0;
    while (top > 0) {
        // Evaluate at t = -m (Horner).
        __int128 value = 0;
        for (int d = top; d >= 0; --d) value = value * (-m) + poly[d];
        if (value == 0) {
            // Divide by (t + m): synthetic division, quotient in place.
            __int128 carry = poly[top];
            for (int d = top - 1; d >= 0; --d) {
                const __int128 next = poly[d] - carry * m;
                poly[d] = carry;
                carry = next;
            }
            --top;
            degrees.push_back(static_cast<int>(m) + 1);
            continue; // the same root may repeat
        }
        ++m;
        if (m > static_cast<long long>(exponent_sum)) {
            throw std::logic_error("invariant_degrees: root extraction failed");
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

// p * (1 - t^k).
std::vector<long long> multiply_one_minus(const std::vector<long long>& p, int k) {
    std::vector<long long> out(p.size() + k, 0);
    for (std::size_t d = 0; d < p.size(); ++d) {
        out[d] += p[d];
        out[d + k] -= p[d];
    }
    return out;
}

// Exact division num / den (den with nonzero leading coefficient); throws if
// the division leaves a remainder.
std::vector<long long> divide_exact(std::vector<long long> num,
                                    const std::vector<long long>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<long long> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw std::logic_error("divide_exact: zero divisor");
    if (num.size() < d.size()) throw std::logic_error("divide_exact: inexact");
    std::vector<long long> q(num.size() - d.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        const long long c = num[i + d.size() - 1] / d.back();
        if (c * d.back() != num[i + d.size() - 1]) {
            throw std::logic_error("divide_exact: inexact");
        }
        q[i] = c;
        for (std::size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
    }
    for (long long c : num) {
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    }
    return q;
}

} // namespace

Polynomial poincare_compact_dual(const RootSystem& rs, const LeviData& levi) {
    const WeylGroup w_l = generate_reflection_subgroup(rs, levi.simple_roots);
    const WeylGroup w_lk = generate_reflection_subgroup(rs, levi.compact_positive);
    const int n = rs.rank();

    const std::vector<int> upstairs = invariant_degrees(w_l, n);
    const std::vector<int> downstairs = invariant_degrees(w_lk, n);

    std::vector<long long> num{1};
    for (int d : upstairs) num = multiply_one_minus(num, 2 * d);
    std::vector<long long> den{1};
    for (int e : downstairs) den = multiply_one_minus(den, 2 * e);

    Polynomial p;
    p.coeffs = divide_exact(std::move(num), den);
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    for (long long c : p.coeffs) {
        if (c < 0) throw std::logic_error("poincare_compact_dual: negative coefficient");
    }
    return p;
}

Polynomial poincare_aq(const AqClass& cls, const Polynomial& compact_dual) {
    return compact_dual.shifted(cls.r_dim);
}

std::string levi_type_label(const RootSystem& rs, const Coloring& coloring,
                            const LeviData& levi) {
    std::vector<bool> noncompact;
    noncompact.reserve(levi.simple_roots.size());
    for (const Root& r : levi.simple_roots) {
        noncompact.push_back(!coloring.is_compact(r));
    }
    const std::vector<DiagramFactor> factors =
        classify_diagram(rs, levi.simple_roots, noncompact);
    std::string label = factors.empty() ? "" : diagram_label(factors);
    if (levi.center_dim > 0) {
        const std::string center = "T^" + std::to_string(levi.center_dim);
        label = label.empty() ? center : label + "×" + center;
    }
    if (label.empty()) label = "1";
    return label;
}

} // namespace aqcoh
