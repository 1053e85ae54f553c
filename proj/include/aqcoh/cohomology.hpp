#pragma once

#include <string>
#include <vector>

#include "aqcoh/parabolics.hpp"
#include "aqcoh/real_form.hpp"
#include "aqcoh/root_system.hpp"

namespace aqcoh {

// Dense polynomial in t with nonnegative integer coefficients, index = degree.
struct Polynomial {
    std::vector<long long> coeffs; // trailing coefficient nonzero (except "1")

    static Polynomial one() { return Polynomial{{1}}; }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long at(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0;
    }
    long long value_at_one() const;
    bool is_palindromic() const;
    bool even_degrees_only() const;
    Polynomial shifted(int by) const; // multiply by t^by

    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }

    std::string expanded_string() const;            // "1+t^2+2t^4"
    std::string factored_string(int shift) const;   // "t^R(1+t^2+...)" given this = P(Y)
};

// Root-level data of the Levi l of a parabolic descriptor.
struct LeviData {
    std::vector<Root> simple_roots;        // Phi ∖ Gamma, sorted
    std::vector<Root> root_subsystem;      // Delta(l)
    std::vector<Root> positive;            // Delta(l) ∩ P(Phi)
    std::vector<Root> compact_subsystem;   // Delta(l) ∩ Delta_k
    std::vector<Root> compact_positive;    // Delta(l) ∩ Delta_k ∩ P(Phi)
    int noncompact_count_positive = 0;     // |Delta(l) ∩ Delta_n ∩ P(Phi)|
    int center_dim = 0;                    // |Gamma|
    std::string type_label;                // semisimple factors × T^{|Gamma|}
    long long weyl_order = 1;              // |W_l|
    long long compact_weyl_order = 1;      // |W_{l∩k}|
};

// Derive the Levi data (including Weyl orders and the type label) for one
// parabolic descriptor.  The positive part of Delta(l) is taken with respect
// to the descriptor's own positive system P(Phi).
LeviData build_levi_data(const RootSystem& rs, const Coloring& coloring,
                         const ParabolicDescriptor& descriptor,
                         const std::vector<Root>& system_roots);

// Poincare polynomial of the compact dual Y_q of L/(L∩K) in the equal-rank
// case:
//
//   P(Y_q, t) = prod_i (1 - t^{2 d_i}) / prod_j (1 - t^{2 e_j}),
//
// where d_i are the invariant-polynomial degrees of W_l and e_j those of
// W_{l∩k}; directions fixed by the whole group contribute degree-1 factors
// on both sides.  The degrees are recovered exactly from the fixed-space
// dimension counts (sum over w of t^{dim fix(w)} factors as prod (t+d_i-1)),
// the division is exact, and all coefficients are nonnegative.
// P(1) = |W_l| / |W_{l∩k}|.
Polynomial poincare_compact_dual(const RootSystem& rs, const LeviData& levi);

// P_q(t) = t^{R} * P(Y_q, t).
Polynomial poincare_aq(const AqClass& cls, const Polynomial& compact_dual);

// Display label: semisimple type factors with coloring annotations plus the
// center "×T^{|Gamma|}" (see DiagramFactor for the grammar).
std::string levi_type_label(const RootSystem& rs, const Coloring& coloring,
                            const LeviData& levi);

} // namespace aqcoh
