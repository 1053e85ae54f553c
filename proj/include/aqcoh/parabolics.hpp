#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aqcoh/positive_systems.hpp"
#include "aqcoh/real_form.hpp"
#include "aqcoh/root_system.hpp"

namespace aqcoh {

// A theta-stable parabolic q = l ⊕ u described by a pair (Phi, Gamma ⊆ Phi):
// Delta(l) = roots with zero coefficients at Gamma in the Phi-basis,
// Delta(u) = roots with some positive Gamma-coefficient.
struct ParabolicDescriptor {
    int system_index = 0;         // 1-based positive-system id (0: functional-built)
    std::vector<Root> gamma;      // subset of the simple system, sorted
    std::vector<Root> levi_simple;// simple roots of l: Phi ∖ Gamma, sorted
    std::vector<Root> levi_roots; // Delta(l), sorted
    std::vector<Root> u_roots;    // Delta(u), sorted
    std::vector<Root> u_cap_p;    // Delta(u ∩ p) = Delta(u) ∩ Delta_n, sorted
    std::vector<Root> u_cap_k;    // Delta(u ∩ k), sorted

    int r_dim() const { return static_cast<int>(u_cap_p.size()); } // R(q)
    int s_dim() const { return static_cast<int>(u_cap_k.size()); } // S
};

// Decomposes every root in the Phi-basis by exact integer linear algebra
// (the simple-system matrix is unimodular; asserted) and partitions Delta
// into l / u / −u.  Throws BasisDecompositionFailureError on non-integral
// decompositions (a non-simple-system input).
ParabolicDescriptor build_parabolic(const RootSystem& rs, const Coloring& coloring,
                                    const PositiveSystem& system,
                                    const std::vector<Root>& gamma);

// Every (system, Gamma) pair, Gamma over all subsets of each simple system in
// bitmask order over the lexicographically sorted simple roots; deterministic.
std::vector<ParabolicDescriptor> enumerate_all_parabolics(
    const RootSystem& rs, const Coloring& coloring,
    const std::vector<PositiveSystem>& systems);

// One unitary equivalence class of A_q modules: by the Riba criterion the
// class is exactly the set Delta(u ∩ p), so the sorted coefficient vectors
// form the canonical key.
struct AqClass {
    std::vector<Root> key; // Delta(u ∩ p), sorted
    int r_dim = 0;         // |key|
    std::vector<ParabolicDescriptor> representatives; // enumeration order
    std::vector<Root> levi_simple;      // Phi ∖ Gamma of the first representative
    std::vector<long long> lowest_k_type_weight; // sum of key = 2*delta(u∩p)
    std::string levi_type;              // filled by the classification stage
};

// Groups descriptors by key; classes sorted by (R, key lex).
std::vector<AqClass> dedupe_classes(const std::vector<ParabolicDescriptor>& descriptors);

// q_x for an integer functional x (one integer per base simple root;
// alpha(x) = dot(coeffs(alpha), x)): u = {alpha : alpha(x) > 0},
// l = {alpha : alpha(x) = 0}.  Throws NotDominantError unless alpha(x) >= 0
// for every compact positive root.
ParabolicDescriptor build_q_x(const RootSystem& rs, const Coloring& coloring,
                              const std::vector<int>& x);

// All distinct Delta(u∩p) keys of q_x for x in the dominant part of the box
// [-radius, radius]^rank.  Independent oracle for dedupe_classes.
std::set<std::vector<Root>> q_x_keys_in_box(const RootSystem& rs,
                                            const Coloring& coloring, int radius);

// Smallest radius r <= max_radius with keys(r) == keys(r+1), together with
// that stable key set; nullopt if the sweep never stabilizes within the cap.
struct QxSweepResult {
    int stable_radius = 0;
    std::set<std::vector<Root>> keys;
};
std::optional<QxSweepResult> q_x_sweep_until_stable(const RootSystem& rs,
                                                    const Coloring& coloring,
                                                    int max_radius = 8);

} // namespace aqcoh
