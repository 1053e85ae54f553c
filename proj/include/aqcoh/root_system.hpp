#pragma once

#include <cstddef>
#include <vector>

#include "aqcoh/cartan.hpp"

namespace aqcoh {

// A root is its integer coefficient vector over the base simple roots.
using Root = std::vector<int>;

inline Root negated(const Root& r) {
    Root m(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
    return m;
}

inline Root added(const Root& a, const Root& b) {
    Root s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

// All coefficients >= 0 (and the root nonzero): positive for the base system.
bool is_base_positive(const Root& r);

class RootSystem {
  public:
    // Reflection closure from the simple roots.  Throws NotFiniteTypeError if
    // more than max_roots vectors appear (affine/indefinite input).
    explicit RootSystem(CartanMatrix cartan, std::size_t max_roots = 10000);

    int rank() const { return cartan_.rank(); }
    const CartanMatrix& cartan() const { return cartan_; }

    // All roots / base-positive roots, sorted lexicographically.
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& base_positive() const { return positive_; }
    const std::vector<Root>& simple_roots() const { return simple_; }

    bool contains(const Root& r) const;

    // <alpha, phi_i^v> for alpha given in base coordinates (0-based i).
    int pairing_with_simple_coroot(const Root& alpha, int i) const;

    // Invariant inner product (alpha, beta) via the symmetrized Cartan matrix.
    long long inner(const Root& alpha, const Root& beta) const;

    // <alpha, beta^v> = 2(alpha,beta)/(beta,beta); integral for roots beta.
    int pairing(const Root& alpha, const Root& beta) const;

    // s_i(alpha): reflection in the i-th base simple root (0-based i).
    Root simple_reflection(int i, const Root& alpha) const;

    // s_beta(alpha) for an arbitrary root beta.
    Root reflect(const Root& beta, const Root& alpha) const;

    // Highest root of each irreducible component, componentwise-maximal in
    // the base dominance order; order matches cartan().components().
    const std::vector<Root>& component_highest() const { return comp_highest_; }

    bool is_irreducible() const { return cartan_.components().size() == 1; }

    // The unique maximal root in the base dominance order.  Only defined for
    // irreducible systems; throws Error otherwise.
    const Root& highest_root() const;

    // Index of the irreducible component a root lives in.
    int component_of(const Root& r) const;

  private:
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    std::vector<Root> simple_;
    std::vector<Root> comp_highest_;
};

// Indecomposable elements of a positive system P: those not a sum of two
// elements of P.  Validates that P really is a positive system (throws
// NotPositiveSystemError) and returns the simple system sorted
// lexicographically; its size equals the rank.
std::vector<Root> extract_simple_system(const RootSystem& rs,
                                        const std::vector<Root>& P);

// true iff P is a genuine positive system: one root from each ± pair
// (P ∪ −P = Δ, P ∩ −P = ∅, duplicates rejected) and closed under root
// addition, which together characterise the sets { α ∈ Δ : α(x) > 0 }
// cut out by regular functionals x.
bool is_positive_system(const RootSystem& rs, const std::vector<Root>& P);

} // namespace aqcoh
