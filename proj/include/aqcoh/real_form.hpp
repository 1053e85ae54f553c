#pragma once

#include <vector>

#include "aqcoh/root_system.hpp"

namespace aqcoh {

// One layer of the grading by the coefficient at the single noncompact simple
// root nu: Delta_i = { alpha : n_nu(alpha) = i }.
struct GradedLayer {
    int degree = 0;
    std::vector<Root> roots; // sorted
};

// Compact/noncompact coloring of the roots induced by declaring a set of
// simple roots noncompact (Vogan-diagram convention): a root is compact iff
// the sum of its coefficients at the noncompact simple indices is even.
class Coloring {
  public:
    Coloring(const RootSystem& rs, std::vector<int> noncompact_nodes);

    const std::vector<int>& noncompact_nodes() const { return nodes_; }

    bool is_compact(const Root& r) const;

    const std::vector<Root>& compact_roots() const { return compact_; }
    const std::vector<Root>& noncompact_roots() const { return noncompact_; }
    const std::vector<Root>& compact_positive() const { return compact_pos_; }
    const std::vector<Root>& noncompact_positive() const { return noncompact_pos_; }

    // Simple system of the compact subsystem (indecomposables of Delta_k^+).
    const std::vector<Root>& compact_simple_system() const { return compact_simple_; }

    // Layers Delta_i, i = -m..m; populated only for single-node colorings.
    const std::vector<GradedLayer>& layers() const { return layers_; }

  private:
    std::vector<int> nodes_; // 0-based, sorted
    std::vector<Root> compact_, noncompact_, compact_pos_, noncompact_pos_;
    std::vector<Root> compact_simple_;
    std::vector<GradedLayer> layers_;
};

Coloring color_roots(const RootSystem& rs, const std::vector<int>& noncompact_nodes);

enum class BdsKind { not_bds, hermitian_bds, nonhermitian_bds };

// Borel-de Siebenthal test for a positive system P containing the coloring's
// compact positive roots.  Per irreducible component of Delta: the component's
// slice of P's simple system must contain exactly one noncompact root, and the
// coefficient of that root in the component's highest root (highest for P)
// decides the kind: 1 on every component -> hermitian_bds, 2 on every
// component -> nonhermitian_bds.  Anything else (including mixed 1/2 unions,
// which this tri-state cannot express) -> not_bds.
// Throws NotPositiveSystemError / DoesNotContainCompactPositiveError.
BdsKind is_borel_de_siebenthal(const RootSystem& rs, const Coloring& coloring,
                               const std::vector<Root>& P);

// Per-component highest-root coefficients at the unique noncompact simple
// root of P, or an empty vector if some component does not have exactly one
// noncompact simple root.  (The raw data behind is_borel_de_siebenthal,
// needed for the per-component discrete-series refinement.)
std::vector<int> bds_component_coefficients(const RootSystem& rs,
                                            const Coloring& coloring,
                                            const std::vector<Root>& P);

// Component-wise Hermitian test for the real form itself: component c of g/k
// is Hermitian iff its compact roots span a proper sublattice of the
// component's span (equivalently the center of k meets the component).
std::vector<bool> component_is_hermitian(const RootSystem& rs,
                                         const Coloring& coloring);

} // namespace aqcoh
