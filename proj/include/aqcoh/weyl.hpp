#pragma once

#include <cstddef>
#include <vector>

#include "aqcoh/root_system.hpp"

namespace aqcoh {

// A Weyl group element, canonically identified by the images of the base
// simple roots (i.e. its matrix in the simple-root basis, one image vector
// per column).  Distinct elements have distinct image tuples because the
// simple roots form a basis.
struct WeylElement {
    std::vector<Root> images; // images[i] = w(phi_i), base coordinates

    Root apply(const Root& alpha) const;
    bool operator==(const WeylElement& o) const { return images == o.images; }
    bool operator<(const WeylElement& o) const { return images < o.images; }
};

WeylElement weyl_identity(int rank);

// (a ∘ b): first b, then a.
WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);

struct WeylGroup {
    std::vector<WeylElement> elements; // sorted by image tuple
    std::size_t order() const { return elements.size(); }
};

// Breadth-first closure over the simple reflections.  max_elements guards
// against impractically large groups (throws WeylTooLargeError); the guard is
// a resource limit, not a mathematical bound.
WeylGroup generate_weyl_group(const RootSystem& rs,
                              std::size_t max_elements = 1000000);

// The reflection subgroup generated by s_beta for beta in `generators`
// (arbitrary roots, base coordinates).  Elements are full WeylElements of the
// ambient system.  Used for Levi and compact-subsystem Weyl groups.
WeylGroup generate_reflection_subgroup(const RootSystem& rs,
                                       const std::vector<Root>& generators,
                                       std::size_t max_elements = 1000000);

} // namespace aqcoh
