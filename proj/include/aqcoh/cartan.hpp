#pragma once

#include <string>
#include <vector>

namespace aqcoh {

// Generalized Cartan matrix A with A[i][j] = <phi_i, phi_j^v>, so that the
// pairing of a root alpha = sum_j c_j phi_j against the coroot of phi_i is
// sum_j c_j A[j][i].  Everything downstream works in simple-root coefficient
// coordinates; no Euclidean embedding is ever constructed.
class CartanMatrix {
  public:
    explicit CartanMatrix(std::vector<std::vector<int>> entries);

    int rank() const { return n_; }
    int at(int i, int j) const { return a_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    // d with d[i]*A[j][i] == d[j]*A[i][j]: the symmetrizer, scaled to the
    // smallest positive integers per connected component.  d[i] is
    // proportional to (phi_i, phi_i)/2, so the Gram matrix of a fixed
    // invariant inner product is G[i][j] = A[i][j]*d[j].
    const std::vector<int>& symmetrizer() const { return d_; }

    // Gram matrix entry (phi_i, phi_j) for the invariant form above.
    int gram(int i, int j) const { return a_[i][j] * d_[j]; }

    // Connected components of the Dynkin diagram, each a sorted list of
    // 0-based node indices; the partition of the node set.
    const std::vector<std::vector<int>>& components() const { return comps_; }

    bool operator==(const CartanMatrix& o) const { return a_ == o.a_; }

  private:
    int n_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;
    std::vector<std::vector<int>> comps_;
};

// Built-in Cartan matrices for the named finite types, in the standard node
// order: chains numbered along the diagram, with the double edge of B_n/C_n
// at the far end (node n short for B, long for C), the fork of D_n at nodes
// n-1 and n, G2 ordered (short, long), and F4 ordered so that nodes 1,2 are
// long, nodes 3,4 short, double edge between 2 and 3.
CartanMatrix cartan_A(int n);
CartanMatrix cartan_B(int n); // n >= 2
CartanMatrix cartan_C(int n); // n >= 2 (C2 == B2 transposed labelling)
CartanMatrix cartan_D(int n); // n >= 3
CartanMatrix cartan_E(int n); // n in {6, 7, 8}; branch node attached to node 3
CartanMatrix cartan_G2();
CartanMatrix cartan_F4();

// Parse a type name like "A1", "B5", "G2", "F4" (case-insensitive letter).
// Accepts the A/B/C/D series up to max_rank plus G2 and F4; the E series is
// constructible via cartan_E but is not a named input type.  Throws
// SpecParseError.
CartanMatrix cartan_named(const std::string& name, int max_rank = 8);

} // namespace aqcoh
