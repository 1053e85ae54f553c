#include "aqcoh/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aqcoh/errors.hpp"

namespace aqcoh {

std::string DiagramFactor::label() const {
    std::ostringstream os;
    os << family << rank;
    if (!noncompact_positions.empty()) {
        os << "(ν=";
        for (std::size_t i = 0; i < noncompact_positions.size(); ++i) {
            if (i) os << ",";
            os << noncompact_positions[i];
        }
        os << ")";
    }
    return os.str();
}

std::string diagram_label(const std::vector<DiagramFactor>& factors) {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "×";
        os << factors[i].label();
    }
    return os.str();
}

namespace {

struct Component {
    std::vector<int> nodes;              // indices into simple_roots
    std::vector<std::vector<int>> bond;  // bond[i][j] = C_ij * C_ji, local indexing
    std::vector<long long> length_sq;    // squared lengths, local indexing
    std::vector<std::vector<int>> adj;   // neighbor lists, local indexing
};

// All admissible canonical node orders of one irreducible factor: each entry
// maps position p (0-based) to a local node index.  Several orders appear
// exactly when the diagram has automorphisms; the caller minimizes over them.
struct Shape {
    char family = 0;
    std::vector<std::vector<int>> orders;
};

std::vector<int> walk_path(const Component& c, int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int nb : c.adj[cur]) {
            if (nb != prev) { next = nb; break; }
        }
        if (next == -1) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

Shape classify_component(const Component& c) {
    const int r = static_cast<int>(c.nodes.size());
    if (r == 1) return Shape{'A', {{0}}};

    int triple = 0, dbl = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (c.bond[i][j] == 3) ++triple;
            else if (c.bond[i][j] == 2) ++dbl;
            else if (c.bond[i][j] > 3) {
                throw UnrecognizedDiagramError("bond multiplicity exceeds 3");
            }
        }
    }
    std::vector<int> by_degree[5];
    for (int i = 0; i < r; ++i) {
        const std::size_t d = c.adj[i].size();
        if (d > 3) throw UnrecognizedDiagramError("node of degree > 3");
        by_degree[d].push_back(i);
    }
    const int branch_nodes = static_cast<int>(by_degree[3].size());

    if (triple > 0) {
        if (r != 2 || triple != 1 || dbl != 0) {
            throw UnrecognizedDiagramError("triple bond outside G2");
        }
        // Canonical G2 order: (short, long).
        const int short_node = c.length_sq[0] < c.length_sq[1] ? 0 : 1;
        return Shape{'G', {{short_node, 1 - short_node}}};
    }

    if (dbl > 1) throw UnrecognizedDiagramError("more than one double bond");

    if (dbl == 1) {
        if (branch_nodes > 0) {
            throw UnrecognizedDiagramError("double bond on a branched diagram");
        }
        if (by_degree[1].empty()) {
            throw UnrecognizedDiagramError("cyclic diagram");
        }
        // A path containing exactly one double edge.
        const std::vector<int> fwd = walk_path(c, by_degree[1][0]);
        if (static_cast<int>(fwd.size()) != r) {
            throw UnrecognizedDiagramError("disconnected or cyclic component");
        }
        if (r == 2) {
            // B2 canonical order: (long, short).
            const int long_node = c.length_sq[fwd[0]] >= c.length_sq[fwd[1]] ? fwd[0] : fwd[1];
            return Shape{'B', {{long_node, long_node == fwd[0] ? fwd[1] : fwd[0]}}};
        }
        std::vector<int> rev(fwd.rbegin(), fwd.rend());
        const auto bond_at = [&](const std::vector<int>& ord, int k) {
            return c.bond[ord[k]][ord[k + 1]];
        };
        for (const auto& ord : {fwd, rev}) {
            if (bond_at(ord, r - 2) == 2) {
                // Double edge at the far end: B when the end node is short,
                // C when it is long.
                const bool end_short = c.length_sq[ord[r - 1]] < c.length_sq[ord[r - 2]];
                return Shape{end_short ? 'B' : 'C', {ord}};
            }
        }
        if (r == 4 && bond_at(fwd, 1) == 2) {
            // Interior double edge: F4, oriented long pair first.
            const std::vector<int>& ord =
                c.length_sq[fwd[0]] > c.length_sq[fwd[3]] ? fwd : rev;
            if (c.length_sq[ord[0]] == c.length_sq[ord[1]] &&
                c.length_sq[ord[2]] == c.length_sq[ord[3]] &&
                c.length_sq[ord[0]] == 2 * c.length_sq[ord[2]]) {
                return Shape{'F', {ord}};
            }
        }
        throw UnrecognizedDiagramError("unrecognized double-bond diagram");
    }

    // Simply laced from here on.
    if (branch_nodes == 0) {
        if (by_degree[1].empty()) {
            throw UnrecognizedDiagramError("cyclic diagram");
        }
        // Path: type A, both orientations admissible.
        const std::vector<int> fwd = walk_path(c, by_degree[1][0]);
        if (static_cast<int>(fwd.size()) != r) {
            throw UnrecognizedDiagramError("disconnected or cyclic component");
        }
        std::vector<int> rev(fwd.rbegin(), fwd.rend());
        return Shape{'A', {fwd, rev}};
    }
    if (branch_nodes > 1) {
        throw UnrecognizedDiagramError("more than one branch node");
    }

    const int center = by_degree[3][0];
    // The three arms hanging off the center, each listed center-outwards.
    std::vector<std::vector<int>> arms;
    for (int nb : c.adj[center]) {
        std::vector<int> arm{nb};
        int prev = center, cur = nb;
        while (true) {
            int next = -1;
            for (int nb2 : c.adj[cur]) {
                if (nb2 != prev) { next = nb2; break; }
            }
            if (next == -1) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::size_t a = arms[0].size(), b = arms[1].size(), cc = arms[2].size();
    if (a + b + cc + 1 != static_cast<std::size_t>(r)) {
        throw UnrecognizedDiagramError("inconsistent branch decomposition");
    }

    // Assemble a canonical order from a (tail, arm1, arm2) arm assignment:
    // positions 1..r-2 run from the tail's far end through the center,
    // positions r-1 and r are the two remaining arms' nodes (length-1 arms
    // only for D; for E the long arms are laid along the path).
    const auto d_order = [&](const std::vector<int>& tail, const std::vector<int>& arm1,
                             const std::vector<int>& arm2) {
        std::vector<int> ord(tail.rbegin(), tail.rend());
        ord.push_back(center);
        ord.push_back(arm1[0]);
        ord.push_back(arm2[0]);
        return ord;
    };

    if (a == 1 && b == 1) {
        // D_r: the two length-1 arms take the last two positions.  All arm
        // assignments consistent with the lengths are diagram automorphisms
        // (D4 additionally permutes all three outer arms).
        Shape shape{'D', {}};
        std::vector<int> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end());
        do {
            if (arms[idx[1]].size() == 1 && arms[idx[2]].size() == 1) {
                shape.orders.push_back(
                    d_order(arms[idx[0]], arms[idx[1]], arms[idx[2]]));
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        return shape;
    }
    if (a == 1 && b == 2 && (cc == 2 || cc == 3 || cc == 4)) {
        // E6/E7/E8: canonical order lays the two long arms along a path with
        // the center at position 3 and the short arm's node last.
        const auto e_order = [&](const std::vector<int>& left, const std::vector<int>& right) {
            std::vector<int> ord(left.rbegin(), left.rend());
            ord.push_back(center);
            ord.insert(ord.end(), right.begin(), right.end());
            ord.push_back(arms[0][0]);
            return ord;
        };
        Shape shape{'E', {e_order(arms[1], arms[2])}};
        if (cc == 2) shape.orders.push_back(e_order(arms[2], arms[1]));
        return shape;
    }
    throw UnrecognizedDiagramError("branched diagram is not of finite type");
}

} // namespace

std::vector<DiagramFactor> classify_diagram(const RootSystem& rs,
                                            const std::vector<Root>& simple_roots,
                                            const std::vector<bool>& noncompact) {
    const int m = static_cast<int>(simple_roots.size());
    if (noncompact.size() != simple_roots.size()) {
        throw Error("noncompact marks must align with the simple roots");
    }
    std::vector<std::vector<int>> cartan(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            cartan[i][j] = rs.pairing(simple_roots[i], simple_roots[j]);
        }
    }
    // Connected components of the induced diagram.
    std::vector<int> comp_of(m, -1);
    int comp_count = 0;
    for (int start = 0; start < m; ++start) {
        if (comp_of[start] != -1) continue;
        std::vector<int> stack{start};
        comp_of[start] = comp_count;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < m; ++j) {
                if (comp_of[j] == -1 && cartan[i][j] != 0) {
                    comp_of[j] = comp_count;
                    stack.push_back(j);
                }
            }
        }
        ++comp_count;
    }

    std::vector<DiagramFactor> factors;
    for (int cidx = 0; cidx < comp_count; ++cidx) {
        Component c;
        for (int i = 0; i < m; ++i) {
            if (comp_of[i] == cidx) c.nodes.push_back(i);
        }
        const int r = static_cast<int>(c.nodes.size());
        c.bond.assign(r, std::vector<int>(r, 0));
        c.adj.assign(r, {});
        c.length_sq.resize(r);
        for (int i = 0; i < r; ++i) {
            c.length_sq[i] = rs.inner(simple_roots[c.nodes[i]], simple_roots[c.nodes[i]]);
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                c.bond[i][j] = cartan[c.nodes[i]][c.nodes[j]] * cartan[c.nodes[j]][c.nodes[i]];
                if (c.bond[i][j] != 0) c.adj[i].push_back(j);
            }
        }
        const Shape shape = classify_component(c);

        DiagramFactor factor;
        factor.family = shape.family;
        factor.rank = r;
        std::vector<int> best;
        for (const auto& order : shape.orders) {
            std::vector<int> positions;
            for (int p = 0; p < r; ++p) {
                if (noncompact[c.nodes[order[p]]]) positions.push_back(p + 1);
            }
            if (&order == &shape.orders.front() || positions < best) best = positions;
        }
        factor.noncompact_positions = best;
        factors.push_back(std::move(factor));
    }
    std::sort(factors.begin(), factors.end(),
              [](const DiagramFactor& x, const DiagramFactor& y) {
                  if (x.rank != y.rank) return x.rank > y.rank;
                  if (x.family != y.family) return x.family < y.family;
                  return x.noncompact_positions < y.noncompact_positions;
              });
    return factors;
}

} // namespace aqcoh
