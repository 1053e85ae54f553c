#include "aqcoh/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

#include "aqcoh/errors.hpp"

namespace aqcoh {

namespace {

void validate_entries(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidCartanMatrixError("Cartan matrix must be non-empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw InvalidCartanMatrixError("Cartan matrix must be square");
        }
        if (a[i][i] != 2) {
            throw InvalidCartanMatrixError("Cartan matrix diagonal entries must be 2");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) {
                throw InvalidCartanMatrixError(
                    "Cartan matrix off-diagonal entries must be non-positive");
            }
            if ((a[i][j] == 0) != (a[j][i] == 0)) {
                throw InvalidCartanMatrixError(
                    "Cartan matrix zero pattern must be symmetric");
            }
        }
    }
}

std::vector<std::vector<int>> find_components(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<std::size_t> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            const std::size_t i = q.front();
            q.pop();
            comp.push_back(static_cast<int>(i));
            for (std::size_t j = 0; j < n; ++j) {
                if (!seen[j] && a[i][j] != 0) {
                    seen[j] = true;
                    q.push(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Positive integer weights d with A[i][j]*d[j] symmetric in (i,j), i.e.
// d[j] proportional to the squared length of phi_j.  Propagated along diagram
// edges as exact rationals, then rescaled to minimal positive integers per
// connected component.
std::vector<int> find_symmetrizer(const std::vector<std::vector<int>>& a,
                                  const std::vector<std::vector<int>>& comps) {
    const std::size_t n = a.size();
    std::vector<long long> num(n, 0), den(n, 1);
    for (const auto& comp : comps) {
        num[comp[0]] = 1;
        den[comp[0]] = 1;
        std::vector<bool> placed(n, false);
        placed[comp[0]] = true;
        std::queue<int> q;
        q.push(comp[0]);
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            for (int j : comp) {
                if (placed[j] || a[i][j] == 0) continue;
                // a_ij d_j = a_ji d_i  =>  d_j = d_i * a_ji / a_ij
                long long nn = num[i] * a[j][i];
                long long dd = den[i] * a[i][j];
                if (dd < 0) { nn = -nn; dd = -dd; }
                const long long g = std::gcd(std::abs(nn), dd);
                num[j] = nn / g;
                den[j] = dd / g;
                placed[j] = true;
                q.push(j);
            }
        }
        long long common_den = 1;
        for (int i : comp) common_den = std::lcm(common_den, den[i]);
        long long common_num = 0;
        for (int i : comp) {
            num[i] *= common_den / den[i];
            den[i] = 1;
            common_num = std::gcd(common_num, std::abs(num[i]));
        }
        for (int i : comp) {
            num[i] /= common_num;
            if (num[i] <= 0) {
                throw InvalidCartanMatrixError(
                    "Cartan matrix is not symmetrizable with positive weights");
            }
        }
    }
    // Full pairwise verification: the propagation above only fixes a spanning
    // tree of each component, cycles could still be inconsistent.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] * num[j] != a[j][i] * num[i]) {
                throw InvalidCartanMatrixError("Cartan matrix is not symmetrizable");
            }
        }
    }
    std::vector<int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(num[i]);
    return d;
}

} // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries)
    : n_(static_cast<int>(entries.size())), a_(std::move(entries)) {
    validate_entries(a_);
    comps_ = find_components(a_);
    d_ = find_symmetrizer(a_, comps_);
}

CartanMatrix cartan_A(int n) {
    if (n < 1) throw InvalidCartanMatrixError("type A requires rank >= 1");
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
    }
    return CartanMatrix(a);
}

CartanMatrix cartan_B(int n) {
    if (n < 2) throw InvalidCartanMatrixError("type B requires rank >= 2");
    auto a = cartan_A(n).entries();
    // Last node short: <phi_{n-1}, phi_n^v> = -2.
    a[n - 2][n - 1] = -2;
    return CartanMatrix(a);
}

CartanMatrix cartan_C(int n) {
    if (n < 2) throw InvalidCartanMatrixError("type C requires rank >= 2");
    auto a = cartan_A(n).entries();
    // Last node long: <phi_n, phi_{n-1}^v> = -2.
    a[n - 1][n - 2] = -2;
    return CartanMatrix(a);
}

CartanMatrix cartan_D(int n) {
    if (n < 3) throw InvalidCartanMatrixError("type D requires rank >= 3");
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n - 1; ++i) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
    a[n - 3][n - 1] = -1;
    a[n - 1][n - 3] = -1;
    return CartanMatrix(a);
}

CartanMatrix cartan_E(int n) {
    if (n < 6 || n > 8) throw InvalidCartanMatrixError("type E requires rank 6, 7 or 8");
    // Nodes 1..n-1 form a path, the last node hangs off path node 3.
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n - 1; ++i) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
    a[2][n - 1] = -1;
    a[n - 1][2] = -1;
    return CartanMatrix(a);
}

CartanMatrix cartan_G2() {
    // Node 1 short, node 2 long.
    return CartanMatrix({{2, -1}, {-3, 2}});
}

CartanMatrix cartan_F4() {
    // Nodes 1,2 long, nodes 3,4 short, double edge between 2 and 3.
    return CartanMatrix({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}

CartanMatrix cartan_named(const std::string& name, int max_rank) {
    if (name.size() < 2) throw SpecParseError("unrecognized algebra name: " + name);
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || i > 3) {
            throw SpecParseError("unrecognized algebra name: " + name);
        }
        rank = rank * 10 + (name[i] - '0');
    }
    if (rank < 1 || rank > max_rank) {
        std::ostringstream os;
        os << "rank " << rank << " out of range [1, " << max_rank << "] for type "
           << family;
        throw SpecParseError(os.str());
    }
    try {
        switch (family) {
            case 'A': return cartan_A(rank);
            case 'B': return cartan_B(rank);
            case 'C': return cartan_C(rank);
            case 'D': return cartan_D(rank);
            case 'F':
                if (rank == 4) return cartan_F4();
                break;
            case 'G':
                if (rank == 2) return cartan_G2();
                break;
            default: break;
        }
    } catch (const InvalidCartanMatrixError& e) {
        throw SpecParseError(std::string("invalid algebra ") + name + ": " + e.what());
    }
    throw SpecParseError("unrecognized algebra name: " + name);
}

} // namespace aqcoh
