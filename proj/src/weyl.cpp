#include "aqcoh/weyl.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "aqcoh/errors.hpp"

namespace aqcoh {

Root WeylElement::apply(const Root& alpha) const {
    const std::size_t n = images.size();
    Root out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += alpha[i] * images[i][j];
    }
    return out;
}

WeylElement weyl_identity(int rank) {
    WeylElement e;
    e.images.resize(rank);
    for (int i = 0; i < rank; ++i) {
        e.images[i].assign(rank, 0);
        e.images[i][i] = 1;
    }
    return e;
}

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    c.images.reserve(b.images.size());
    for (const Root& image : b.images) c.images.push_back(a.apply(image));
    return c;
}

namespace {

WeylGroup closure(const std::vector<WeylElement>& generators, int rank,
                  std::size_t max_elements) {
    std::set<WeylElement> known;
    std::queue<WeylElement> todo;
    const WeylElement id = weyl_identity(rank);
    known.insert(id);
    todo.push(id);
    while (!todo.empty()) {
        const WeylElement w = todo.front();
        todo.pop();
        for (const WeylElement& g : generators) {
            WeylElement next = weyl_compose(g, w);
            if (known.insert(next).second) {
                if (known.size() > max_elements) {
                    std::ostringstream os;
                    os << "reflection group closure exceeded " << max_elements
                       << " elements";
                    throw WeylTooLargeError(os.str());
                }
                todo.push(std::move(next));
            }
        }
    }
    WeylGroup group;
    group.elements.assign(known.begin(), known.end());
    return group;
}

} // namespace

WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t max_elements) {
    const int n = rs.rank();
    std::vector<WeylElement> gens;
    for (int i = 0; i < n; ++i) {
        WeylElement s;
        s.images.reserve(n);
        for (const Root& phi : rs.simple_roots()) {
            s.images.push_back(rs.simple_reflection(i, phi));
        }
        gens.push_back(std::move(s));
    }
    return closure(gens, n, max_elements);
}

WeylGroup generate_reflection_subgroup(const RootSystem& rs,
                                       const std::vector<Root>& generators,
                                       std::size_t max_elements) {
    const int n = rs.rank();
    std::vector<WeylElement> gens;
    for (const Root& beta : generators) {
        if (!rs.contains(beta)) {
            throw Error("reflection subgroup generator is not a root");
        }
        WeylElement s;
        s.images.reserve(n);
        for (const Root& phi : rs.simple_roots()) {
            s.images.push_back(rs.reflect(beta, phi));
        }
        gens.push_back(std::move(s));
    }
    return closure(gens, n, max_elements);
}

} // namespace aqcoh
