#include <doctest.h>

#include <algorithm>
#include <set>

#include "aqcoh/cartan.hpp"
#include "aqcoh/errors.hpp"
#include "aqcoh/real_form.hpp"
#include "aqcoh/root_system.hpp"
#include "aqcoh/weyl.hpp"

using namespace aqcoh;

namespace {

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

// The 14 positive noncompact roots of F4 with the first simple root
// noncompact: exactly the positive roots with odd coefficient at node 1.
const std::set<Root> kF4NoncompactPositive = {
    {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 1, 2, 0},
    {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 2, 2, 0}, {1, 2, 2, 1}, {1, 2, 2, 2},
    {1, 2, 3, 1}, {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2},
};

} // namespace

TEST_CASE("F4 with noncompact first node: root coloring") {
    RootSystem rs(cartan_F4());
    Coloring col(rs, {0});
    CHECK(col.noncompact_nodes() == std::vector<int>{0});

    CHECK(col.noncompact_roots().size() == 28);
    CHECK(col.compact_roots().size() == 20);
    CHECK(col.compact_positive().size() == 10);
    CHECK(as_set(col.noncompact_positive()) == kF4NoncompactPositive);

    // Parity rule: compact iff the coefficient at node 1 is even.
    CHECK(col.is_compact(Root{0, 1, 2, 2}));
    CHECK(col.is_compact(Root{2, 3, 4, 2}));
    CHECK_FALSE(col.is_compact(Root{1, 2, 3, 1}));
    CHECK_FALSE(col.is_compact(Root{-1, 0, 0, 0}));

    // The compact subsystem is C3 x A1: simple roots φ2, φ3, φ4 and the
    // highest root δ = 2φ1+3φ2+4φ3+2φ4.
    CHECK(col.compact_simple_system() ==
          std::vector<Root>{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {2, 3, 4, 2}});

    // compact ∪ noncompact partitions the roots.
    CHECK(col.compact_roots().size() + col.noncompact_roots().size() ==
          rs.roots().size());
    for (const Root& r : col.compact_roots()) CHECK(col.is_compact(r));
    for (const Root& r : col.noncompact_roots()) CHECK_FALSE(col.is_compact(r));
}

TEST_CASE("F4 grading by the noncompact coefficient") {
    RootSystem rs(cartan_F4());
    Coloring col = color_roots(rs, {0});
    const auto& layers = col.layers();
    REQUIRE(layers.size() == 5);

    // Degrees -2..2 with sizes 1, 14, 18, 14, 1.
    const int sizes[5] = {1, 14, 18, 14, 1};
    for (int i = 0; i < 5; ++i) {
        CHECK(layers[i].degree == i - 2);
        CHECK(layers[i].roots.size() == static_cast<std::size_t>(sizes[i]));
        CHECK(std::is_sorted(layers[i].roots.begin(), layers[i].roots.end()));
    }
    CHECK(layers[4].roots == std::vector<Root>{{2, 3, 4, 2}});
    CHECK(layers[0].roots == std::vector<Root>{{-2, -3, -4, -2}});
    CHECK(as_set(layers[3].roots) == kF4NoncompactPositive);

    // Layer 0 consists of the compact roots other than ±δ.
    for (const Root& r : layers[2].roots) {
        CHECK(col.is_compact(r));
        CHECK(r[0] == 0);
    }
}

TEST_CASE("multi-node colorings have no single grading") {
    RootSystem rs(cartan_A(2));
    Coloring col(rs, {0, 1});
    CHECK(col.layers().empty());
    // With both simple roots noncompact, φ1+φ2 has coefficient sum 2: compact.
    CHECK(col.is_compact(Root{1, 1}));
    CHECK_FALSE(col.is_compact(Root{1, 0}));
    CHECK(col.compact_positive() == std::vector<Root>{{1, 1}});
}

TEST_CASE("coloring rejects out-of-range nodes") {
    RootSystem rs(cartan_A(2));
    CHECK_THROWS_AS(Coloring(rs, {2}), Error);
    CHECK_THROWS_AS(Coloring(rs, {-1}), Error);
}

TEST_CASE("Borel-de Siebenthal kinds") {
    SUBCASE("F4 base system: one noncompact simple with coefficient 2") {
        RootSystem rs(cartan_F4());
        Coloring col(rs, {0});
        CHECK(is_borel_de_siebenthal(rs, col, rs.base_positive()) ==
              BdsKind::nonhermitian_bds);
        CHECK(bds_component_coefficients(rs, col, rs.base_positive()) ==
              std::vector<int>{2});
    }

    SUBCASE("F4: a system with two noncompact simple roots is not of this type") {
        RootSystem rs(cartan_F4());
        Coloring col(rs, {0});
        // s_{φ1} applied to the base system: its simple system is
        // {-φ1, φ1+φ2, φ3, φ4}, and both -φ1 and φ1+φ2 are noncompact.
        std::vector<Root> p;
        for (const Root& r : rs.base_positive())
            p.push_back(rs.simple_reflection(0, r));
        CHECK(is_borel_de_siebenthal(rs, col, p) == BdsKind::not_bds);
        CHECK(bds_component_coefficients(rs, col, p).empty());
    }

    SUBCASE("A1: the split rank-1 form is Hermitian") {
        RootSystem rs(cartan_A(1));
        Coloring col(rs, {0});
        CHECK(is_borel_de_siebenthal(rs, col, {Root{1}}) ==
              BdsKind::hermitian_bds);
        CHECK(is_borel_de_siebenthal(rs, col, {Root{-1}}) ==
              BdsKind::hermitian_bds);
    }

    SUBCASE("B2 with noncompact long node: coefficient 1 in φ1+2φ2") {
        RootSystem rs(cartan_B(2));
        Coloring col(rs, {0});
        CHECK(is_borel_de_siebenthal(rs, col, rs.base_positive()) ==
              BdsKind::hermitian_bds);
    }

    SUBCASE("G2 with noncompact long node: coefficient 2 in 3φ1+2φ2") {
        RootSystem rs(cartan_G2());
        Coloring col(rs, {1});
        CHECK(is_borel_de_siebenthal(rs, col, rs.base_positive()) ==
              BdsKind::nonhermitian_bds);
    }
}

TEST_CASE("Borel-de Siebenthal test validates its input") {
    RootSystem rs(cartan_F4());
    Coloring col(rs, {0});

    // Not a positive system at all.
    std::vector<Root> garbage = rs.base_positive();
    garbage.pop_back();
    CHECK_THROWS_AS(is_borel_de_siebenthal(rs, col, garbage),
                    NotPositiveSystemError);

    // A genuine positive system that does not contain all of Δ_k^+:
    // reflecting in the compact simple root φ2 removes φ2 from the system.
    std::vector<Root> missing;
    for (const Root& r : rs.base_positive())
        missing.push_back(rs.simple_reflection(1, r));
    REQUIRE(is_positive_system(rs, missing));
    CHECK_THROWS_AS(is_borel_de_siebenthal(rs, col, missing),
                    DoesNotContainCompactPositiveError);
}

TEST_CASE("Hermitian components") {
    // Hermitian iff the center of k is nontrivial on the component.
    {
        RootSystem rs(cartan_F4());
        CHECK(component_is_hermitian(rs, Coloring(rs, {0})) ==
              std::vector<bool>{false});
    }
    {
        RootSystem rs(cartan_A(1));
        CHECK(component_is_hermitian(rs, Coloring(rs, {0})) ==
              std::vector<bool>{true});
    }
    {
        RootSystem rs(cartan_A(2));
        CHECK(component_is_hermitian(rs, Coloring(rs, {0})) ==
              std::vector<bool>{true});
    }
    {
        // Long node of B3 noncompact: k = so(2) ⊕ so(5), Hermitian.
        // Short node noncompact: k = so(6) is semisimple, not Hermitian.
        RootSystem rs(cartan_B(3));
        CHECK(component_is_hermitian(rs, Coloring(rs, {0})) ==
              std::vector<bool>{true});
        CHECK(component_is_hermitian(rs, Coloring(rs, {2})) ==
              std::vector<bool>{false});
    }
    {
        // Last node of C3 noncompact: k = u(3), Hermitian.  First node:
        // k = sp(1) × sp(2), semisimple.
        RootSystem rs(cartan_C(3));
        CHECK(component_is_hermitian(rs, Coloring(rs, {2})) ==
              std::vector<bool>{true});
        CHECK(component_is_hermitian(rs, Coloring(rs, {0})) ==
              std::vector<bool>{false});
    }
    {
        // One flag per irreducible component.
        RootSystem rs(CartanMatrix({{2, 0}, {0, 2}}));
        CHECK(component_is_hermitian(rs, Coloring(rs, {0, 1})) ==
              std::vector<bool>{true, true});
    }
}
