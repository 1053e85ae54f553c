#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "aqcoh/cartan.hpp"
#include "aqcoh/classification.hpp"
#include "aqcoh/errors.hpp"
#include "aqcoh/report.hpp"

using namespace aqcoh;

namespace {

const ClassificationReport& f4_report() {
    static const ClassificationReport report = [] {
        RootSystem rs(cartan_F4());
        Coloring col(rs, {0});
        return classify_real_form(rs, col, "F4");
    }();
    return report;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Polynomial poly(std::vector<long long> coeffs) {
    Polynomial p;
    p.coeffs = std::move(coeffs);
    return p;
}

} // namespace

TEST_CASE("half-integer vectors") {
    const HalfVector h = half_sum({{1, 0}, {0, 1}, {1, 1}});
    CHECK(h.twice == std::vector<long long>{2, 2});
    CHECK(h.to_string() == "(1, 1)");
    const HalfVector odd = half_sum({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(odd.twice == std::vector<long long>{3, 4});
    CHECK(odd.to_string() == "(3/2, 2)");
}

TEST_CASE("split F4: counts, ordering and check suite") {
    const auto& rep = f4_report();
    CHECK(rep.algebra_label == "F4");
    CHECK(rep.noncompact_nodes == std::vector<int>{1});
    CHECK(rep.systems.size() == 12);
    CHECK(rep.rows.size() == 46);
    CHECK(rep.counts.total == 46);
    CHECK(rep.counts.discrete_series == 12);
    CHECK(rep.counts.bds == 1);
    CHECK(rep.qx_stable_radius == 7);
    CHECK_FALSE(rep.empty_input_warning);

    // Half sums of the base-system data.
    CHECK(rep.delta_g.twice == std::vector<long long>{16, 30, 42, 22});
    CHECK(rep.delta_g.to_string() == "(8, 15, 21, 11)");
    CHECK(rep.delta_k.twice == std::vector<long long>{2, 9, 14, 8});
    CHECK(rep.delta_k.to_string() == "(1, 9/2, 7, 4)");

    // Rows sorted by (R, key).
    CHECK(std::is_sorted(rep.rows.begin(), rep.rows.end(),
                         [](const ClassRow& a, const ClassRow& b) {
                             return std::tie(a.cls.r_dim, a.cls.key) <
                                    std::tie(b.cls.r_dim, b.cls.key);
                         }));

    // All nine structural checks present and passing.
    REQUIRE(rep.cross_checks.size() == 9);
    std::set<std::string> names;
    for (const auto& c : rep.cross_checks) {
        CHECK(c.passed);
        names.insert(c.name);
    }
    CHECK(rep.all_checks_passed());
    const std::set<std::string> expected{
        "positive_system_count_matches_weyl_index",
        "forbidden_patterns_respected",
        "poincare_polynomial_laws",
        "discrete_series_iff_maximal_r",
        "borel_type_parabolics_biject_with_systems",
        "functional_oracle_matches_classes",
        "blattner_parameters_dominant",
        "every_parabolic_classified",
        "euler_characteristic_total",
    };
    CHECK(names == expected);

    // Euler characteristic over the whole classification.
    long long total = 0;
    for (const auto& row : rep.rows) total += row.poincare.value_at_one();
    CHECK(total == 130);
}

TEST_CASE("split F4: discrete series rows") {
    const auto& rep = f4_report();
    const Root delta{2, 3, 4, 2};

    int ds_rows = 0;
    int bds_rows = 0;
    for (const auto& row : rep.rows) {
        if (!row.discrete_series) {
            CHECK_FALSE(row.ds.has_value());
            CHECK(row.cls.r_dim < 14);
            continue;
        }
        ++ds_rows;
        CHECK(row.cls.r_dim == 14);
        // A discrete series class contributes t^14 and nothing else.
        CHECK(row.poincare == Polynomial::one().shifted(14));
        CHECK(row.compact_dual == Polynomial::one());

        REQUIRE(row.ds.has_value());
        const DiscreteSeriesData& ds = *row.ds;
        // The Harish-Chandra order is a genuine positive system of Delta.
        RootSystem rs(cartan_F4());
        CHECK(is_positive_system(rs, ds.harish_chandra_order));
        CHECK(ds.harish_chandra_order.size() == 24);
        // Its parameter is delta_g of that order; for the key sum we get the
        // lowest K-type weight.
        CHECK(ds.blattner == row.cls.lowest_k_type_weight);
        // Λ + 2δ_k is dominant-regular data; at minimum, Λ is delta-dominant
        // for the compact simple roots.
        if (row.bds) {
            ++bds_rows;
            CHECK(ds.bds_kind == BdsKind::nonhermitian_bds);
            CHECK(ds.blattner == std::vector<long long>{14, 21, 28, 14});
            // The Borel-de Siebenthal class is the one attached to the base
            // positive system: Delta(u∩p) is the full noncompact positive set.
            Coloring col(rs, {0});
            std::vector<Root> dn = col.noncompact_positive();
            std::sort(dn.begin(), dn.end());
            CHECK(row.cls.key == dn);
            std::vector<Root> base = rs.base_positive();
            std::sort(base.begin(), base.end());
            CHECK(ds.harish_chandra_order == base);
        } else {
            CHECK(ds.bds_kind == BdsKind::not_bds);
        }
        // Every key root is noncompact and no ± pair appears.
        std::set<Root> seen;
        for (const Root& r : row.cls.key) {
            CHECK(delta != r);
            CHECK(seen.insert(r).second);
            CHECK_FALSE(seen.count(negated(r)));
        }
    }
    CHECK(ds_rows == 12);
    CHECK(bds_rows == 1);
}

TEST_CASE("split F4: discrete-series predicates on individual classes") {
    const auto& rep = f4_report();
    RootSystem rs(cartan_F4());
    Coloring col(rs, {0});

    const ClassRow& trivial = rep.rows.front();
    REQUIRE(trivial.cls.r_dim == 0);
    CHECK_FALSE(is_discrete_series(rs, col, trivial.cls, rep.systems));
    CHECK_THROWS_AS(
        (void)blattner_parameter(rs, col, trivial.cls, rep.systems),
        NotDiscreteSeriesError);
    CHECK_THROWS_AS(
        (void)is_bds_discrete_series(rs, col, trivial.cls, rep.systems),
        NotDiscreteSeriesError);

    for (const auto& row : rep.rows) {
        CHECK(is_discrete_series(rs, col, row.cls, rep.systems) ==
              (row.cls.r_dim == 14));
        if (row.discrete_series) {
            CHECK(is_bds_discrete_series(rs, col, row.cls, rep.systems) ==
                  row.bds);
            CHECK(blattner_parameter(rs, col, row.cls, rep.systems) ==
                  row.ds->blattner);
        }
    }
}

TEST_CASE("split F4: the classification matches the reference table") {
    const auto& rep = f4_report();
    const std::string golden =
        read_file(std::string(AQCOH_GOLDEN_DIR) + "/f4_split_classes.json");
    CHECK(diff_against_golden(rep, golden).empty());

    // A corrupted reference is reported, not silently accepted.
    std::string bad = golden;
    const std::string needle = "\"total\": 46";
    const auto pos = bad.find(needle);
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, needle.size(), "\"total\": 45");
    CHECK_FALSE(diff_against_golden(rep, bad).empty());

    // Structurally invalid reference data yields messages too.
    CHECK_FALSE(diff_against_golden(rep, "{}").empty());
    CHECK_FALSE(diff_against_golden(rep, "not json").empty());
}

TEST_CASE("su(1,1): the three smallest classes") {
    RootSystem rs(cartan_A(1));
    Coloring col(rs, {0});
    const auto rep = classify_real_form(rs, col, "A1");
    CHECK(rep.counts.total == 3);
    CHECK(rep.counts.discrete_series == 2);
    CHECK(rep.counts.bds == 2);
    CHECK(rep.all_checks_passed());
    CHECK(rep.delta_g.to_string() == "(1/2)");

    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].cls.r_dim == 0);
    CHECK(rep.rows[0].poincare == poly({1, 0, 1}));   // SU(2)/SO(2)
    for (int i : {1, 2}) {
        const auto& row = rep.rows[i];
        CHECK(row.cls.r_dim == 1);
        CHECK(row.poincare == poly({0, 1}));
        CHECK(row.discrete_series);
        CHECK(row.bds);
        REQUIRE(row.ds.has_value());
        CHECK(row.ds->bds_kind == BdsKind::hermitian_bds);
    }
    // The two discrete series take the two sign choices as Blattner data.
    std::set<std::vector<long long>> blattners{rep.rows[1].ds->blattner,
                                               rep.rows[2].ds->blattner};
    CHECK(blattners == std::set<std::vector<long long>>{{1}, {-1}});
}

TEST_CASE("su(2,1): six classes, three discrete series, two Borel type") {
    RootSystem rs(cartan_A(2));
    Coloring col(rs, {0});
    const auto rep = classify_real_form(rs, col, "A2");
    CHECK(rep.counts.total == 6);
    CHECK(rep.counts.discrete_series == 3);
    CHECK(rep.counts.bds == 2);   // one system has two noncompact simples
    CHECK(rep.all_checks_passed());
    // R-profile 0, 1, 1, 2, 2, 2; the holomorphic pair contributes t+t^3.
    std::multiset<int> rs_profile;
    for (const auto& row : rep.rows) rs_profile.insert(row.cls.r_dim);
    CHECK(rs_profile == std::multiset<int>{0, 1, 1, 2, 2, 2});
    CHECK(rep.rows[0].poincare == poly({1, 0, 1, 0, 1}));
    CHECK(rep.rows[1].poincare == poly({0, 1, 0, 1}));
}

TEST_CASE("split G2 as a second non-Hermitian sanity point") {
    RootSystem rs(cartan_G2());
    Coloring col(rs, {1});
    const auto rep = classify_real_form(rs, col, "G2");
    CHECK(rep.counts.total == 6);
    CHECK(rep.counts.discrete_series == 3);
    CHECK(rep.counts.bds == 1);
    CHECK(rep.all_checks_passed());
    // The compact dual of the full group is G2/SO(4): 1 + t^4 + t^8.
    CHECK(rep.rows[0].poincare == poly({1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("assembling a report without classes warns instead of failing") {
    RootSystem rs(cartan_A(1));
    Coloring col(rs, {0});
    WeylGroup w = generate_weyl_group(rs);
    auto systems = enumerate_positive_systems(rs, w, col);
    const auto rep = assemble_report(rs, col, systems, {}, "A1");
    CHECK(rep.empty_input_warning);
    CHECK(rep.counts.total == 0);
    CHECK_FALSE(rep.all_checks_passed());
    REQUIRE(rep.cross_checks.size() == 1);
    CHECK(rep.cross_checks[0].name == "classification_nonempty");
}
