#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqcoh/cohomology.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;   // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(AQCOH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() /
                      ("aqcoh_cli_test_" + name);
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kGolden =
    std::string(AQCOH_GOLDEN_DIR) + "/f4_split_classes.json";

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, '|')) {
        // Trim surrounding spaces.
        const auto first = cell.find_first_not_of(' ');
        if (first == std::string::npos) {
            cells.push_back("");
        } else {
            const auto last = cell.find_last_not_of(' ');
            cells.push_back(cell.substr(first, last - first + 1));
        }
    }
    return cells;
}

} // namespace

TEST_CASE("positive-systems: twelve rows and a total") {
    const RunResult r =
        run_cli("--algebra F4 --noncompact 1 positive-systems");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("| 12 |") != std::string::npos);
    CHECK(r.output.find("**Total:** 12 positive system(s)") != std::string::npos);
    CHECK(r.output.find("δ_g = (8, 15, 21, 11)") != std::string::npos);
    // Case column covers 1..12.
    std::set<int> cases;
    std::istringstream in(r.output);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("| ", 0) != 0) continue;
        const auto cells = split_row(line);
        if (cells.size() < 4 || cells[1] == "#" || cells[1].empty()) continue;
        cases.insert(std::stoi(cells[2]));
    }
    CHECK(cases == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("classify: markdown table with the headline counts") {
    const RunResult r = run_cli("--algebra F4 --noncompact 1 classify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("**Totals:** 46 / 12 / 1 "
                        "(classes / discrete series / Borel–de Siebenthal)") !=
          std::string::npos);
    CHECK(r.output.find("12 positive system(s) contain Δ_k^+") !=
          std::string::npos);
    // 12 discrete-series ticks in the DS column, 13 ticks overall
    // (12 DS + 1 BdS).
    CHECK(count_occurrences(r.output, "✓") == 13);
}

TEST_CASE("classify: JSON schema and reference counts") {
    const RunResult r =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);

    CHECK(doc.at("algebra") == "F4");
    CHECK(doc.at("counts").at("total") == 46);
    CHECK(doc.at("counts").at("discrete_series") == 12);
    CHECK(doc.at("counts").at("bds") == 1);
    CHECK(doc.at("positive_systems").size() == 12);
    REQUIRE(doc.at("classes").size() == 46);

    for (const auto& cls : doc.at("classes")) {
        CHECK(cls.at("R").get<int>() ==
              static_cast<int>(cls.at("key").size()));
        const auto poincare = cls.at("poincare").get<std::vector<long long>>();
        // Dense coefficients, already shifted: degree-0 entry is zero unless
        // R = 0, and the lowest nonzero entry sits at exactly R.
        int lowest = -1;
        for (std::size_t i = 0; i < poincare.size(); ++i) {
            if (poincare[i] != 0) {
                lowest = static_cast<int>(i);
                break;
            }
        }
        CHECK(lowest == cls.at("R").get<int>());
        CHECK(cls.at("discrete_series").is_boolean());
        CHECK(cls.at("bds").is_boolean());
        REQUIRE(!cls.at("representatives").empty());
        for (const auto& rep : cls.at("representatives")) {
            const int sys = rep.at("system").get<int>();
            CHECK(sys >= 1);
            CHECK(sys <= 12);
            CHECK(rep.at("gamma").is_array());
        }
    }

    // The empty-key class carries the split-F4 dual polynomial.
    const auto& first = doc.at("classes").at(0);
    CHECK(first.at("key").empty());
    CHECK(first.at("poincare") ==
          json::parse("[1,0,0,0,1,0,0,0,2,0,0,0,2,0,0,0,2,0,0,0,2,0,0,0,1,0,0,0,1]"));
}

TEST_CASE("classify: byte-identical across runs") {
    const RunResult a =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    const RunResult b =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    // Option order and placement do not matter.
    const RunResult c =
        run_cli("--format json --algebra F4 --noncompact 1 classify");
    CHECK(c.output == a.output);
}

TEST_CASE("classify: markdown and JSON carry the same numbers") {
    const RunResult md = run_cli("--algebra F4 --noncompact 1 classify");
    const RunResult js =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    REQUIRE(md.exit_code == 0);
    REQUIRE(js.exit_code == 0);

    // Pull (R, expanded polynomial, DS, BdS) out of the markdown table.
    std::multiset<std::string> md_rows;
    std::istringstream in(md.output);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("| ", 0) != 0) continue;
        const auto cells = split_row(line);
        if (cells.size() < 11 || cells[1] == "#" || cells[1].empty()) continue;
        md_rows.insert(cells[5] + "|" + cells[8] + "|" +
                       (cells[9] == "✓" ? "1" : "0") + "|" +
                       (cells[10] == "✓" ? "1" : "0"));
    }

    std::multiset<std::string> js_rows;
    const json doc = json::parse(js.output);
    for (const auto& cls : doc.at("classes")) {
        aqcoh::Polynomial p;
        p.coeffs = cls.at("poincare").get<std::vector<long long>>();
        js_rows.insert(std::to_string(cls.at("R").get<int>()) + "|" +
                       p.expanded_string() + "|" +
                       (cls.at("discrete_series").get<bool>() ? "1" : "0") +
                       "|" + (cls.at("bds").get<bool>() ? "1" : "0"));
    }
    CHECK(md_rows.size() == 46);
    CHECK(md_rows == js_rows);
}

TEST_CASE("classify: CSV layout") {
    const RunResult r =
        run_cli("--algebra F4 --noncompact 1 classify --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "index,system,gamma,key,R,levi_type,poincare,discrete_series,bds");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 46);
    CHECK(r.output.find(",14,C3×T^1,t^14,true,true") != std::string::npos);
}

TEST_CASE("check: all nine validations pass") {
    const RunResult r = run_cli("--algebra F4 --noncompact 1 check");
    CHECK(r.exit_code == 0);
    CHECK(count_occurrences(r.output, "[PASS]") == 9);
    CHECK(count_occurrences(r.output, "[FAIL]") == 0);
    CHECK(r.output.find("All checks passed.") != std::string::npos);
}

TEST_CASE("check --golden: agreement with the reference table") {
    const RunResult r =
        run_cli("--algebra F4 --noncompact 1 check --golden " + kGolden);
    CHECK(r.exit_code == 0);
    CHECK(count_occurrences(r.output, "[PASS]") == 10);
    CHECK(r.output.find("golden_comparison") != std::string::npos);

    // JSON rendering of the same run.
    const RunResult js = run_cli(
        "--algebra F4 --noncompact 1 check --format json --golden " + kGolden);
    CHECK(js.exit_code == 0);
    const json doc = json::parse(js.output);
    CHECK(doc.at("all_passed") == true);
    CHECK(doc.at("checks").size() == 10);
}

TEST_CASE("check --golden: a corrupted reference fails with exit 1") {
    std::string bad = read_file(kGolden);
    const std::string needle = "\"discrete_series\": true";
    const auto pos = bad.find(needle);
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, needle.size(), "\"discrete_series\": false");
    const auto path = temp_file("corrupted_golden.json", bad);

    const RunResult r = run_cli("--algebra F4 --noncompact 1 check --golden " +
                                path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL] golden_comparison") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() /
                      "aqcoh_cli_test_out.json";
    std::filesystem::remove(path);
    const RunResult r = run_cli(
        "--algebra F4 --noncompact 1 classify --format json --out " +
        path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    const RunResult direct =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    CHECK(read_file(path) == direct.output);
    std::filesystem::remove(path);
}

TEST_CASE("algebra specs from files behave like named algebras") {
    const auto named = temp_file("spec_named.json",
                                 R"({"type": "F4", "noncompact": [1]})");
    const RunResult a =
        run_cli("--cartan " + named.string() + " classify --format json");
    const RunResult b =
        run_cli("--algebra F4 --noncompact 1 classify --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    std::filesystem::remove(named);

    // Explicit matrices work and honour the label.
    const auto custom = temp_file(
        "spec_custom.json",
        R"({"cartan": [[2, -1], [-1, 2]], "noncompact": [1], "label": "rank2"})");
    const RunResult c =
        run_cli("--cartan " + custom.string() + " classify --format json");
    CHECK(c.exit_code == 0);
    const json doc = json::parse(c.output);
    CHECK(doc.at("algebra") == "rank2");
    CHECK(doc.at("counts").at("total") == 6);
    std::filesystem::remove(custom);
}

TEST_CASE("small split forms through the CLI") {
    const RunResult a1 =
        run_cli("--algebra A1 --noncompact 1 classify --format json");
    REQUIRE(a1.exit_code == 0);
    const json doc = json::parse(a1.output);
    CHECK(doc.at("counts").at("total") == 3);
    CHECK(doc.at("counts").at("discrete_series") == 2);
    CHECK(doc.at("counts").at("bds") == 2);

    // Comma-separated multi-node colorings parse.
    const RunResult multi =
        run_cli("--algebra A2 --noncompact 1,2 check");
    CHECK(multi.exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("--algebra F4 --noncompact 1").exit_code == 2);   // no subcommand
    CHECK(run_cli("--algebra F4 --noncompact 1 classify --format yaml").exit_code == 2);
    CHECK(run_cli("--algebra F4 --noncompact 1 classify --bogus").exit_code == 2);
    CHECK(run_cli("--algebra E6 --noncompact 1 classify").exit_code == 2);
    CHECK(run_cli("--algebra Q3 --noncompact 1 classify").exit_code == 2);
    CHECK(run_cli("--algebra F4 classify").exit_code == 2);          // no noncompact
    CHECK(run_cli("--algebra F4 --noncompact 9 classify").exit_code == 2);
    CHECK(run_cli("--cartan /nonexistent/path.json --noncompact 1 classify")
              .exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);   // no algebra at all
    CHECK(run_cli("--algebra F4 --noncompact 1 check --golden /nonexistent.json")
              .exit_code == 2);

    const auto malformed = temp_file("spec_malformed.json", "{not json");
    CHECK(run_cli("--cartan " + malformed.string() + " --noncompact 1 classify")
              .exit_code == 2);
    std::filesystem::remove(malformed);

    const auto affine = temp_file(
        "spec_affine.json", R"({"cartan": [[2, -2], [-2, 2]], "noncompact": [1]})");
    CHECK(run_cli("--cartan " + affine.string() + " classify").exit_code == 2);
    std::filesystem::remove(affine);

    // Mutually exclusive input modes.
    const auto named = temp_file("spec_excl.json",
                                 R"({"type": "F4", "noncompact": [1]})");
    CHECK(run_cli("--algebra F4 --cartan " + named.string() +
                  " --noncompact 1 classify")
              .exit_code == 2);
    std::filesystem::remove(named);
}

TEST_CASE("--help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("positive-systems") != std::string::npos);
    CHECK(r.output.find("classify") != std::string::npos);
    CHECK(r.output.find("check") != std::string::npos);
}
