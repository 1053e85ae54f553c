// aqcoh — classify irreducible unitary representations with nonzero relative
// Lie algebra cohomology for an equal-rank real form given by a Cartan matrix
// and a choice of noncompact simple roots.
//
//   aqcoh --algebra F4 --noncompact 1 classify
//   aqcoh --cartan my_algebra.json --noncompact 2 positive-systems --format csv
//   aqcoh --algebra F4 --noncompact 1 check --golden expected.json

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqcoh/algebra_spec.hpp"
#include "aqcoh/classification.hpp"
#include "aqcoh/errors.hpp"
#include "aqcoh/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw aqcoh::SpecParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw aqcoh::SpecParseError("cannot open output file: " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of unitary representations with nonzero "
                 "relative Lie algebra cohomology"};
    app.require_subcommand(1);

    std::string algebra_name;
    std::string cartan_path;
    std::vector<int> noncompact;
    std::string format_name = "markdown";
    std::string out_path;
    std::string golden_path;

    auto* algebra_opt =
        app.add_option("--algebra", algebra_name,
                       "Named type: A1..A8, B2..B8, C2..C8, D3..D8, G2, F4");
    auto* cartan_opt =
        app.add_option("--cartan", cartan_path,
                       "JSON file with {\"type\": ...} or {\"cartan\": [[...]]}")
            ->check(CLI::ExistingFile);
    algebra_opt->excludes(cartan_opt);
    cartan_opt->excludes(algebra_opt);
    app.add_option("--noncompact", noncompact,
                   "1-based indices of the noncompact simple roots")
        ->delimiter(',');
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    app.add_option("--out", out_path, "Write the report to a file instead of stdout");

    CLI::App* cmd_positive =
        app.add_subcommand("positive-systems",
                           "List the positive systems containing Δ_k^+");
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "Full classification with Poincaré polynomials");
    CLI::App* cmd_check =
        app.add_subcommand("check", "Run the cross-check suite (exit 1 on failure)");
    cmd_check->add_option("--golden", golden_path,
                          "JSON file of expected classes to compare against")
        ->check(CLI::ExistingFile);
    // --format/--out may be given after the subcommand as well as before it.
    for (CLI::App* cmd : {cmd_positive, cmd_classify, cmd_check}) {
        cmd->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        aqcoh::AlgebraSpec spec = [&] {
            if (!algebra_name.empty()) {
                return aqcoh::make_named_spec(algebra_name, noncompact);
            }
            if (!cartan_path.empty()) {
                return aqcoh::parse_algebra_spec_json(read_file(cartan_path), noncompact);
            }
            throw aqcoh::SpecParseError("one of --algebra or --cartan is required");
        }();
        const aqcoh::OutputFormat format = aqcoh::parse_output_format(format_name);

        const aqcoh::RootSystem rs(spec.cartan);
        std::vector<int> nodes(spec.noncompact_nodes.begin(),
                               spec.noncompact_nodes.end());
        const aqcoh::Coloring coloring(rs, nodes);
        const aqcoh::ClassificationReport report =
            aqcoh::classify_real_form(rs, coloring, spec.label);

        if (cmd_positive->parsed()) {
            emit(aqcoh::render_positive_systems(report, format), out_path);
            return 0;
        }
        if (cmd_classify->parsed()) {
            emit(aqcoh::render_classification(report, format), out_path);
            return 0;
        }
        if (cmd_check->parsed()) {
            aqcoh::ClassificationReport checked = report;
            if (!golden_path.empty()) {
                const std::vector<std::string> diffs =
                    aqcoh::diff_against_golden(report, read_file(golden_path));
                std::ostringstream os;
                if (diffs.empty()) {
                    os << "matches " << golden_path;
                } else {
                    os << diffs.size() << " mismatch(es): ";
                    for (std::size_t i = 0; i < diffs.size(); ++i) {
                        if (i) os << "; ";
                        os << diffs[i];
                    }
                }
                checked.cross_checks.push_back(
                    aqcoh::CheckOutcome{"golden_comparison", diffs.empty(), os.str()});
            }
            emit(aqcoh::render_checks(checked, format), out_path);
            return checked.all_checks_passed() ? 0 : 1;
        }
        return 2; // unreachable: a subcommand is required
    } catch (const aqcoh::SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const aqcoh::InvalidCartanMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const aqcoh::NotFiniteTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const aqcoh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
