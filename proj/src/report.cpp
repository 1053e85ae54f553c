#include "aqcoh/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "aqcoh/errors.hpp"

namespace aqcoh {

namespace {

using nlohmann::json;

std::string render_positive_combination(const Root& root) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < root.size(); ++i) {
        if (root[i] == 0) continue;
        if (!first) os << "+";
        if (root[i] != 1) os << root[i];
        os << "φ" << (i + 1);
        first = false;
    }
    return os.str();
}

} // namespace

std::string render_root(const Root& root) {
    int nonzero = 0;
    bool negative = false;
    for (int c : root) {
        if (c != 0) {
            ++nonzero;
            negative = c < 0;
        }
    }
    if (nonzero == 0) return "0";
    if (!negative) return render_positive_combination(root);
    const std::string positive = render_positive_combination(negated(root));
    if (nonzero == 1) return "-" + positive;
    return "-(" + positive + ")";
}

std::string render_root_set(const std::vector<Root>& roots) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) os << ", ";
        os << render_root(roots[i]);
    }
    os << "}";
    return os.str();
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw SpecParseError("unknown output format: " + name +
                         " (expected markdown, csv or json)");
}

namespace {

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string noncompact_label(const ClassificationReport& report) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < report.noncompact_nodes.size(); ++i) {
        if (i) os << ", ";
        os << "φ" << report.noncompact_nodes[i];
    }
    os << "}";
    return os.str();
}

json roots_to_json(const std::vector<Root>& roots) {
    json arr = json::array();
    for (const Root& r : roots) arr.push_back(r);
    return arr;
}

// The pinned machine-readable report shape; keys are emitted sorted, so the
// document is byte-stable across runs.
json classification_to_json(const ClassificationReport& report) {
    json doc;
    doc["algebra"] = report.algebra_label;
    doc["positive_systems"] = json::array();
    for (const PositiveSystem& sys : report.systems) {
        json row;
        row["index"] = sys.index;
        row["simple_system"] = roots_to_json(sys.simple_system);
        doc["positive_systems"].push_back(std::move(row));
    }
    doc["classes"] = json::array();
    for (const ClassRow& row : report.rows) {
        json cls;
        cls["key"] = roots_to_json(row.cls.key);
        cls["R"] = row.cls.r_dim;
        cls["levi_type"] = row.levi.type_label;
        cls["poincare"] = row.poincare.coeffs;
        cls["discrete_series"] = row.discrete_series;
        cls["bds"] = row.bds;
        cls["representatives"] = json::array();
        for (const ParabolicDescriptor& d : row.cls.representatives) {
            json rep;
            rep["system"] = d.system_index;
            rep["gamma"] = roots_to_json(d.gamma);
            cls["representatives"].push_back(std::move(rep));
        }
        doc["classes"].push_back(std::move(cls));
    }
    doc["counts"] = {{"total", report.counts.total},
                     {"discrete_series", report.counts.discrete_series},
                     {"bds", report.counts.bds}};
    return doc;
}

} // namespace

std::string render_positive_systems(const ClassificationReport& report,
                                    OutputFormat fmt) {
    const bool any_case =
        std::any_of(report.systems.begin(), report.systems.end(),
                    [](const PositiveSystem& s) { return s.reference_case.has_value(); });
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = report.algebra_label;
        doc["noncompact"] = report.noncompact_nodes;
        doc["counts"] = {{"total", static_cast<int>(report.systems.size())}};
        doc["positive_systems"] = json::array();
        for (const PositiveSystem& sys : report.systems) {
            json row;
            row["index"] = sys.index;
            if (any_case) {
                row["case"] = sys.reference_case ? json(*sys.reference_case) : json();
            }
            row["simple_system"] = roots_to_json(sys.simple_system);
            doc["positive_systems"].push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << (any_case ? "index,case,simple_system" : "index,simple_system") << "\n";
        for (const PositiveSystem& sys : report.systems) {
            os << sys.index << ",";
            if (any_case) {
                if (sys.reference_case) os << *sys.reference_case;
                os << ",";
            }
            os << csv_quote(render_root_set(sys.simple_system)) << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    os << "# Positive systems containing Δ_k^+ — " << report.algebra_label
       << ", noncompact " << noncompact_label(report) << "\n\n";
    os << "δ_g = " << report.delta_g.to_string() << ", δ_k = "
       << report.delta_k.to_string() << "\n\n";
    if (any_case) {
        os << "| # | Case | Simple system Φ |\n|--:|-----:|-----------------|\n";
    } else {
        os << "| # | Simple system Φ |\n|--:|-----------------|\n";
    }
    for (const PositiveSystem& sys : report.systems) {
        os << "| " << sys.index << " | ";
        if (any_case) {
            if (sys.reference_case) os << *sys.reference_case;
            else os << "—";
            os << " | ";
        }
        os << render_root_set(sys.simple_system) << " |\n";
    }
    os << "\n**Total:** " << report.systems.size()
       << " positive system(s) containing the compact positive roots.\n";
    return os.str();
}

std::string render_classification(const ClassificationReport& report,
                                  OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        return classification_to_json(report).dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << "index,system,gamma,key,R,levi_type,poincare,"
              "discrete_series,bds\n";
        int index = 0;
        for (const ClassRow& row : report.rows) {
            const ParabolicDescriptor& rep = row.cls.representatives.front();
            os << ++index << "," << rep.system_index << ","
               << csv_quote(render_root_set(rep.gamma)) << ","
               << csv_quote(render_root_set(row.cls.key)) << ","
               << row.cls.r_dim << "," << csv_quote(row.levi.type_label) << ","
               << csv_quote(row.poincare.expanded_string()) << ","
               << (row.discrete_series ? "true" : "false") << ","
               << (row.bds ? "true" : "false") << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    os << "# Cohomologically induced unitary classes — " << report.algebra_label
       << ", noncompact " << noncompact_label(report) << "\n\n";
    os << "δ_g = " << report.delta_g.to_string() << ", δ_k = "
       << report.delta_k.to_string() << "; " << report.systems.size()
       << " positive system(s) contain Δ_k^+.\n\n";
    if (report.empty_input_warning) {
        os << "**Warning:** no classes were supplied; the table is empty.\n\n";
    }
    os << "| # | Φ | Γ | Δ(u∩p) | R | Levi | P_q(t) | expanded | DS | BdS |\n"
       << "|--:|---|---|--------|--:|------|--------|----------|:--:|:---:|\n";
    int index = 0;
    for (const ClassRow& row : report.rows) {
        const ParabolicDescriptor& rep = row.cls.representatives.front();
        os << "| " << ++index << " | P" << rep.system_index << " | "
           << render_root_set(rep.gamma) << " | " << render_root_set(row.cls.key)
           << " | " << row.cls.r_dim << " | " << row.levi.type_label << " | "
           << row.compact_dual.factored_string(row.cls.r_dim) << " | "
           << row.poincare.expanded_string() << " | "
           << (row.discrete_series ? "✓" : "") << " | " << (row.bds ? "✓" : "")
           << " |\n";
    }
    os << "\n**Totals:** " << report.counts.total << " / "
       << report.counts.discrete_series << " / " << report.counts.bds
       << " (classes / discrete series / Borel–de Siebenthal)\n";
    return os.str();
}

std::string render_checks(const ClassificationReport& report, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = report.algebra_label;
        doc["all_passed"] = report.all_checks_passed();
        doc["checks"] = json::array();
        for (const CheckOutcome& check : report.cross_checks) {
            doc["checks"].push_back({{"name", check.name},
                                     {"passed", check.passed},
                                     {"detail", check.detail}});
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const CheckOutcome& check : report.cross_checks) {
        os << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << " — "
           << check.detail << "\n";
    }
    os << (report.all_checks_passed() ? "All checks passed."
                                      : "Some checks FAILED.")
       << "\n";
    return os.str();
}

std::vector<std::string> diff_against_golden(const ClassificationReport& report,
                                             const std::string& golden_json) {
    std::vector<std::string> mismatches;
    json golden;
    try {
        golden = json::parse(golden_json);
    } catch (const json::parse_error& e) {
        mismatches.push_back(std::string("golden file is not valid JSON: ") + e.what());
        return mismatches;
    }
    if (!golden.is_object() || !golden.contains("classes") ||
        !golden.at("classes").is_array()) {
        mismatches.push_back("golden file has no \"classes\" array");
        return mismatches;
    }

    const auto key_of = [](const json& arr) {
        std::vector<Root> key;
        for (const auto& r : arr) key.push_back(r.get<Root>());
        std::sort(key.begin(), key.end());
        return key;
    };
    std::map<std::vector<Root>, const ClassRow*> by_key;
    for (const ClassRow& row : report.rows) by_key[row.cls.key] = &row;

    std::size_t matched = 0;
    for (const auto& entry : golden.at("classes")) {
        std::string who = "golden class";
        if (entry.contains("case")) {
            who += " " + entry.at("case").dump();
        }
        if (!entry.contains("key")) {
            mismatches.push_back(who + " has no \"key\"");
            continue;
        }
        const std::vector<Root> key = key_of(entry.at("key"));
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            mismatches.push_back(who + " (key " + render_root_set(key) +
                                 ") has no computed counterpart");
            continue;
        }
        ++matched;
        const ClassRow& row = *it->second;
        if (entry.contains("R") && entry.at("R").get<int>() != row.cls.r_dim) {
            mismatches.push_back(who + ": R " + entry.at("R").dump() + " != computed " +
                                 std::to_string(row.cls.r_dim));
        }
        if (entry.contains("poincare")) {
            const auto coeffs = entry.at("poincare").get<std::vector<long long>>();
            if (coeffs != row.poincare.coeffs) {
                Polynomial expected{coeffs};
                mismatches.push_back(who + ": P_q " + expected.expanded_string() +
                                     " != computed " + row.poincare.expanded_string());
            }
        }
        if (entry.contains("discrete_series") &&
            entry.at("discrete_series").get<bool>() != row.discrete_series) {
            mismatches.push_back(who + ": discrete_series flag differs");
        }
        if (entry.contains("bds") && entry.at("bds").get<bool>() != row.bds) {
            mismatches.push_back(who + ": bds flag differs");
        }
        if (entry.contains("levi_type") &&
            entry.at("levi_type").get<std::string>() != row.levi.type_label) {
            mismatches.push_back(who + ": levi_type \"" +
                                 entry.at("levi_type").get<std::string>() +
                                 "\" != computed \"" + row.levi.type_label + "\"");
        }
    }
    if (matched != report.rows.size()) {
        mismatches.push_back("golden file covers " + std::to_string(matched) +
                             " classes but the computation produced " +
                             std::to_string(report.rows.size()));
    }
    if (golden.contains("counts")) {
        const auto& counts = golden.at("counts");
        const auto check_count = [&](const char* name, int computed) {
            if (counts.contains(name) && counts.at(name).get<int>() != computed) {
                mismatches.push_back(std::string("counts.") + name + " " +
                                     counts.at(name).dump() + " != computed " +
                                     std::to_string(computed));
            }
        };
        check_count("total", report.counts.total);
        check_count("discrete_series", report.counts.discrete_series);
        check_count("bds", report.counts.bds);
    }
    return mismatches;
}

} // namespace aqcoh
