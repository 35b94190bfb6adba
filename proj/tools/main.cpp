#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/enumerate.hpp"
#include "ulrich/io.hpp"
#include "ulrich/verify.hpp"
#include "ulrich/weyl.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // domain-level negative, e.g. --expect-ulrich unmet
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }

    void write(const json& j) const { write(j.dump(2)); }
};

int64_t env_cap(const char* name, int64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoll(v, nullptr, 10);
}

ulrich::DivisorClass parse_class_arg(const std::string& text) {
    return ulrich::parse_divisor_class(text);  // invalid_argument names the grammar
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Ulrich bundle first Chern class calculator for the nonsingular cubic surface.\n"
        "Classes are written a;b1,...,b6 (quote the argument in a shell), e.g. \"4;2,1,1,1,1,0\"."};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::string cls_text, format = "json";
    int64_t rank = 2;
    bool expect_ulrich = false;

    auto* classify_cmd = app.add_subcommand("classify", "full report for a class at a given rank");
    classify_cmd->add_option("class", cls_text, "divisor class a;b1,...,b6")->required();
    classify_cmd->add_option("-r,--rank", rank, "bundle rank")->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
    classify_cmd->add_flag("--expect-ulrich", expect_ulrich,
                           "exit 1 when the class is not Ulrich for this rank");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "write the class as a sum of twisted cubic classes");
    decompose_cmd->add_option("class", cls_text)->required();
    decompose_cmd->add_option("-r,--rank", rank)->required();

    auto* standard_cmd =
        app.add_subcommand("standard-form", "reduce to standard form, printing the move trace");
    standard_cmd->add_option("class", cls_text)->required();

    bool count_only = false;
    auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a class");
    orbit_cmd->add_option("class", cls_text)->required();
    orbit_cmd->add_flag("--count-only", count_only, "print only the orbit size");

    std::string which_catalog;
    auto* catalog_cmd = app.add_subcommand("catalog", "dump the line or twisted cubic catalog");
    catalog_cmd->add_option("which", which_catalog, "lines|cubics")
        ->required()
        ->check(CLI::IsMember({"lines", "cubics"}));
    catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

    bool all_classes = false;
    std::string table_format = "md";
    auto* table_cmd = app.add_subcommand("table", "classification table for a rank");
    table_cmd->add_option("-r,--rank", rank)->required();
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "md", "csv"}));
    table_cmd->add_flag("--all-degree-classes", all_classes,
                        "keep classes outside the line bounds (rank >= 3)");

    std::string suite = "all";
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"condD", "propalg", "uniqueness", "cor48", "dims", "decompose", "all"}));
    verify_cmd->add_flag("--json", verify_json, "emit certificates as JSON");

    auto* threefold_cmd =
        app.add_subcommand("threefold", "dimension counts for Ulrich bundles on cubic threefolds");
    threefold_cmd->add_option("-r,--rank", rank)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out{out_path};
    try {
        if (*classify_cmd) {
            auto report = ulrich::classify(parse_class_arg(cls_text), rank);
            if (format == "md")
                out.write(ulrich::report_to_markdown(report));
            else
                out.write(ulrich::to_json(report));
            if (expect_ulrich && !report.is_ulrich) return kExitNegative;
        } else if (*decompose_cmd) {
            auto d = parse_class_arg(cls_text);
            auto parts = ulrich::decompose(d, rank);
            json j{{"input", ulrich::to_json(d)},
                   {"standard", ulrich::to_json(ulrich::standard_form(d))},
                   {"rank", rank}};
            if (parts) {
                json arr = json::array();
                for (const auto& t : *parts) arr.push_back(ulrich::to_json(t));
                j["parts"] = arr;
                j["label"] = ulrich::decomposition_label(*parts);
            } else {
                j["parts"] = nullptr;
            }
            out.write(j);
            if (!parts) return kExitNegative;
        } else if (*standard_cmd) {
            out.write(ulrich::to_json(ulrich::to_standard_form(parse_class_arg(cls_text))));
        } else if (*orbit_cmd) {
            auto orbit = ulrich::weyl_orbit(parse_class_arg(cls_text));
            if (count_only) {
                out.write(std::to_string(orbit.size()));
            } else {
                json arr = json::array();
                for (const auto& d : orbit) arr.push_back(ulrich::to_string(d));
                out.write(json{{"size", orbit.size()}, {"classes", arr}});
            }
        } else if (*catalog_cmd) {
            if (format == "md") {
                std::string text;
                if (which_catalog == "lines")
                    for (const auto& l : ulrich::all_lines())
                        text += "- " + l.label + " = (" + ulrich::to_string(l.cls) + ")\n";
                else
                    for (const auto& t : ulrich::all_twisted_cubics())
                        text += "- " + t.label + " = (" + ulrich::to_string(t.cls) + ")\n";
                out.write(text);
            } else {
                json arr = json::array();
                if (which_catalog == "lines")
                    for (const auto& l : ulrich::all_lines()) arr.push_back(ulrich::to_json(l));
                else
                    for (const auto& t : ulrich::all_twisted_cubics())
                        arr.push_back(ulrich::to_json(t));
                out.write(arr);
            }
        } else if (*table_cmd) {
            auto rows = ulrich::ulrich_table(rank, all_classes);
            if (table_format == "md")
                out.write(ulrich::table_to_markdown(rows));
            else if (table_format == "csv")
                out.write(ulrich::table_to_csv(rows));
            else {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(ulrich::to_json(r));
                out.write(arr);
            }
        } else if (*verify_cmd) {
            std::vector<ulrich::VerificationCertificate> certs;
            auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
            if (want("condD"))
                certs.push_back(ulrich::check_condD(env_cap("ULRICH_VERIFY_CONDD_MAX_RANK", 4)));
            if (want("propalg"))
                certs.push_back(
                    ulrich::check_propalg(env_cap("ULRICH_VERIFY_PROPALG_MAX_DEGREE", 21)));
            if (want("uniqueness"))
                certs.push_back(ulrich::check_standard_uniqueness(
                    static_cast<int>(env_cap("ULRICH_VERIFY_RANDOM_COUNT", 100))));
            if (want("cor48"))
                certs.push_back(ulrich::check_cor48(env_cap("ULRICH_VERIFY_COR48_MAX_M", 4)));
            if (want("dims"))
                certs.push_back(
                    ulrich::check_dimension_claims(env_cap("ULRICH_VERIFY_DIMS_MAX_DEGREE", 15)));
            if (want("decompose"))
                certs.push_back(ulrich::check_decompose_agreement(
                    env_cap("ULRICH_VERIFY_DECOMPOSE_MAX_DEGREE", 12)));
            bool all_passed = true;
            if (verify_json) {
                json arr = json::array();
                for (const auto& c : certs) arr.push_back(ulrich::to_json(c));
                out.write(arr);
            } else {
                std::string text;
                for (const auto& c : certs) text += ulrich::certificate_to_markdown(c);
                out.write(text);
            }
            for (const auto& c : certs) all_passed = all_passed && c.passed;
            if (!all_passed) return kExitVerifyFailed;
        } else if (*threefold_cmd) {
            out.write(ulrich::to_json(ulrich::threefold_numbers(rank)));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
