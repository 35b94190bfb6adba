#include "ulrich/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace ulrich {

using nlohmann::json;

namespace {

json opt_json(const std::optional<int64_t>& v) {
    if (v) return *v;
    return nullptr;
}

std::string opt_cell(const std::optional<int64_t>& v) {
    return v ? std::to_string(*v) : "-";
}

}  // namespace

json to_json(const DivisorClass& d) {
    return json{{"a", d.a}, {"b", d.b}};
}

json to_json(const LineClass& l) {
    return json{{"label", l.label}, {"class", to_json(l.cls)}, {"text", to_string(l.cls)}};
}

json to_json(const TwistedCubicClass& t) {
    return json{{"family", std::string(1, family_letter(t.family))},
                {"label", t.label},
                {"class", to_json(t.cls)},
                {"text", to_string(t.cls)}};
}

json to_json(const ReductionTrace& trace) {
    json moves = json::array();
    for (const auto& m : trace.moves) {
        if (m.kind == WeylMove::Kind::SortB)
            moves.push_back(json{{"kind", "sort"}, {"perm", m.perm}});
        else
            moves.push_back(json{{"kind", "cremona"}, {"i", m.i + 1}, {"j", m.j + 1}, {"k", m.k + 1}});
    }
    return json{{"input", to_json(trace.input)},
                {"moves", moves},
                {"output", to_json(trace.output)},
                {"output_text", to_string(trace.output)}};
}

json to_json(const UlrichReport& r) {
    json j{{"input", to_json(r.input)},
           {"standard", to_json(r.standard)},
           {"rank", r.rank},
           {"degree_ok", r.degree_ok},
           {"line_min", r.line_min},
           {"line_max", r.line_max},
           {"cubic_min", r.cubic_min},
           {"is_ulrich", r.is_ulrich},
           {"stable", r.stable},
           {"is_mD0", opt_json(r.is_mD0)},
           {"c2", opt_json(r.c2)},
           {"moduli_dim", opt_json(r.moduli_dim)},
           {"polystable_dim", opt_json(r.polystable_dim)}};
    if (r.decomposition) {
        json parts = json::array();
        for (const auto& t : *r.decomposition) parts.push_back(to_json(t));
        j["decomposition"] = parts;
    } else {
        j["decomposition"] = nullptr;
    }
    return j;
}

json to_json(const TableRow& row) {
    return json{{"class", to_json(row.cls)},
                {"text", to_string(row.cls)},
                {"D2", row.d2},
                {"decomposition", row.decomposition_label},
                {"ulrich", row.is_ulrich},
                {"stable", row.stable},
                {"dim", row.dim_formula},
                {"polystable_dim", opt_json(row.polystable_dim)},
                {"ss_simple_dim", opt_json(row.simple_ss_dim)}};
}

json to_json(const VerificationCertificate& cert) {
    return json{{"suite", cert.suite},
                {"domain_size", cert.domain_size},
                {"passed", cert.passed},
                {"counterexamples", cert.counterexamples},
                {"runtime_ms", cert.runtime_ms},
                {"notes", cert.notes}};
}

json to_json(const ThreefoldNumbers& n) {
    return json{{"moduli_dim", n.moduli_dim},
                {"ext_dim", n.ext_dim},
                {"extension_family_dim", n.extension_family_dim},
                {"h0", n.h0}};
}

std::string table_to_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "| D | D^2 | decomposition | ulrich | stable | dim | polystable_dim | ss_simple_dim |\n";
    out << "|---|-----|---------------|--------|--------|-----|----------------|---------------|\n";
    for (const auto& r : rows) {
        out << "| (" << to_string(r.cls) << ") | " << r.d2 << " | "
            << (r.decomposition_label.empty() ? "-" : r.decomposition_label) << " | "
            << (r.is_ulrich ? "yes" : "no") << " | " << (r.stable ? "yes" : "no") << " | "
            << r.dim_formula << " | " << opt_cell(r.polystable_dim) << " | "
            << opt_cell(r.simple_ss_dim) << " |\n";
    }
    return out.str();
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "D,D2,decomposition,ulrich,stable,dim,polystable_dim,ss_simple_dim\n";
    for (const auto& r : rows) {
        out << '"' << to_string(r.cls) << "\"," << r.d2 << ","
            << r.decomposition_label << "," << (r.is_ulrich ? "true" : "false") << ","
            << (r.stable ? "true" : "false") << "," << r.dim_formula << ","
            << opt_cell(r.polystable_dim) << "," << opt_cell(r.simple_ss_dim) << "\n";
    }
    return out.str();
}

std::string report_to_markdown(const UlrichReport& r) {
    std::ostringstream out;
    out << "# Class (" << to_string(r.input) << "), rank " << r.rank << "\n\n";
    out << "- standard form: (" << to_string(r.standard) << ")\n";
    out << "- degree " << (r.degree_ok ? "== 3r" : "!= 3r") << "; D.L in [" << r.line_min << ", "
        << r.line_max << "]; min D.T = " << r.cubic_min << "\n";
    out << "- Ulrich: " << (r.is_ulrich ? "yes" : "no") << "\n";
    if (r.decomposition) {
        out << "- decomposition:";
        for (const auto& t : *r.decomposition) out << " " << t.label << "(" << to_string(t.cls) << ")";
        out << "\n";
    }
    out << "- stable: " << (r.stable ? "yes" : "no");
    if (r.is_mD0) out << " (class is " << *r.is_mD0 << "*D0)";
    out << "\n";
    if (r.c2) out << "- c2 = " << *r.c2 << "\n";
    if (r.moduli_dim) out << "- moduli dim = " << *r.moduli_dim << "\n";
    if (r.polystable_dim) out << "- polystable family dim = " << *r.polystable_dim << "\n";
    return out.str();
}

std::string certificate_to_markdown(const VerificationCertificate& cert) {
    std::ostringstream out;
    out << "## " << cert.suite << ": " << (cert.passed ? "PASS" : "FAIL") << " ("
        << cert.domain_size << " cases, " << cert.runtime_ms << " ms)\n";
    for (const auto& n : cert.notes) out << "- " << n << "\n";
    for (const auto& c : cert.counterexamples) out << "- counterexample: " << c << "\n";
    return out.str();
}

}  // namespace ulrich
