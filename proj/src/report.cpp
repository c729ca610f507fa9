#include "oracle_lens/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "oracle_lens/errors.hpp"

namespace oracle_lens {

namespace {

std::string k_text_of(std::uint64_t k_index, std::size_t n) {
    return HiddenString::from_index(k_index, n).text();
}

HiddenString parse_k(const RunConfig& cfg) {
    if (!cfg.k_text) throw UsageError("this command requires --k");
    HiddenString k = [&] {
        try {
            return HiddenString::from_text(*cfg.k_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("invalid --k: ") + e.what());
        }
    }();
    if (cfg.n != 0 && k.size() != cfg.n) {
        throw UsageError("--k length " + std::to_string(k.size()) + " does not match --n " +
                         std::to_string(cfg.n));
    }
    return k;
}

std::size_t require_n(const RunConfig& cfg) {
    if (cfg.n == 0) throw UsageError("this command requires --n >= 1");
    return cfg.n;
}

GateSet resolve_gate_set(const RunConfig& cfg) {
    if (cfg.gate_set == "IH") return ih_gate_set();
    if (cfg.gate_set == "clifford") return clifford_gate_set();
    if (cfg.basis && (cfg.gate_set == "config" || cfg.gate_set == cfg.basis->name)) {
        GateSet set;
        for (const auto& [name, gate] : cfg.basis->gates) {
            set.names.push_back(name);
            set.gates.push_back(gate);
        }
        return set;
    }
    throw UsageError("unknown --gate-set '" + cfg.gate_set +
                     "' (expected IH, clifford, or a loaded basis-config name)");
}

std::string join_names(const std::vector<std::string>& names, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += sep;
        out += names[i];
    }
    return out;
}

ReportDocument run_bv(const RunConfig& cfg) {
    const std::size_t n = require_n(cfg);
    const HiddenString k = parse_k(cfg);
    const BVRunResult run = bv_quantum_run(n, k, cfg.qubit_cap);

    ReportDocument doc;
    doc.command = "bv";
    doc.params = {{"n", n}, {"k", k.text()}};
    doc.results = {{"recovered", run.recovered.text()},
                   {"probability", run.probability},
                   {"queries_used", run.queries_used}};
    doc.engine_stats = {{"qubits", n + 1}, {"dim", std::size_t{1} << (n + 1)}};
    return doc;
}

ReportDocument run_complexity(const RunConfig& cfg) {
    const std::size_t n = require_n(cfg);
    const FamilyKind kind = family_kind_from_name(cfg.family);
    const OracleFamily family = build_family(kind, n);
    const QueryComplexityReport report = min_adaptive_queries(family, cfg.complexity_cap, cfg.witness);

    ReportDocument doc;
    doc.command = "complexity";
    doc.params = {{"family", cfg.family}, {"n", n}, {"witness", cfg.witness}};
    doc.results["family"] = cfg.family;
    doc.results["n"] = n;
    doc.results["identifiable"] = report.identifiable;
    if (report.identifiable) {
        doc.results["value"] = report.depth;
        if (cfg.witness && report.witness) {
            doc.results["witness"] = witness_to_json(*report.witness, n);
        }
    } else {
        doc.results["value"] = "unidentifiable";
    }
    doc.engine_stats = {{"states_explored", report.states_explored}};
    if (n == 1 && kind == FamilyKind::Bob) {
        doc.warnings.push_back("for n=1 the bob family coincides with the alice family");
    }
    return doc;
}

ReportDocument run_equivalence(const RunConfig& cfg) {
    const std::size_t n = require_n(cfg);
    const FamilyKind left = family_kind_from_name(cfg.left);
    const FamilyKind right = family_kind_from_name(cfg.right);
    const CompareMode mode = cfg.up_to_phase ? CompareMode::Phase : CompareMode::Strict;

    ReportDocument doc;
    doc.command = "equivalence";
    doc.params = {{"left", cfg.left},
                  {"right", cfg.right},
                  {"n", n},
                  {"up_to_phase", cfg.up_to_phase},
                  {"tol", cfg.tol}};
    nlohmann::json per_k = nlohmann::json::array();
    nlohmann::json equal_set = nlohmann::json::array();
    bool all_equal = true;
    for (std::uint64_t ki = 0; ki < (std::uint64_t{1} << n); ++ki) {
        const HiddenString k = HiddenString::from_index(ki, n);
        const bool eq = equals(quantum_oracle_for_kind(left, n, k),
                               quantum_oracle_for_kind(right, n, k), cfg.tol, mode);
        per_k.push_back({{"k", k.text()}, {"equal", eq}});
        if (eq) {
            equal_set.push_back(k.text());
        } else {
            all_equal = false;
        }
    }
    doc.results = {{"left", cfg.left},
                   {"right", cfg.right},
                   {"per_k", per_k},
                   {"equal_k", equal_set},
                   {"all_equal", all_equal}};
    doc.engine_stats = {{"comparisons", std::size_t{1} << n}};
    if (n == 1 && (left == FamilyKind::Bob || right == FamilyKind::Bob)) {
        doc.warnings.push_back(
            "for n=1 bob's basis assignment coincides with alice's all-Hadamard assignment");
    }
    return doc;
}

ReportDocument run_scan(const RunConfig& cfg) {
    const std::size_t n = require_n(cfg);
    const FamilyKind kind = family_kind_from_name(cfg.family);
    const GateSet gate_set = resolve_gate_set(cfg);

    std::vector<ComplexMatrix> units;
    units.reserve(std::size_t{1} << n);
    for (std::uint64_t ki = 0; ki < (std::uint64_t{1} << n); ++ki) {
        units.push_back(quantum_oracle_for_kind(kind, n, HiddenString::from_index(ki, n)));
    }
    const ScanResult scan =
        scan_family(units, n, gate_set, cfg.mode, cfg.tol, cfg.budget, cfg.complexity_cap);

    ReportDocument doc;
    doc.command = "scan";
    doc.params = {{"family", cfg.family},
                  {"n", n},
                  {"gate_set", cfg.gate_set},
                  {"mode", compare_mode_name(cfg.mode)},
                  {"budget", cfg.budget}};
    nlohmann::json records = nlohmann::json::array();
    for (const CCPRecord& r : scan.records) {
        nlohmann::json rec;
        rec["assignment"] = r.gate_names;
        std::size_t classical_count = 0;
        for (bool c : r.per_k_classical) classical_count += c ? 1 : 0;
        rec["classical_k_count"] = classical_count;
        rec["family_classical"] = r.family_classical;
        if (r.family_classical) {
            if (r.complexity->identifiable) {
                rec["complexity"] = r.complexity->depth;
            } else {
                rec["complexity"] = "unidentifiable";
            }
        } else {
            rec["complexity"] = nullptr;
        }
        records.push_back(std::move(rec));
    }
    nlohmann::json optimal = nlohmann::json::array();
    for (std::size_t i : scan.optimal) {
        optimal.push_back({{"assignment", scan.records[i].gate_names},
                           {"complexity", scan.records[i].complexity->depth}});
    }
    doc.results = {{"records", records}, {"optimal", optimal}, {"mode", compare_mode_name(cfg.mode)}};
    doc.engine_stats = {{"assignments_scanned", scan.assignments_scanned}};
    if (cfg.mode == CompareMode::Phase) {
        doc.warnings.push_back("phase mode: extracted tables may carry non-unit basis-state phases");
    }
    return doc;
}

ReportDocument run_table(const RunConfig& cfg) {
    const std::size_t n = require_n(cfg);
    const HiddenString k = parse_k(cfg);
    const FamilyKind kind = family_kind_from_name(cfg.family);
    const OracleFamily family = build_family(kind, n);
    const ClassicalOracle& oracle = family.member(k);

    ReportDocument doc;
    doc.command = "table";
    doc.params = {{"family", cfg.family}, {"n", n}, {"k", k.text()}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t x = 0; x < oracle.table_size(); ++x) {
        rows.push_back({{"input", BitString::from_index(x, n + 1).text()},
                        {"output", BitString::from_index(oracle.apply_index(x), n + 1).text()}});
    }
    doc.results = {{"family", cfg.family}, {"k", k.text()}, {"rows", rows}};
    doc.engine_stats = {{"rows", oracle.table_size()}};
    return doc;
}

void append_canonical(std::string& out, const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                append_canonical(out, it.value());
            }
            out += '}';
            break;
        }
        case nlohmann::json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                append_canonical(out, j.at(i));
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", j.get<double>());
            out += buf;
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream out;
    if (doc.command == "scan") {
        out << "assignment,classical_k_count,family_classical,complexity\n";
        for (const auto& rec : doc.results.at("records")) {
            out << join_names(rec.at("assignment").get<std::vector<std::string>>(), "+") << ','
                << rec.at("classical_k_count").get<std::size_t>() << ','
                << (rec.at("family_classical").get<bool>() ? "true" : "false") << ',';
            const auto& c = rec.at("complexity");
            if (c.is_number_integer()) {
                out << c.get<int>();
            } else if (c.is_string()) {
                out << c.get<std::string>();
            }
            out << '\n';
        }
        return out.str();
    }
    if (doc.command == "equivalence") {
        out << "k,equal\n";
        for (const auto& row : doc.results.at("per_k")) {
            out << row.at("k").get<std::string>() << ','
                << (row.at("equal").get<bool>() ? "true" : "false") << '\n';
        }
        return out.str();
    }
    if (doc.command == "table") {
        out << "input,output\n";
        for (const auto& row : doc.results.at("rows")) {
            out << row.at("input").get<std::string>() << ',' << row.at("output").get<std::string>()
                << '\n';
        }
        return out.str();
    }
    throw UsageError("csv output is only available for scan, equivalence and table");
}

std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::string out;
    append_canonical(out, v);
    return out;
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "command: " << doc.command << '\n';
    out << "params:";
    for (auto it = doc.params.begin(); it != doc.params.end(); ++it) {
        out << ' ' << it.key() << '=' << scalar_text(it.value());
    }
    out << '\n';
    for (auto it = doc.results.begin(); it != doc.results.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            out << it.key() << ":\n";
            // Aligned columns over the union of row keys (all rows share keys).
            const auto& rows = it.value();
            std::vector<std::string> cols;
            for (auto cit = rows.front().begin(); cit != rows.front().end(); ++cit) {
                cols.push_back(cit.key());
            }
            std::vector<std::size_t> widths;
            for (const std::string& c : cols) {
                std::size_t w = c.size();
                for (const auto& row : rows) w = std::max(w, scalar_text(row.at(c)).size());
                widths.push_back(w);
            }
            out << "  ";
            for (std::size_t i = 0; i < cols.size(); ++i) {
                out << cols[i] << std::string(widths[i] - cols[i].size() + 2, ' ');
            }
            out << '\n';
            for (const auto& row : rows) {
                out << "  ";
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    const std::string cell = scalar_text(row.at(cols[i]));
                    out << cell << std::string(widths[i] - cell.size() + 2, ' ');
                }
                out << '\n';
            }
        } else {
            out << it.key() << ": " << scalar_text(it.value()) << '\n';
        }
    }
    for (const std::string& w : doc.warnings) {
        out << "warning: " << w << '\n';
    }
    return out.str();
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "table") return OutputFormat::Table;
    throw UsageError("unknown output format '" + name + "' (expected json, csv or table)");
}

CompareMode compare_mode_from_name(const std::string& name) {
    if (name == "strict") return CompareMode::Strict;
    if (name == "phase") return CompareMode::Phase;
    throw UsageError("unknown mode '" + name + "' (expected strict or phase)");
}

std::string compare_mode_name(CompareMode mode) {
    return mode == CompareMode::Strict ? "strict" : "phase";
}

BasisConfig load_basis_config(const nlohmann::json& j, double tol) {
    BasisConfig cfg;
    cfg.name = j.value("name", std::string{});
    if (j.contains("gates")) {
        for (auto it = j.at("gates").begin(); it != j.at("gates").end(); ++it) {
            ComplexMatrix gate = ComplexMatrix::from_json(it.value());
            if (gate.dim() != 2) {
                throw UsageError("basis config gate '" + it.key() + "' must be 2x2");
            }
            if (!gate.is_unitary(tol)) {
                throw UsageError("basis config gate '" + it.key() + "' failed the unitarity check");
            }
            cfg.gates.emplace(it.key(), std::move(gate));
        }
    }
    if (j.contains("assignments")) {
        for (const auto& a : j.at("assignments")) {
            const std::string name = a.at("name").get<std::string>();
            const auto per_qubit = a.at("per_qubit").get<std::vector<std::string>>();
            for (const std::string& g : per_qubit) {
                if (!cfg.gates.count(g)) {
                    throw UsageError("assignment '" + name + "' references undefined gate '" + g +
                                     "'");
                }
            }
            cfg.assignments.emplace_back(name, per_qubit);
        }
    }
    return cfg;
}

void apply_config_json(RunConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    if (j.contains("format")) cfg.format = output_format_from_name(j.at("format").get<std::string>());
    if (j.contains("mode")) cfg.mode = compare_mode_from_name(j.at("mode").get<std::string>());
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("budget")) cfg.budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("qubit_cap")) cfg.qubit_cap = j.at("qubit_cap").get<std::size_t>();
    if (j.contains("complexity_cap")) cfg.complexity_cap = j.at("complexity_cap").get<std::size_t>();
    if (j.contains("gate_set")) cfg.gate_set = j.at("gate_set").get<std::string>();
    if (j.contains("basis")) cfg.basis = load_basis_config(j.at("basis"), cfg.tol);
}

nlohmann::json ReportDocument::to_json() const {
    return {{"schema_version", schema_version},
            {"command", command},
            {"params", params},
            {"results", results},
            {"engine_stats", engine_stats},
            {"warnings", warnings}};
}

ReportDocument run_command(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Bv: return run_bv(cfg);
        case Command::Complexity: return run_complexity(cfg);
        case Command::Equivalence: return run_equivalence(cfg);
        case Command::Scan: return run_scan(cfg);
        case Command::Table: return run_table(cfg);
    }
    throw UsageError("unknown command");
}

std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    append_canonical(out, j);
    return out;
}

std::string render(const ReportDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return canonical_json(doc.to_json()) + "\n";
        case OutputFormat::Csv: return render_csv(doc);
        case OutputFormat::Table: return render_table(doc);
    }
    throw UsageError("unknown output format");
}

nlohmann::json witness_to_json(const DecisionNode& node, std::size_t n) {
    if (node.is_leaf) {
        return {{"leaf", HiddenString::from_index(node.k_index, n).text()}};
    }
    nlohmann::json branches = nlohmann::json::object();
    for (const auto& [answer, child] : node.branches) {
        branches[BitString::from_index(answer, n + 1).text()] = witness_to_json(*child, n);
    }
    return {{"query", BitString::from_index(node.query_index, n + 1).text()},
            {"branches", branches}};
}

}  // namespace oracle_lens
