#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oracle_lens/errors.hpp"
#include "oracle_lens/report.hpp"

namespace {

using oracle_lens::RunConfig;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw oracle_lens::UsageError("cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw oracle_lens::UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oracle-lens: quantum oracles, classical counterparts and query complexity"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format_name = "json";
    std::string mode_name = "strict";
    double tol = oracle_lens::kDefaultTol;
    app.add_option("--config", config_path, "JSON config file (also: ORACLE_LENS_CONFIG)");

    std::size_t n = 0;
    std::string k_text;
    std::string family = "standard";
    std::string left = "alice";
    std::string right = "standard";
    std::string gate_set = "IH";
    bool witness = false;
    bool up_to_phase = false;
    std::uint64_t budget = oracle_lens::kDefaultScanBudget;
    std::size_t qubit_cap = oracle_lens::kDefaultQubitCap;
    std::size_t complexity_cap = oracle_lens::kDefaultComplexityCap;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "json, csv or table");
        cmd->add_option("--tol", tol, "numerical tolerance");
    };

    CLI::App* bv = app.add_subcommand("bv", "single-query quantum run");
    bv->add_option("--n", n, "hidden string length")->required();
    bv->add_option("--k", k_text, "hidden string k1...kn")->required();
    bv->add_option("--qubit-cap", qubit_cap, "simulator qubit cap");
    add_common(bv);

    CLI::App* complexity = app.add_subcommand("complexity", "exact adaptive query complexity");
    complexity->add_option("--family", family, "standard, alice or bob")->required();
    complexity->add_option("--n", n, "hidden string length")->required();
    complexity->add_flag("--witness", witness, "emit the witness decision tree");
    complexity->add_option("--complexity-cap", complexity_cap, "engine cap on n");
    add_common(complexity);

    CLI::App* equivalence = app.add_subcommand("equivalence", "compare quantum oracles over all k");
    equivalence->add_option("--left", left, "standard, alice or bob")->required();
    equivalence->add_option("--right", right, "standard, alice or bob")->required();
    equivalence->add_option("--n", n, "hidden string length")->required();
    equivalence->add_flag("--up-to-phase", up_to_phase, "compare up to global phase");
    add_common(equivalence);

    CLI::App* scan = app.add_subcommand("scan", "scan basis assignments for classical counterparts");
    scan->add_option("--family", family, "standard, alice or bob")->required();
    scan->add_option("--n", n, "hidden string length")->required();
    scan->add_option("--gate-set", gate_set, "IH, clifford, or a basis-config name");
    scan->add_option("--mode", mode_name, "strict or phase");
    scan->add_option("--budget", budget, "max assignments to scan");
    scan->add_option("--complexity-cap", complexity_cap, "engine cap on n");
    add_common(scan);

    CLI::App* table = app.add_subcommand("table", "print an oracle's truth table");
    table->add_option("--family", family, "standard, alice or bob")->required();
    table->add_option("--n", n, "hidden string length")->required();
    table->add_option("--k", k_text, "hidden string k1...kn")->required();
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        RunConfig cfg;

        // Precedence: built-in defaults < config file < CLI flags.
        std::string effective_config = config_path;
        if (effective_config.empty()) {
            if (const char* env = std::getenv("ORACLE_LENS_CONFIG")) effective_config = env;
        }
        if (!effective_config.empty()) {
            oracle_lens::apply_config_json(cfg, read_json_file(effective_config));
        }

        CLI::App* cmd = app.get_subcommands().front();
        if (cmd == bv) cfg.command = oracle_lens::Command::Bv;
        if (cmd == complexity) cfg.command = oracle_lens::Command::Complexity;
        if (cmd == equivalence) cfg.command = oracle_lens::Command::Equivalence;
        if (cmd == scan) cfg.command = oracle_lens::Command::Scan;
        if (cmd == table) cfg.command = oracle_lens::Command::Table;

        auto flag_given = [&](const char* name) {
            const CLI::Option* opt = cmd->get_option_no_throw(name);
            return opt != nullptr && opt->count() > 0;
        };

        cfg.n = n;
        if (flag_given("--k")) cfg.k_text = k_text;
        cfg.family = family;
        cfg.left = left;
        cfg.right = right;
        cfg.witness = witness;
        cfg.up_to_phase = up_to_phase;
        if (flag_given("--gate-set")) cfg.gate_set = gate_set;
        if (flag_given("--mode")) cfg.mode = oracle_lens::compare_mode_from_name(mode_name);
        if (flag_given("--tol")) cfg.tol = tol;
        if (flag_given("--format")) cfg.format = oracle_lens::output_format_from_name(format_name);
        if (flag_given("--budget")) cfg.budget = budget;
        if (flag_given("--qubit-cap")) cfg.qubit_cap = qubit_cap;
        if (flag_given("--complexity-cap")) cfg.complexity_cap = complexity_cap;

        const oracle_lens::ReportDocument doc = oracle_lens::run_command(cfg);
        std::cout << oracle_lens::render(doc, cfg.format);
        return 0;
    } catch (const oracle_lens::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const oracle_lens::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
