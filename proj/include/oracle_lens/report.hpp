#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle_lens/ccp.hpp"
#include "oracle_lens/complexity.hpp"
#include "oracle_lens/linalg.hpp"
#include "oracle_lens/oracle.hpp"

namespace oracle_lens {

enum class Command { Bv, Complexity, Equivalence, Scan, Table };
enum class OutputFormat { Json, Csv, Table };

OutputFormat output_format_from_name(const std::string& name);
CompareMode compare_mode_from_name(const std::string& name);
std::string compare_mode_name(CompareMode mode);

/// Named single-qubit gates plus named per-qubit assignments, loaded from
/// the basis-set config file. Gates are checked for unitarity on load.
struct BasisConfig {
    std::string name;
    std::map<std::string, ComplexMatrix> gates;
    std::vector<std::pair<std::string, std::vector<std::string>>> assignments;
};

BasisConfig load_basis_config(const nlohmann::json& j, double tol = kDefaultTol);

struct RunConfig {
    Command command = Command::Bv;
    std::size_t n = 0;
    std::optional<std::string> k_text;
    std::string family = "standard";
    std::string left = "alice";
    std::string right = "standard";
    bool witness = false;
    bool up_to_phase = false;
    std::string gate_set = "IH";
    CompareMode mode = CompareMode::Strict;
    double tol = kDefaultTol;
    OutputFormat format = OutputFormat::Json;
    std::uint64_t budget = kDefaultScanBudget;
    std::size_t qubit_cap = kDefaultQubitCap;
    std::size_t complexity_cap = kDefaultComplexityCap;
    std::optional<BasisConfig> basis;
};

// Applies config-file defaults (everything except the command and its
// positional-ish parameters); CLI flags are expected to be applied on top.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

struct ReportDocument {
    int schema_version = 1;
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json engine_stats = nlohmann::json::object();
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

ReportDocument run_command(const RunConfig& cfg);

// json: canonical form (sorted keys, floats with 12 significant digits);
// csv: flat rows for list-like payloads; table: aligned text.
std::string render(const ReportDocument& doc, OutputFormat format);

// Sorted-key serialization with %.12g float formatting, no whitespace.
std::string canonical_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const DecisionNode& node, std::size_t n);

}  // namespace oracle_lens
