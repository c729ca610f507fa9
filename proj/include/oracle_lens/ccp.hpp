#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oracle_lens/complexity.hpp"
#include "oracle_lens/linalg.hpp"
#include "oracle_lens/oracle.hpp"

namespace oracle_lens {

inline constexpr std::uint64_t kDefaultScanBudget = std::uint64_t{1} << 20;

/// Permutation structure found in a matrix. In phase mode, phases[c] is the
/// phase carried by column c; strict extraction always has unit phases.
struct ClassicalExtraction {
    ClassicalOracle oracle;
    std::vector<Complex> phases;
    bool strict = true;
};

// Detects whether M maps basis states to basis states. Strict: every column
// has exactly one entry within tol of 1 and the rest within tol of 0.
// Phase: the single large entry only needs modulus 1. Absence of classical
// structure is a nullopt, not an error.
std::optional<ClassicalExtraction> as_classical(const ComplexMatrix& m, double tol,
                                                CompareMode mode);

// as_classical(B_full^dagger * U * B_full). Round trip:
// extract_ccp(quantum_oracle(f, B), B) == f.
std::optional<ClassicalOracle> extract_ccp(const ComplexMatrix& u,
                                           const LocalBasisAssignment& basis, double tol,
                                           CompareMode mode);

/// Outcome of testing one basis assignment against a whole unitary family.
struct CCPRecord {
    std::vector<std::string> gate_names;  // per qubit, position 0 first
    std::vector<bool> per_k_classical;    // indexed by encode(k)
    bool family_classical = false;
    std::optional<OracleFamily> family;            // present iff family_classical
    std::optional<QueryComplexityReport> complexity;  // present iff family_classical
    CompareMode mode = CompareMode::Strict;
};

struct ScanResult {
    std::vector<CCPRecord> records;          // lexicographic in gate_names
    std::vector<std::size_t> optimal;        // indices of minimum finite complexity
    std::uint64_t assignments_scanned = 0;
};

// Tries every assignment in gate_set^m against the family {units[k]}, in
// ascending lexicographic order of the per-qubit gate-name vector. Family-
// classical records carry the extracted family and its query complexity.
ScanResult scan_family(const std::vector<ComplexMatrix>& units, std::size_t n,
                       const GateSet& gate_set, CompareMode mode, double tol,
                       std::uint64_t budget = kDefaultScanBudget,
                       std::size_t complexity_cap = kDefaultComplexityCap);

/// Assignments under which one single unitary is classical.
struct SingleAssignmentHit {
    std::vector<std::string> gate_names;
    ClassicalOracle oracle;
};

std::vector<SingleAssignmentHit> analyze_single(const ComplexMatrix& u, const GateSet& gate_set,
                                                CompareMode mode, double tol,
                                                std::uint64_t budget = kDefaultScanBudget);

}  // namespace oracle_lens
