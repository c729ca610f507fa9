#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "oracle_lens/bitvec.hpp"
#include "oracle_lens/oracle.hpp"

namespace oracle_lens {

/// Witness decision tree. Internal nodes query a full input string; each
/// branch is labeled by the full output string the oracle returned. Leaves
/// name the identified hidden string.
struct DecisionNode {
    bool is_leaf = false;
    std::uint64_t k_index = 0;      // valid at leaves
    std::uint64_t query_index = 0;  // valid at internal nodes
    std::map<std::uint64_t, std::shared_ptr<const DecisionNode>> branches;
};

struct QueryComplexityReport {
    bool identifiable = false;
    int depth = -1;  // valid iff identifiable
    std::shared_ptr<const DecisionNode> witness;
    std::uint64_t states_explored = 0;
};

inline constexpr std::size_t kDefaultComplexityCap = 4;

// The n = 5 subset space is large; anything above is refused outright.
inline constexpr std::size_t kHardComplexityCap = 5;

// True iff all members are pairwise distinct as functions.
bool identifiable(const OracleFamily& family);

// Exact minimum depth of a deterministic adaptive decision tree that
// identifies the hidden string with certainty. Memoized on the bitmask of
// surviving candidates; ties among equally good queries go to the lowest
// query index.
QueryComplexityReport min_adaptive_queries(const OracleFamily& family,
                                           std::size_t cap = kDefaultComplexityCap,
                                           bool want_witness = true);

// Same engine restricted to the candidate subset selected by subset_mask
// (bit k set keeps member k). Used for subfamilies.
QueryComplexityReport min_adaptive_queries_subset(const OracleFamily& family,
                                                  std::uint64_t subset_mask, std::size_t cap,
                                                  bool want_witness = true);

// Lowest query q such that k -> f_k(q) is injective, if any. Independent of
// the decision-tree engine; serves as a cross-check for depth-1 verdicts.
std::optional<BitString> one_query_identifiable(const OracleFamily& family);

// ceil(log(#distinct members) / log(A_max)) where A_max is the largest
// number of distinct answers any single query can produce. Lower-bounds the
// exact engine. Requires an identifiable family.
int information_lower_bound(const OracleFamily& family);

struct BVRunResult {
    HiddenString recovered;
    double probability = 0.0;
    int queries_used = 0;
};

inline constexpr std::size_t kDefaultQubitCap = 10;

// Single-query quantum run against U_S(k): X on qubit 0, H on all qubits,
// one oracle application, H on qubits 1..n, exact readout of qubits 1..n.
BVRunResult bv_quantum_run(std::size_t n, const HiddenString& k,
                           std::size_t qubit_cap = kDefaultQubitCap);

}  // namespace oracle_lens
