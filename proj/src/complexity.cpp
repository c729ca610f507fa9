#include "oracle_lens/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "oracle_lens/errors.hpp"
#include "oracle_lens/linalg.hpp"

namespace oracle_lens {

namespace {

struct MemoEntry {
    int depth;
    std::uint64_t best_query;
};

struct Engine {
    const OracleFamily& family;
    std::uint64_t query_count;
    std::unordered_map<std::uint64_t, MemoEntry> memo;

    int solve(std::uint64_t mask) {
        if (std::popcount(mask) <= 1) return 0;
        if (auto it = memo.find(mask); it != memo.end()) return it->second.depth;

        int best_depth = -1;
        std::uint64_t best_query = 0;
        for (std::uint64_t q = 0; q < query_count; ++q) {
            // Partition the surviving candidates by the answer to q.
            std::unordered_map<std::uint32_t, std::uint64_t> classes;
            for (std::uint64_t ki = mask; ki != 0; ki &= ki - 1) {
                const std::uint64_t k = static_cast<std::uint64_t>(std::countr_zero(ki));
                classes[family.member(k).apply_index(q)] |= std::uint64_t{1} << k;
            }
            if (classes.size() <= 1) continue;  // q does not split this set
            int worst = 0;
            for (const auto& [answer, sub] : classes) {
                worst = std::max(worst, solve(sub));
            }
            const int depth = 1 + worst;
            if (best_depth < 0 || depth < best_depth) {
                best_depth = depth;
                best_query = q;
            }
        }
        if (best_depth < 0) {
            // No query splits the set: two candidates are identical functions.
            throw std::logic_error("unsplittable candidate set in an identifiable family");
        }
        memo[mask] = MemoEntry{best_depth, best_query};
        return best_depth;
    }

    std::shared_ptr<const DecisionNode> build_witness(std::uint64_t mask) {
        auto node = std::make_shared<DecisionNode>();
        if (std::popcount(mask) <= 1) {
            node->is_leaf = true;
            node->k_index = static_cast<std::uint64_t>(std::countr_zero(mask));
            return node;
        }
        const std::uint64_t q = memo.at(mask).best_query;
        node->query_index = q;
        std::map<std::uint64_t, std::uint64_t> classes;
        for (std::uint64_t ki = mask; ki != 0; ki &= ki - 1) {
            const std::uint64_t k = static_cast<std::uint64_t>(std::countr_zero(ki));
            classes[family.member(k).apply_index(q)] |= std::uint64_t{1} << k;
        }
        for (const auto& [answer, sub] : classes) {
            node->branches[answer] = build_witness(sub);
        }
        return node;
    }
};

void check_complexity_cap(std::size_t n, std::size_t cap) {
    const std::size_t effective_cap = std::min(cap, kHardComplexityCap);
    if (n > effective_cap) {
        const double states = std::pow(2.0, static_cast<double>(std::uint64_t{1} << n));
        throw ResourceError("query-complexity engine cap exceeded: n = " + std::to_string(n) +
                            " > cap " + std::to_string(effective_cap) +
                            " (candidate-subset space ~" + std::to_string(states) + " states)");
    }
}

bool subset_has_duplicates(const OracleFamily& family, std::uint64_t mask) {
    std::vector<std::uint64_t> picked;
    for (std::uint64_t ki = mask; ki != 0; ki &= ki - 1) {
        picked.push_back(static_cast<std::uint64_t>(std::countr_zero(ki)));
    }
    for (std::size_t a = 0; a < picked.size(); ++a) {
        for (std::size_t b = a + 1; b < picked.size(); ++b) {
            if (family.member(picked[a]) == family.member(picked[b])) return true;
        }
    }
    return false;
}

}  // namespace

bool identifiable(const OracleFamily& family) {
    const std::uint64_t full = (family.size() >= 64)
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << family.size()) - 1;
    return !subset_has_duplicates(family, full);
}

QueryComplexityReport min_adaptive_queries_subset(const OracleFamily& family,
                                                  std::uint64_t subset_mask, std::size_t cap,
                                                  bool want_witness) {
    check_complexity_cap(family.n(), cap);
    if (family.size() > 63) throw ResourceError("family too large for subset masks");
    subset_mask &= (std::uint64_t{1} << family.size()) - 1;

    QueryComplexityReport report;
    if (subset_has_duplicates(family, subset_mask)) {
        report.identifiable = false;
        return report;
    }
    Engine engine{family, std::uint64_t{1} << family.width(), {}};
    report.identifiable = true;
    report.depth = engine.solve(subset_mask);
    report.states_explored = engine.memo.size();
    if (want_witness) report.witness = engine.build_witness(subset_mask);
    return report;
}

QueryComplexityReport min_adaptive_queries(const OracleFamily& family, std::size_t cap,
                                           bool want_witness) {
    return min_adaptive_queries_subset(family, ~std::uint64_t{0}, cap, want_witness);
}

std::optional<BitString> one_query_identifiable(const OracleFamily& family) {
    const std::size_t m = family.width();
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << m); ++q) {
        std::vector<std::uint32_t> answers;
        answers.reserve(family.size());
        for (std::uint64_t k = 0; k < family.size(); ++k) {
            answers.push_back(family.member(k).apply_index(q));
        }
        std::sort(answers.begin(), answers.end());
        if (std::adjacent_find(answers.begin(), answers.end()) == answers.end()) {
            return BitString::from_index(q, m);
        }
    }
    return std::nullopt;
}

int information_lower_bound(const OracleFamily& family) {
    if (!identifiable(family)) {
        throw std::invalid_argument("information lower bound is undefined for an unidentifiable family");
    }
    const std::uint64_t distinct = family.size();
    if (distinct <= 1) return 0;

    std::size_t max_answers = 1;
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << family.width()); ++q) {
        std::vector<std::uint32_t> answers;
        answers.reserve(family.size());
        for (std::uint64_t k = 0; k < family.size(); ++k) {
            answers.push_back(family.member(k).apply_index(q));
        }
        std::sort(answers.begin(), answers.end());
        answers.erase(std::unique(answers.begin(), answers.end()), answers.end());
        max_answers = std::max(max_answers, answers.size());
    }
    // Smallest t with max_answers^t >= distinct.
    int t = 0;
    std::uint64_t reach = 1;
    while (reach < distinct) {
        reach *= max_answers;
        ++t;
    }
    return t;
}

BVRunResult bv_quantum_run(std::size_t n, const HiddenString& k, std::size_t qubit_cap) {
    if (k.size() != n) throw std::invalid_argument("hidden string length must equal n");
    const std::size_t m = n + 1;
    if (m > qubit_cap) {
        throw ResourceError("simulator qubit cap exceeded: need " + std::to_string(m) +
                            " qubits, cap is " + std::to_string(qubit_cap));
    }
    const std::size_t dim = std::size_t{1} << m;

    StateVector state = StateVector::basis_state(dim, 0);
    apply_single_qubit_inplace(state, gates::pauli_x(), 0);
    for (std::size_t j = 0; j < m; ++j) {
        apply_single_qubit_inplace(state, gates::hadamard(), j);
    }

    // One oracle call: U_S(k) acts as a permutation of reference basis states.
    const ClassicalOracle oracle = standard_oracle(n, k);
    StateVector after(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        after.amp(oracle.apply_index(x)) = state.amp(x);
    }

    for (std::size_t j = 1; j < m; ++j) {
        apply_single_qubit_inplace(after, gates::hadamard(), j);
    }

    // Exact readout of qubits 1..n; qubit 0 is traced out.
    std::uint64_t best_outcome = 0;
    double best_prob = -1.0;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        const double p =
            std::norm(after.amp(2 * z)) + std::norm(after.amp(2 * z + 1));
        if (p > best_prob) {
            best_prob = p;
            best_outcome = z;
        }
    }
    return BVRunResult{HiddenString::from_index(best_outcome, n), best_prob, 1};
}

}  // namespace oracle_lens
