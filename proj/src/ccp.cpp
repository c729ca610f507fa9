#include "oracle_lens/ccp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "oracle_lens/errors.hpp"

namespace oracle_lens {

namespace {

std::size_t width_of_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("matrix dimension must be a power of two >= 2");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

// Gate indices in ascending name order; assignment vectors are enumerated
// lexicographically with qubit position 0 as the most significant digit.
struct AssignmentEnumerator {
    const GateSet& set;
    std::size_t width;
    std::vector<std::size_t> order;   // sorted gate indices
    std::vector<std::size_t> digits;  // current assignment, per position
    bool done = false;

    AssignmentEnumerator(const GateSet& gate_set, std::size_t m, std::uint64_t budget)
        : set(gate_set), width(m), order(gate_set.size()), digits(m, 0) {
        if (gate_set.size() == 0) throw std::invalid_argument("gate set must be non-empty");
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return gate_set.names[a] < gate_set.names[b];
        });
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (total > budget / gate_set.size()) {
                throw ResourceError("scan budget exceeded: |gate_set|^m = " +
                                    std::to_string(gate_set.size()) + "^" + std::to_string(m) +
                                    " assignments > budget " + std::to_string(budget));
            }
            total *= gate_set.size();
        }
        if (total > budget) {
            throw ResourceError("scan budget exceeded: " + std::to_string(total) +
                                " assignments > budget " + std::to_string(budget));
        }
    }

    LocalBasisAssignment current(double tol) const {
        std::vector<std::string> names;
        std::vector<ComplexMatrix> gs;
        names.reserve(width);
        gs.reserve(width);
        for (std::size_t j = 0; j < width; ++j) {
            const std::size_t g = order[digits[j]];
            names.push_back(set.names[g]);
            gs.push_back(set.gates[g]);
        }
        return LocalBasisAssignment(std::move(names), std::move(gs), tol);
    }

    void advance() {
        for (std::size_t j = width; j-- > 0;) {
            if (++digits[j] < set.size()) return;
            digits[j] = 0;
        }
        done = true;
    }
};

}  // namespace

std::optional<ClassicalExtraction> as_classical(const ComplexMatrix& m, double tol,
                                                CompareMode mode) {
    const std::size_t dim = m.dim();
    const std::size_t width = width_of_dim(dim);

    std::vector<std::uint32_t> table(dim);
    std::vector<Complex> phases(dim);
    bool strict = true;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t hits = 0;
        std::size_t target = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            if (std::abs(m.at(r, c)) > tol) {
                ++hits;
                target = r;
            }
        }
        if (hits != 1) return std::nullopt;
        const Complex z = m.at(target, c);
        if (mode == CompareMode::Strict) {
            if (std::abs(z - 1.0) >= tol) return std::nullopt;
        } else {
            if (std::abs(std::abs(z) - 1.0) >= tol) return std::nullopt;
        }
        if (std::abs(z - 1.0) >= tol) strict = false;
        table[c] = static_cast<std::uint32_t>(target);
        phases[c] = z;
    }
    try {
        return ClassicalExtraction{ClassicalOracle(width, std::move(table)), std::move(phases),
                                   strict};
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // column structure present but not a bijection
    }
}

std::optional<ClassicalOracle> extract_ccp(const ComplexMatrix& u,
                                           const LocalBasisAssignment& basis, double tol,
                                           CompareMode mode) {
    const ComplexMatrix conjugated = conjugate_by(u, basis.full(), tol);
    auto extraction = as_classical(conjugated, tol, mode);
    if (!extraction) return std::nullopt;
    return std::move(extraction->oracle);
}

ScanResult scan_family(const std::vector<ComplexMatrix>& units, std::size_t n,
                       const GateSet& gate_set, CompareMode mode, double tol,
                       std::uint64_t budget, std::size_t complexity_cap) {
    if (units.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("scan needs one unitary per hidden string (2^n members)");
    }
    const std::size_t m = n + 1;
    const std::size_t dim = std::size_t{1} << m;
    for (const ComplexMatrix& u : units) {
        if (u.dim() != dim) throw std::invalid_argument("scan family members must share dim 2^(n+1)");
    }

    ScanResult result;
    AssignmentEnumerator next(gate_set, m, budget);
    while (!next.done) {
        const LocalBasisAssignment assignment = next.current(tol);
        const ComplexMatrix b = assignment.full();
        const ComplexMatrix b_adjoint = b.adjoint();

        CCPRecord record;
        record.gate_names = assignment.names();
        record.mode = mode;
        record.per_k_classical.resize(units.size());
        std::vector<ClassicalOracle> extracted;
        extracted.reserve(units.size());
        bool all_classical = true;
        for (std::size_t k = 0; k < units.size(); ++k) {
            auto extraction = as_classical(b_adjoint * units[k] * b, tol, mode);
            record.per_k_classical[k] = extraction.has_value();
            if (extraction) {
                extracted.push_back(std::move(extraction->oracle));
            } else {
                all_classical = false;
            }
        }
        record.family_classical = all_classical;
        if (all_classical) {
            record.family = OracleFamily(n, "extracted", std::move(extracted));
            record.complexity =
                min_adaptive_queries(*record.family, complexity_cap, /*want_witness=*/false);
        }
        result.records.push_back(std::move(record));
        ++result.assignments_scanned;
        next.advance();
    }

    int best = -1;
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const CCPRecord& r = result.records[i];
        if (!r.family_classical || !r.complexity->identifiable) continue;
        if (best < 0 || r.complexity->depth < best) best = r.complexity->depth;
    }
    if (best >= 0) {
        for (std::size_t i = 0; i < result.records.size(); ++i) {
            const CCPRecord& r = result.records[i];
            if (r.family_classical && r.complexity->identifiable && r.complexity->depth == best) {
                result.optimal.push_back(i);
            }
        }
    }
    return result;
}

std::vector<SingleAssignmentHit> analyze_single(const ComplexMatrix& u, const GateSet& gate_set,
                                                CompareMode mode, double tol,
                                                std::uint64_t budget) {
    const std::size_t m = width_of_dim(u.dim());
    std::vector<SingleAssignmentHit> hits;
    AssignmentEnumerator next(gate_set, m, budget);
    while (!next.done) {
        const LocalBasisAssignment assignment = next.current(tol);
        auto oracle = extract_ccp(u, assignment, tol, mode);
        if (oracle) {
            hits.push_back(SingleAssignmentHit{assignment.names(), std::move(*oracle)});
        }
        next.advance();
    }
    return hits;
}

}  // namespace oracle_lens
