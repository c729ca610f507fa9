#include "oracle_lens/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "oracle_lens/errors.hpp"

namespace oracle_lens {

namespace {

// Family construction touches 2^n tables of 2^(n+1) entries each.
constexpr std::size_t kMaxFamilyN = 11;

void check_family_size(std::size_t n) {
    if (n < 1) throw std::invalid_argument("hidden string length n must be >= 1");
    if (n > kMaxFamilyN) {
        throw ResourceError("family size cap exceeded: n = " + std::to_string(n) +
                            " but the dense-table cap is n <= " + std::to_string(kMaxFamilyN));
    }
}

}  // namespace

ClassicalOracle::ClassicalOracle(std::size_t width, std::vector<std::uint32_t> table)
    : width_(width), table_(std::move(table)) {
    if (width_ == 0 || width_ > 31) throw std::invalid_argument("oracle width must be in [1, 31]");
    const std::size_t expected = std::size_t{1} << width_;
    if (table_.size() != expected) {
        throw std::invalid_argument("oracle table size must be 2^width");
    }
    std::vector<bool> seen(expected, false);
    for (std::uint32_t out : table_) {
        if (out >= expected || seen[out]) {
            throw std::invalid_argument("oracle table is not a bijection");
        }
        seen[out] = true;
    }
}

ClassicalOracle ClassicalOracle::identity(std::size_t width) {
    std::vector<std::uint32_t> table(std::size_t{1} << width);
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(i);
    return ClassicalOracle(width, std::move(table));
}

std::uint32_t ClassicalOracle::apply_index(std::uint64_t input) const {
    if (input >= table_.size()) throw std::invalid_argument("oracle input index out of range");
    return table_[input];
}

BitString ClassicalOracle::apply(const BitString& x) const {
    if (x.size() != width_) throw std::invalid_argument("oracle input width mismatch");
    return BitString::from_index(apply_index(x.index()), width_);
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Standard: return "standard";
        case FamilyKind::Alice: return "alice";
        case FamilyKind::Bob: return "bob";
    }
    throw std::invalid_argument("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "standard") return FamilyKind::Standard;
    if (name == "alice") return FamilyKind::Alice;
    if (name == "bob") return FamilyKind::Bob;
    throw UsageError("unknown family kind '" + name + "' (expected standard, alice or bob)");
}

OracleFamily::OracleFamily(std::size_t n, std::string kind, std::vector<ClassicalOracle> members)
    : n_(n), kind_(std::move(kind)), members_(std::move(members)) {
    if (members_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("oracle family must have exactly 2^n members");
    }
    for (const ClassicalOracle& f : members_) {
        if (f.width() != n_ + 1) {
            throw std::invalid_argument("every family member must have width n+1");
        }
    }
}

ClassicalOracle standard_oracle(std::size_t n, const HiddenString& k) {
    check_family_size(n);
    if (k.size() != n) throw std::invalid_argument("hidden string length must equal n");
    const std::size_t m = n + 1;
    std::vector<std::uint32_t> table(std::size_t{1} << m);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const BitString x = BitString::from_index(i, m);
        BitString y = x;
        y.set_bit(0, x.bit(0) ^ dot_mod2(k, x));
        table[i] = static_cast<std::uint32_t>(y.index());
    }
    return ClassicalOracle(m, std::move(table));
}

ClassicalOracle alice_oracle(std::size_t n, const HiddenString& k) {
    check_family_size(n);
    if (k.size() != n) throw std::invalid_argument("hidden string length must equal n");
    const std::size_t m = n + 1;
    std::vector<std::uint32_t> table(std::size_t{1} << m);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const BitString x = BitString::from_index(i, m);
        BitString y = x;
        for (std::size_t j = 1; j <= n; ++j) {
            y.set_bit(j, x.bit(j) ^ (k.bit(j - 1) & x.bit(0)));
        }
        table[i] = static_cast<std::uint32_t>(y.index());
    }
    return ClassicalOracle(m, std::move(table));
}

ClassicalOracle bob_oracle(std::size_t n, const HiddenString& k) {
    check_family_size(n);
    if (k.size() != n) throw std::invalid_argument("hidden string length must equal n");
    const std::size_t m = n + 1;
    std::vector<std::uint32_t> table(std::size_t{1} << m);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const BitString x = BitString::from_index(i, m);
        BitString y = x;
        y.set_bit(n, x.bit(n) ^ (k.bit(n - 1) & x.bit(0)));
        table[i] = static_cast<std::uint32_t>(y.index());
    }
    return ClassicalOracle(m, std::move(table));
}

OracleFamily build_family(FamilyKind kind, std::size_t n) {
    check_family_size(n);
    std::vector<ClassicalOracle> members;
    members.reserve(std::size_t{1} << n);
    for (std::uint64_t ki = 0; ki < (std::uint64_t{1} << n); ++ki) {
        const HiddenString k = HiddenString::from_index(ki, n);
        switch (kind) {
            case FamilyKind::Standard: members.push_back(standard_oracle(n, k)); break;
            case FamilyKind::Alice: members.push_back(alice_oracle(n, k)); break;
            case FamilyKind::Bob: members.push_back(bob_oracle(n, k)); break;
        }
    }
    return OracleFamily(n, family_kind_name(kind), std::move(members));
}

ComplexMatrix permutation_matrix(const ClassicalOracle& f) {
    const std::size_t dim = f.table_size();
    if (dim > kDefaultDimCap) {
        throw ResourceError("permutation matrix dimension exceeds the dense-matrix cap");
    }
    ComplexMatrix p(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        p.at(f.apply_index(x), x) = 1.0;
    }
    return p;
}

LocalBasisAssignment::LocalBasisAssignment(std::vector<std::string> names,
                                           std::vector<ComplexMatrix> gates, double tol)
    : names_(std::move(names)), gates_(std::move(gates)) {
    if (gates_.empty()) throw std::invalid_argument("basis assignment must cover >= 1 qubit");
    if (names_.size() != gates_.size()) {
        throw std::invalid_argument("basis assignment needs one name per gate");
    }
    for (const ComplexMatrix& g : gates_) {
        if (g.dim() != 2) throw std::invalid_argument("basis gates must be 2x2");
        if (!g.is_unitary(tol)) throw std::invalid_argument("basis gate is not unitary");
    }
}

ComplexMatrix LocalBasisAssignment::full() const {
    ComplexMatrix out = gates_[0];
    for (std::size_t j = 1; j < gates_.size(); ++j) {
        out = kron(gates_[j], out);
    }
    return out;
}

LocalBasisAssignment steven_assignment(std::size_t m) {
    return LocalBasisAssignment(std::vector<std::string>(m, "I"),
                                std::vector<ComplexMatrix>(m, gates::identity2()));
}

LocalBasisAssignment alice_assignment(std::size_t m) {
    return LocalBasisAssignment(std::vector<std::string>(m, "H"),
                                std::vector<ComplexMatrix>(m, gates::hadamard()));
}

LocalBasisAssignment bob_assignment(std::size_t m) {
    if (m < 2) throw std::invalid_argument("Bob's assignment needs at least 2 qubits");
    std::vector<std::string> names(m, "I");
    std::vector<ComplexMatrix> gs(m, gates::identity2());
    names.front() = "H";
    names.back() = "H";
    gs.front() = gates::hadamard();
    gs.back() = gates::hadamard();
    return LocalBasisAssignment(std::move(names), std::move(gs));
}

ComplexMatrix quantum_oracle(const ClassicalOracle& f, const LocalBasisAssignment& basis) {
    if (basis.width() != f.width()) {
        throw std::invalid_argument("basis assignment width must match oracle width");
    }
    const ComplexMatrix b = basis.full();
    return b * permutation_matrix(f) * b.adjoint();
}

ComplexMatrix steven_quantum_oracle(std::size_t n, const HiddenString& k) {
    return quantum_oracle(standard_oracle(n, k), steven_assignment(n + 1));
}

ComplexMatrix alice_quantum_oracle(std::size_t n, const HiddenString& k) {
    return quantum_oracle(alice_oracle(n, k), alice_assignment(n + 1));
}

ComplexMatrix bob_quantum_oracle(std::size_t n, const HiddenString& k) {
    return quantum_oracle(bob_oracle(n, k), bob_assignment(n + 1));
}

ComplexMatrix quantum_oracle_for_kind(FamilyKind kind, std::size_t n, const HiddenString& k) {
    switch (kind) {
        case FamilyKind::Standard: return steven_quantum_oracle(n, k);
        case FamilyKind::Alice: return alice_quantum_oracle(n, k);
        case FamilyKind::Bob: return bob_quantum_oracle(n, k);
    }
    throw std::invalid_argument("unknown family kind");
}

GateSet ih_gate_set() {
    return GateSet{{"H", "I"}, {gates::hadamard(), gates::identity2()}};
}

namespace {

ComplexMatrix canonicalize_phase(const ComplexMatrix& g, double tol) {
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const Complex z = g.at(r, c);
            if (std::abs(z) > tol) {
                return g * (std::abs(z) / z);
            }
        }
    }
    throw std::invalid_argument("zero matrix cannot be phase-canonicalized");
}

std::array<double, 8> sort_key(const ComplexMatrix& g) {
    auto snap = [](double v) { return std::round(v * 1e6) / 1e6 + 0.0; };
    return {snap(g.at(0, 0).real()), snap(g.at(0, 0).imag()), snap(g.at(0, 1).real()),
            snap(g.at(0, 1).imag()), snap(g.at(1, 0).real()), snap(g.at(1, 0).imag()),
            snap(g.at(1, 1).real()), snap(g.at(1, 1).imag())};
}

// Recognizable members keep their conventional names; the rest are numbered.
std::string clifford_name(const ComplexMatrix& g, std::size_t ordinal, double tol) {
    const std::pair<const char*, ComplexMatrix> named[] = {
        {"I", gates::identity2()}, {"X", gates::pauli_x()},  {"Y", gates::pauli_y()},
        {"Z", gates::pauli_z()},   {"H", gates::hadamard()}, {"S", gates::phase_s()},
    };
    for (const auto& [name, ref] : named) {
        if (g.max_abs_diff(canonicalize_phase(ref, tol)) < tol) return name;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "C%02zu", ordinal);
    return buf;
}

}  // namespace

GateSet clifford_gate_set() {
    const double tol = kDefaultTol;
    std::vector<ComplexMatrix> group;
    group.push_back(canonicalize_phase(gates::identity2(), tol));
    // Closure under right-multiplication by the generators.
    const ComplexMatrix generators[] = {gates::hadamard(), gates::phase_s()};
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const ComplexMatrix& gen : generators) {
            const ComplexMatrix candidate = canonicalize_phase(group[i] * gen, tol);
            const bool known = std::any_of(group.begin(), group.end(), [&](const ComplexMatrix& g) {
                return g.max_abs_diff(candidate) < tol;
            });
            if (!known) group.push_back(candidate);
        }
    }
    std::sort(group.begin(), group.end(), [](const ComplexMatrix& a, const ComplexMatrix& b) {
        return sort_key(a) < sort_key(b);
    });
    GateSet set;
    for (std::size_t i = 0; i < group.size(); ++i) {
        set.names.push_back(clifford_name(group[i], i, tol));
        set.gates.push_back(group[i]);
    }
    return set;
}

}  // namespace oracle_lens
