#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle_lens/bitvec.hpp"
#include "oracle_lens/linalg.hpp"

namespace oracle_lens {

/// Reversible map on m-bit strings stored as a full permutation table:
/// table[encode_index(x)] = encode_index(f(x)).
class ClassicalOracle {
  public:
    ClassicalOracle(std::size_t width, std::vector<std::uint32_t> table);
    static ClassicalOracle identity(std::size_t width);

    std::size_t width() const { return width_; }
    std::size_t table_size() const { return table_.size(); }
    std::uint32_t apply_index(std::uint64_t input) const;
    BitString apply(const BitString& x) const;
    const std::vector<std::uint32_t>& table() const { return table_; }

    bool operator==(const ClassicalOracle&) const = default;

  private:
    std::size_t width_;
    std::vector<std::uint32_t> table_;
};

enum class FamilyKind { Standard, Alice, Bob };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// The indexed family {O(k)} over all 2^n hidden strings, width n+1 each.
class OracleFamily {
  public:
    OracleFamily(std::size_t n, std::string kind, std::vector<ClassicalOracle> members);

    std::size_t n() const { return n_; }
    std::size_t width() const { return n_ + 1; }
    std::size_t size() const { return members_.size(); }
    const std::string& kind() const { return kind_; }
    const ClassicalOracle& member(std::uint64_t k_index) const { return members_.at(k_index); }
    const ClassicalOracle& member(const HiddenString& k) const { return members_.at(k.index()); }

  private:
    std::size_t n_;
    std::string kind_;
    std::vector<ClassicalOracle> members_;
};

ClassicalOracle standard_oracle(std::size_t n, const HiddenString& k);
ClassicalOracle alice_oracle(std::size_t n, const HiddenString& k);
ClassicalOracle bob_oracle(std::size_t n, const HiddenString& k);
OracleFamily build_family(FamilyKind kind, std::size_t n);

// P[f(x), x] = 1, zero elsewhere.
ComplexMatrix permutation_matrix(const ClassicalOracle& f);

/// One 2x2 unitary per qubit; gate j's columns are the chosen |0_j> and
/// |1_j> expressed in the reference basis.
class LocalBasisAssignment {
  public:
    LocalBasisAssignment(std::vector<std::string> names, std::vector<ComplexMatrix> gates,
                         double tol = kDefaultTol);

    std::size_t width() const { return gates_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const ComplexMatrix& gate(std::size_t j) const { return gates_.at(j); }

    // Tensor product b_{m-1} (x) ... (x) b_0.
    ComplexMatrix full() const;

  private:
    std::vector<std::string> names_;
    std::vector<ComplexMatrix> gates_;
};

// The paper's three actors, on m = n+1 qubits. Bob's is Hadamard at
// positions 0 and n, identity elsewhere; for n = 1 it coincides with
// Alice's all-Hadamard choice.
LocalBasisAssignment steven_assignment(std::size_t m);
LocalBasisAssignment alice_assignment(std::size_t m);
LocalBasisAssignment bob_assignment(std::size_t m);

// B_full * permutation_matrix(f) * B_full^dagger: the unitary whose action
// on the basis chosen by B follows f.
ComplexMatrix quantum_oracle(const ClassicalOracle& f, const LocalBasisAssignment& basis);

// U_S(k), U_A(k), U_B(k): each actor's classical rule lifted through that
// actor's own basis choice.
ComplexMatrix steven_quantum_oracle(std::size_t n, const HiddenString& k);
ComplexMatrix alice_quantum_oracle(std::size_t n, const HiddenString& k);
ComplexMatrix bob_quantum_oracle(std::size_t n, const HiddenString& k);
ComplexMatrix quantum_oracle_for_kind(FamilyKind kind, std::size_t n, const HiddenString& k);

/// A named set of candidate single-qubit basis gates for the CCP scanner.
struct GateSet {
    std::vector<std::string> names;
    std::vector<ComplexMatrix> gates;

    std::size_t size() const { return gates.size(); }
};

// {I, H}: the smallest set containing all three actors' choices.
GateSet ih_gate_set();

// The 24 single-qubit Cliffords modulo global phase, generated by closure
// of {H, S}, each canonicalized so its first nonzero entry is real positive.
GateSet clifford_gate_set();

}  // namespace oracle_lens
