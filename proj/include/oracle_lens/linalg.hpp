#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <json.hpp>

namespace oracle_lens {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

// Dense matrices only; operations that would exceed this refuse to run.
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 12;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scalar) const;

    bool is_unitary(double tol = kDefaultTol) const;
    double max_abs_diff(const ComplexMatrix& other) const;

    nlohmann::json to_json() const;
    static ComplexMatrix from_json(const nlohmann::json& j);

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Normalized state of m qubits, 2^m amplitudes in the reference basis.
class StateVector {
  public:
    explicit StateVector(std::size_t dim);
    static StateVector basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    Complex& amp(std::size_t i) { return amps_[i]; }
    const Complex& amp(std::size_t i) const { return amps_[i]; }
    double norm() const;

  private:
    std::vector<Complex> amps_;
};

// Tensor product. The full operator on m qubits is built as
// g_{m-1} (x) ... (x) g_1 (x) g_0, so qubit 0 is the least-significant
// index factor, matching encode_index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t dim_cap = kDefaultDimCap);

// I (x) ... (x) g (x) ... (x) I with g at factor position j.
ComplexMatrix embed_single_qubit(const ComplexMatrix& g, std::size_t j, std::size_t m,
                                 double tol = kDefaultTol);

// B^dagger * U * B.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& b,
                           double tol = kDefaultTol);

enum class CompareMode { Strict, Phase };

// Strict: max-norm of the difference below tol. Phase: both matrices are
// first normalized by their entry at the position of a's largest-modulus
// entry, then compared strictly.
bool equals(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol,
            CompareMode mode = CompareMode::Strict);

StateVector apply(const ComplexMatrix& u, const StateVector& s, double tol = kDefaultTol);

// In-place 2x2 gate on qubit j of an m-qubit state.
void apply_single_qubit_inplace(StateVector& s, const ComplexMatrix& g, std::size_t j);

namespace gates {
ComplexMatrix identity2();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix phase_s();
}  // namespace gates

}  // namespace oracle_lens
