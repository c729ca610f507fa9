#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracle_lens/errors.hpp"
#include "oracle_lens/linalg.hpp"
#include "oracle_lens/oracle.hpp"

using namespace oracle_lens;

namespace {

ComplexMatrix cnot(std::size_t control, std::size_t target) {
    // 2-qubit CNOT built directly from its permutation action.
    ComplexMatrix m(4);
    for (std::size_t x = 0; x < 4; ++x) {
        std::size_t y = x;
        if ((x >> control) & 1) y ^= std::size_t{1} << target;
        m.at(y, x) = 1.0;
    }
    return m;
}

}  // namespace

TEST_CASE("kron basics") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
              .max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

    // X on qubit 1 under the ordering contract: index 0 -> 2
    const ComplexMatrix xi = kron(gates::pauli_x(), ComplexMatrix::identity(2));
    CHECK(xi.at(2, 0) == Complex{1.0});
    CHECK(xi.at(0, 0) == Complex{0.0});

    const ComplexMatrix hh = kron(gates::hadamard(), gates::hadamard());
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(std::abs(std::abs(hh.at(r, c)) - 0.5) < 1e-12);
        }
    }
}

TEST_CASE("kron refuses to exceed the dimension cap") {
    ComplexMatrix big(1 << 11);
    CHECK_THROWS_AS(kron(big, ComplexMatrix::identity(4)), ResourceError);
}

TEST_CASE("embed_single_qubit") {
    const ComplexMatrix x1 = embed_single_qubit(gates::pauli_x(), 1, 2);
    CHECK(x1.at(2, 0) == Complex{1.0});
    CHECK(x1.at(3, 1) == Complex{1.0});

    CHECK(embed_single_qubit(gates::identity2(), 2, 4)
              .max_abs_diff(ComplexMatrix::identity(16)) == 0.0);
    CHECK(embed_single_qubit(gates::hadamard(), 0, 1).max_abs_diff(gates::hadamard()) == 0.0);

    ComplexMatrix not_unitary(2);
    not_unitary.at(0, 0) = 2.0;
    CHECK_THROWS_AS(embed_single_qubit(not_unitary, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_single_qubit(gates::pauli_x(), 2, 2), std::invalid_argument);
}

TEST_CASE("conjugate_by") {
    CHECK(conjugate_by(gates::pauli_x(), gates::hadamard()).max_abs_diff(gates::pauli_z()) < 1e-12);
    CHECK(conjugate_by(gates::pauli_y(), ComplexMatrix::identity(2))
              .max_abs_diff(gates::pauli_y()) == 0.0);

    // H(x)H turns CNOT(1->0) into CNOT(0->1); confirmed by direct product.
    const ComplexMatrix hh = kron(gates::hadamard(), gates::hadamard());
    const ComplexMatrix direct = hh.adjoint() * cnot(1, 0) * hh;
    CHECK(conjugate_by(cnot(1, 0), hh).max_abs_diff(direct) == 0.0);
    CHECK(direct.max_abs_diff(cnot(0, 1)) < 1e-12);

    CHECK_THROWS_AS(conjugate_by(cnot(0, 1), gates::hadamard()), std::invalid_argument);
}

TEST_CASE("equals strict and phase modes") {
    const Complex phase = std::polar(1.0, M_PI / 4.0);
    const ComplexMatrix a = cnot(0, 1);
    const ComplexMatrix b = a * phase;
    CHECK(equals(a, b, 1e-9, CompareMode::Phase));
    CHECK_FALSE(equals(a, b, 1e-9, CompareMode::Strict));
    CHECK_FALSE(equals(gates::pauli_x(), gates::pauli_z(), 1e-9, CompareMode::Strict));
    CHECK_FALSE(equals(gates::pauli_x(), gates::pauli_z(), 1e-9, CompareMode::Phase));
    CHECK(equals(a, a));
}

TEST_CASE("apply") {
    const StateVector up = StateVector::basis_state(2, 0);
    const StateVector plus = apply(gates::hadamard(), up);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus.amp(0) - s) < 1e-12);
    CHECK(std::abs(plus.amp(1) - s) < 1e-12);

    const StateVector down = apply(gates::pauli_x(), up);
    CHECK(down.amp(1) == Complex{1.0});

    const StateVector same = apply(ComplexMatrix::identity(2), plus);
    CHECK(std::abs(same.amp(0) - plus.amp(0)) == 0.0);
    CHECK(std::abs(same.norm() - 1.0) < 1e-12);
}

TEST_CASE("apply_single_qubit_inplace agrees with embed + apply") {
    StateVector s(8);
    s.amp(3) = std::sqrt(0.5);
    s.amp(6) = Complex(0, std::sqrt(0.5));
    for (std::size_t j = 0; j < 3; ++j) {
        StateVector inplace = s;
        apply_single_qubit_inplace(inplace, gates::hadamard(), j);
        const StateVector full = apply(embed_single_qubit(gates::hadamard(), j, 3), s);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(std::abs(inplace.amp(i) - full.amp(i)) < 1e-12);
        }
    }
}

TEST_CASE("conjugation round trip over random Clifford-built unitaries") {
    const GateSet cliffords = clifford_gate_set();
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> pick(0, cliffords.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + (trial % 3);
        auto random_product = [&] {
            ComplexMatrix out = ComplexMatrix::identity(std::size_t{1} << m);
            for (int step = 0; step < 4; ++step) {
                for (std::size_t j = 0; j < m; ++j) {
                    out = embed_single_qubit(cliffords.gates[pick(rng)], j, m) * out;
                }
            }
            return out;
        };
        const ComplexMatrix u = random_product();
        const ComplexMatrix b = random_product();
        CHECK(conjugate_by(conjugate_by(u, b), b.adjoint()).max_abs_diff(u) < 1e-12);
        CHECK(u.is_unitary(1e-12));
    }
}

TEST_CASE("embeds on different qubits commute, exhaustive over Cliffords m=3") {
    const GateSet cliffords = clifford_gate_set();
    REQUIRE(cliffords.size() == 24);
    for (std::size_t a = 0; a < cliffords.size(); ++a) {
        for (std::size_t b = 0; b < cliffords.size(); ++b) {
            const ComplexMatrix ga = embed_single_qubit(cliffords.gates[a], 0, 3);
            const ComplexMatrix gb = embed_single_qubit(cliffords.gates[b], 2, 3);
            REQUIRE((ga * gb).max_abs_diff(gb * ga) < 1e-12);
        }
    }
}

TEST_CASE("equals is reflexive and symmetric") {
    const GateSet cliffords = clifford_gate_set();
    for (std::size_t a = 0; a < cliffords.size(); ++a) {
        for (const CompareMode mode : {CompareMode::Strict, CompareMode::Phase}) {
            CHECK(equals(cliffords.gates[a], cliffords.gates[a], 1e-9, mode));
            for (std::size_t b = a + 1; b < cliffords.size(); ++b) {
                CHECK(equals(cliffords.gates[a], cliffords.gates[b], 1e-9, mode) ==
                      equals(cliffords.gates[b], cliffords.gates[a], 1e-9, mode));
            }
        }
    }
}

TEST_CASE("matrix JSON round trip") {
    const ComplexMatrix m = kron(gates::hadamard(), gates::phase_s());
    const ComplexMatrix back = ComplexMatrix::from_json(m.to_json());
    CHECK(back.max_abs_diff(m) == 0.0);
    CHECK_THROWS_AS(ComplexMatrix::from_json(nlohmann::json{{"dim", 2}, {"entries", {1, 2}}}),
                    std::invalid_argument);
}
