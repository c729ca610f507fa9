#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle_lens/ccp.hpp"
#include "oracle_lens/errors.hpp"

using namespace oracle_lens;

namespace {

ComplexMatrix cz() {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m.at(3, 3) = -1.0;
    return m;
}

ClassicalOracle random_permutation_oracle(std::size_t width, std::mt19937& rng) {
    std::vector<std::uint32_t> table(std::size_t{1} << width);
    std::iota(table.begin(), table.end(), 0u);
    std::shuffle(table.begin(), table.end(), rng);
    return ClassicalOracle(width, std::move(table));
}

}  // namespace

TEST_CASE("as_classical") {
    CHECK_FALSE(as_classical(gates::hadamard(), 1e-9, CompareMode::Strict).has_value());
    CHECK_FALSE(as_classical(gates::hadamard(), 1e-9, CompareMode::Phase).has_value());

    CHECK_FALSE(as_classical(cz(), 1e-9, CompareMode::Strict).has_value());
    const auto cz_phase = as_classical(cz(), 1e-9, CompareMode::Phase);
    REQUIRE(cz_phase.has_value());
    CHECK(cz_phase->oracle == ClassicalOracle::identity(2));
    CHECK_FALSE(cz_phase->strict);
    CHECK(std::abs(cz_phase->phases[3] + 1.0) < 1e-12);
    CHECK(std::abs(cz_phase->phases[0] - 1.0) < 1e-12);

    const ClassicalOracle f = standard_oracle(2, HiddenString{1, 0});
    const auto round_trip = as_classical(permutation_matrix(f), 1e-9, CompareMode::Strict);
    REQUIRE(round_trip.has_value());
    CHECK(round_trip->oracle == f);
    CHECK(round_trip->strict);
}

TEST_CASE("extract_ccp against the paper's actors") {
    // Steven's basis reads off the standard table directly.
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        const HiddenString k = HiddenString::from_index(ki, 2);
        const ComplexMatrix us = steven_quantum_oracle(2, k);
        const auto steven = extract_ccp(us, steven_assignment(3), 1e-9, CompareMode::Strict);
        REQUIRE(steven.has_value());
        CHECK(*steven == standard_oracle(2, k));

        const auto alice = extract_ccp(us, alice_assignment(3), 1e-9, CompareMode::Strict);
        REQUIRE(alice.has_value());
        CHECK(*alice == alice_oracle(2, k));
    }

    // Bob's basis does not make U_S(k=(1,0)) classical.
    CHECK_FALSE(extract_ccp(steven_quantum_oracle(2, HiddenString{1, 0}), bob_assignment(3), 1e-9,
                            CompareMode::Strict)
                    .has_value());
}

TEST_CASE("steven/alice extraction law, n <= 4, all k") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t ki = 0; ki < (std::uint64_t{1} << n); ++ki) {
            const HiddenString k = HiddenString::from_index(ki, n);
            const ComplexMatrix us = steven_quantum_oracle(n, k);
            REQUIRE(*extract_ccp(us, steven_assignment(n + 1), 1e-9, CompareMode::Strict) ==
                    standard_oracle(n, k));
            REQUIRE(*extract_ccp(us, alice_assignment(n + 1), 1e-9, CompareMode::Strict) ==
                    alice_oracle(n, k));
        }
    }
}

TEST_CASE("scan of the standard family over {I,H}, n=2") {
    std::vector<ComplexMatrix> units;
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        units.push_back(steven_quantum_oracle(2, HiddenString::from_index(ki, 2)));
    }
    const ScanResult scan = scan_family(units, 2, ih_gate_set(), CompareMode::Strict, 1e-9);
    CHECK(scan.records.size() == 8);
    CHECK(scan.assignments_scanned == 8);

    std::size_t family_classical = 0;
    for (const CCPRecord& r : scan.records) {
        if (!r.family_classical) continue;
        ++family_classical;
        REQUIRE(r.complexity.has_value());
        if (r.gate_names == std::vector<std::string>{"I", "I", "I"}) {
            CHECK(r.complexity->depth == 2);
            CHECK(r.family->member(std::uint64_t{3}) == standard_oracle(2, HiddenString{1, 1}));
        } else {
            CHECK(r.gate_names == std::vector<std::string>{"H", "H", "H"});
            CHECK(r.complexity->depth == 1);
            CHECK(r.family->member(std::uint64_t{3}) == alice_oracle(2, HiddenString{1, 1}));
        }
    }
    CHECK(family_classical == 2);

    REQUIRE(scan.optimal.size() == 1);
    CHECK(scan.records[scan.optimal[0]].gate_names == std::vector<std::string>{"H", "H", "H"});
}

TEST_CASE("scan with a single-gate set") {
    std::vector<ComplexMatrix> units;
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        units.push_back(steven_quantum_oracle(2, HiddenString::from_index(ki, 2)));
    }
    GateSet only_identity{{"I"}, {gates::identity2()}};
    const ScanResult scan = scan_family(units, 2, only_identity, CompareMode::Strict, 1e-9);
    REQUIRE(scan.records.size() == 1);
    CHECK(scan.records[0].family_classical);
    CHECK(scan.records[0].complexity->depth == 2);
}

TEST_CASE("identity family is classical under every Clifford assignment") {
    std::vector<ComplexMatrix> units(2, permutation_matrix(ClassicalOracle::identity(2)));
    GateSet small{{"H", "I", "S"}, {gates::hadamard(), gates::identity2(), gates::phase_s()}};
    const ScanResult scan = scan_family(units, 1, small, CompareMode::Phase, 1e-9);
    CHECK(scan.records.size() == 9);
    for (const CCPRecord& r : scan.records) {
        REQUIRE(r.family_classical);
        CHECK(r.family->member(std::uint64_t{0}) == ClassicalOracle::identity(2));
    }
}

TEST_CASE("scan budget is enforced") {
    std::vector<ComplexMatrix> units;
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        units.push_back(steven_quantum_oracle(2, HiddenString::from_index(ki, 2)));
    }
    CHECK_THROWS_AS(scan_family(units, 2, ih_gate_set(), CompareMode::Strict, 1e-9, 7),
                    ResourceError);
}

TEST_CASE("analyze_single: Bob's assignment works only for k supported on bit n") {
    const GateSet ih = ih_gate_set();
    const std::vector<std::string> bob_names{"H", "I", "H"};

    const auto hits_en = analyze_single(steven_quantum_oracle(2, HiddenString{0, 1}), ih,
                                        CompareMode::Strict, 1e-9);
    bool found_bob = false;
    for (const auto& hit : hits_en) {
        if (hit.gate_names == bob_names) {
            found_bob = true;
            CHECK(hit.oracle == bob_oracle(2, HiddenString{0, 1}));
        }
    }
    CHECK(found_bob);

    const auto hits_11 = analyze_single(steven_quantum_oracle(2, HiddenString{1, 1}), ih,
                                        CompareMode::Strict, 1e-9);
    for (const auto& hit : hits_11) {
        CHECK(hit.gate_names != bob_names);
    }

    const auto all = analyze_single(ComplexMatrix::identity(8), ih, CompareMode::Strict, 1e-9);
    CHECK(all.size() == 8);
}

TEST_CASE("family-classical records are a subset of per-member successes") {
    std::vector<ComplexMatrix> units;
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        units.push_back(steven_quantum_oracle(2, HiddenString::from_index(ki, 2)));
    }
    const ScanResult scan = scan_family(units, 2, ih_gate_set(), CompareMode::Strict, 1e-9);
    for (const CCPRecord& r : scan.records) {
        if (!r.family_classical) continue;
        for (std::size_t k = 0; k < units.size(); ++k) {
            const auto hits = analyze_single(units[k], ih_gate_set(), CompareMode::Strict, 1e-9);
            CHECK(std::any_of(hits.begin(), hits.end(), [&](const SingleAssignmentHit& h) {
                return h.gate_names == r.gate_names;
            }));
        }
    }
}

TEST_CASE("round trip over random permutations and Clifford assignments") {
    const GateSet cliffords = clifford_gate_set();
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> pick(0, cliffords.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + (trial % 3);
        const ClassicalOracle f = random_permutation_oracle(m, rng);
        std::vector<std::string> names;
        std::vector<ComplexMatrix> gs;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t g = pick(rng);
            names.push_back(cliffords.names[g]);
            gs.push_back(cliffords.gates[g]);
        }
        const LocalBasisAssignment basis(names, gs);
        const ComplexMatrix u = quantum_oracle(f, basis);

        const auto strict = extract_ccp(u, basis, 1e-9, CompareMode::Strict);
        REQUIRE(strict.has_value());
        REQUIRE(*strict == f);

        // Strict success implies phase success with unit phases.
        const auto phase = as_classical(conjugate_by(u, basis.full()), 1e-9, CompareMode::Phase);
        REQUIRE(phase.has_value());
        CHECK(phase->strict);
        for (const Complex& p : phase->phases) {
            CHECK(std::abs(p - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("identity assignments never change classicality or the table") {
    const GateSet cliffords = clifford_gate_set();
    for (std::uint64_t ki = 0; ki < 4; ++ki) {
        const HiddenString k = HiddenString::from_index(ki, 2);
        const ComplexMatrix us = steven_quantum_oracle(2, k);
        const auto direct = as_classical(us, 1e-9, CompareMode::Strict);
        const auto conjugated = extract_ccp(us, steven_assignment(3), 1e-9, CompareMode::Strict);
        REQUIRE(direct.has_value());
        REQUIRE(conjugated.has_value());
        CHECK(direct->oracle == *conjugated);
    }
}
