#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tangnet/symmetry.hpp"

using namespace tangnet;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

MultipartiteSpace two_qubits() {
    return MultipartiteSpace({Party{"A", 2}, Party{"B", 2}});
}

PureState bell_phi_plus() {
    return PureState(two_qubits(), {Complex(kInvSqrt2, 0), Complex(0, 0),
                                    Complex(0, 0), Complex(kInvSqrt2, 0)});
}

PureState singlet() {
    return PureState(two_qubits(), {Complex(0, 0), Complex(kInvSqrt2, 0),
                                    Complex(-kInvSqrt2, 0), Complex(0, 0)});
}

PureState fig2_state() {
    return PureState(two_qubits(), {Complex(0, 0), Complex(kInvSqrt2, 0),
                                    Complex(0, -kInvSqrt2), Complex(0, 0)});
}

// the operation-a display, normalized to a unitary:
// |0> -> (|0> + i|1>)/sqrt2, |1> -> (|0> - i|1>)/sqrt2
CMatrix paper_rotation() {
    return CMatrix(2, 2,
                   {Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0),
                    Complex(0, kInvSqrt2), Complex(0, -kInvSqrt2)});
}

double raw_distance(const PureState& a, const PureState& b) {
    double d_sq = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        d_sq += std::norm(a.amplitudes()[i] - b.amplitudes()[i]);
    }
    return std::sqrt(d_sq);
}

} // namespace

TEST_CASE("local unitary pair validation") {
    CHECK_NOTHROW(LocalUnitaryPair(CMatrix::identity(2), paper_rotation()));
    const CMatrix not_unitary(2, 2, {Complex(1, 0), Complex(1, 0), Complex(0, 0),
                                     Complex(1, 0)});
    CHECK_THROWS_AS(LocalUnitaryPair(not_unitary, CMatrix::identity(2)),
                    ArgumentError);
}

TEST_CASE("envariance with zero phases is the identity pair") {
    const PureState psi = bell_phi_plus();
    const LocalUnitaryPair pair = envariance_counterpart(psi, {0.0, 0.0});
    CHECK(pair.u_a.max_abs_diff(CMatrix::identity(2)) < 1e-10);
    CHECK(pair.u_b.max_abs_diff(CMatrix::identity(2)) < 1e-10);
}

TEST_CASE("envariance on the Bell state with phases (pi/2, 0)") {
    const PureState psi = bell_phi_plus();
    const LocalUnitaryPair pair =
        envariance_counterpart(psi, {std::numbers::pi / 2.0, 0.0});

    // in the Schmidt basis (computational here): diag(i, 1) against diag(-i, 1)
    CHECK(std::abs(pair.u_a(0, 0) - Complex(0, 1)) < 1e-10);
    CHECK(std::abs(pair.u_a(1, 1) - Complex(1, 0)) < 1e-10);
    CHECK(std::abs(pair.u_b(0, 0) - Complex(0, -1)) < 1e-10);
    CHECK(std::abs(pair.u_b(1, 1) - Complex(1, 0)) < 1e-10);

    const PureState after = apply_unitary_pair(psi, pair);
    CHECK(raw_distance(psi, after) <= 1e-8);
}

TEST_CASE("envariance on a product state only shifts the global phase") {
    const PureState psi(two_qubits(), {Complex(0, 0), Complex(1, 0), Complex(0, 0),
                                       Complex(0, 0)});
    const LocalUnitaryPair pair = envariance_counterpart(psi, {1.234});
    const PureState after = apply_unitary_pair(psi, pair);
    CHECK(state_distance_up_to_phase(psi, after) <= 1e-8);
    CHECK_THROWS_AS(envariance_counterpart(psi, {0.0, 1.0}), ArgumentError);
}

TEST_CASE("envariance contract on random states and phases") {
    SplitMix64 rng(12121);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t da = 2 + rng.next_u64() % 3;
        const std::size_t db = 2 + rng.next_u64() % 3;
        const MultipartiteSpace s({Party{"A", da}, Party{"B", db}});
        const PureState psi(s, haar_random_amplitudes({da, db}, rng.next_u64()));
        const std::size_t rank = schmidt(psi, {"A"}).rank();
        std::vector<double> phases(rank);
        for (double& p : phases) {
            p = 2.0 * std::numbers::pi * rng.next_double();
        }
        const PureState after =
            apply_unitary_pair(psi, envariance_counterpart(psi, phases));
        CHECK(raw_distance(psi, after) <= 1e-8);
    }
}

TEST_CASE("identity rotation moves nothing") {
    const auto [after, verdict] = apply_local_rotation(bell_phi_plus(),
                                                       CMatrix::identity(2));
    CHECK(verdict.state_distance <= 1e-12);
    CHECK(verdict.schmidt_spectrum_distance <= 1e-12);
    CHECK_FALSE(verdict.structure_class_changed);
}

TEST_CASE("the paper rotation preserves the figure-2 spectrum") {
    const auto [after, verdict] = apply_local_rotation(fig2_state(), paper_rotation());
    CHECK(verdict.schmidt_spectrum_distance <= 1e-8);
    const SchmidtDecomposition sd = schmidt(after, {"A"});
    REQUIRE(sd.coefficients.size() == 2);
    CHECK(sd.coefficients[0] == doctest::Approx(kInvSqrt2).epsilon(1e-10));
    CHECK(sd.coefficients[1] == doctest::Approx(kInvSqrt2).epsilon(1e-10));
}

TEST_CASE("a flip on both parties") {
    const CMatrix flip(2, 2, {Complex(0, 0), Complex(1, 0), Complex(1, 0),
                              Complex(0, 0)});

    // phi+ is a fixed point of the double flip
    const auto [same, v1] = apply_local_rotation(bell_phi_plus(), flip);
    CHECK(v1.state_distance <= 1e-12);
    CHECK(v1.schmidt_spectrum_distance <= 1e-8);

    // |00> genuinely moves, the (trivial) spectrum does not
    const PureState zero(two_qubits(), {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                                        Complex(0, 0)});
    const auto [moved, v2] = apply_local_rotation(zero, flip);
    CHECK(std::abs(moved.amplitudes()[3] - Complex(1, 0)) < 1e-12);
    CHECK(v2.state_distance > 0.1);
    CHECK(v2.schmidt_spectrum_distance <= 1e-8);
}

TEST_CASE("rotation rejects non-unitary input") {
    const CMatrix bad(2, 2, {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                             Complex(2, 0)});
    CHECK_THROWS_AS(apply_local_rotation(bell_phi_plus(), bad), ArgumentError);
}

TEST_CASE("swap on symmetric and antisymmetric states") {
    const auto [same, v1] = apply_permutation(bell_phi_plus());
    CHECK(raw_distance(same, bell_phi_plus()) <= 1e-12);
    CHECK(v1.state_distance <= 1e-12);
    CHECK_FALSE(v1.structure_class_changed);

    // the singlet picks up exactly a global sign
    const auto [flipped, v2] = apply_permutation(singlet());
    CHECK(std::abs(flipped.amplitudes()[1] - Complex(-kInvSqrt2, 0)) < 1e-12);
    CHECK(v2.state_distance <= 1e-12);
    CHECK_FALSE(v2.structure_class_changed);
}

TEST_CASE("swap moves the figure-2 state but not its class") {
    const auto [after, verdict] = apply_permutation(fig2_state());
    // the swapped state is the theta = 90 family member, a genuinely
    // different vector
    CHECK(verdict.state_distance > 0.1);
    CHECK(verdict.schmidt_spectrum_distance <= 1e-10);
    CHECK_FALSE(verdict.structure_class_changed);
}

TEST_CASE("swap is an involution") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const MultipartiteSpace s({Party{"A", 3}, Party{"B", 3}});
        const PureState psi(s, haar_random_amplitudes({3, 3}, rng.next_u64()));
        const PureState twice = apply_permutation(apply_permutation(psi).first).first;
        CHECK(raw_distance(psi, twice) <= 1e-12);
    }
    CHECK_THROWS_AS(
        apply_permutation(PureState(MultipartiteSpace({Party{"A", 2}, Party{"B", 3}}),
                                    haar_random_amplitudes({2, 3}, 5))),
        ArgumentError);
}

TEST_CASE("swap preserves the class of every enumerated family candidate") {
    for (Pairing pairing : {Pairing::Symmetric, Pairing::Asymmetric}) {
        for (double theta : {0.0, 90.0, 180.0, 270.0}) {
            const PureState psi = family_state({pairing, 45.0, theta});
            const auto [after, verdict] = apply_permutation(psi);
            CHECK_FALSE(verdict.structure_class_changed);
        }
    }
}

TEST_CASE("spectrum invariance under independent local unitaries") {
    SplitMix64 rng(99999);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t da = 2 + rng.next_u64() % 2;
        const std::size_t db = 2 + rng.next_u64() % 2;
        const MultipartiteSpace s({Party{"A", da}, Party{"B", db}});
        const PureState psi(s, haar_random_amplitudes({da, db}, rng.next_u64()));
        const LocalUnitaryPair pair(haar_random_unitary(da, rng.next_u64()),
                                    haar_random_unitary(db, rng.next_u64()));
        const PureState after = apply_unitary_pair(psi, pair);
        CHECK(schmidt_spectrum_distance(psi, after) <= 1e-8);
    }
}

TEST_CASE("out-in suite on fixture states") {
    SUBCASE("product state stays rank one") {
        const PureState psi(two_qubits(), {Complex(1, 0), Complex(0, 0),
                                           Complex(0, 0), Complex(0, 0)});
        const OutInSummary summary = out_in_suite(psi, 60, 11);
        CHECK(summary.worst_spectrum_distance <= 1e-8);
        CHECK(summary.worst_envariance_residual <= 1e-8);
        CHECK(summary.swap_class_always_preserved);
    }
    SUBCASE("Bell state: spectrum held to 1e-8 over 100 trials") {
        const OutInSummary summary = out_in_suite(bell_phi_plus(), 100, 22);
        CHECK(summary.worst_spectrum_distance <= 1e-8);
        CHECK(summary.worst_envariance_residual <= 1e-8);
        CHECK(summary.swap_class_always_preserved);
        CHECK(summary.trials == 100);
    }
    SUBCASE("random 3x3 state: spectrum held over 100 trials") {
        const MultipartiteSpace s({Party{"A", 3}, Party{"B", 3}});
        const PureState psi(s, haar_random_amplitudes({3, 3}, 4711));
        const OutInSummary summary = out_in_suite(psi, 100, 33);
        CHECK(summary.worst_spectrum_distance <= 1e-8);
        CHECK(summary.worst_envariance_residual <= 1e-8);
    }
}

TEST_CASE("suite results are reproducible for a fixed seed") {
    const OutInSummary a = out_in_suite(bell_phi_plus(), 40, 123);
    const OutInSummary b = out_in_suite(bell_phi_plus(), 40, 123);
    CHECK(a.worst_spectrum_distance == b.worst_spectrum_distance);
    CHECK(a.worst_envariance_residual == b.worst_envariance_residual);
    CHECK(a.op_counts == b.op_counts);
}
