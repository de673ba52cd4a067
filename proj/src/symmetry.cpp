#include "tangnet/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tangnet {

namespace {

constexpr double kUnitaryTol = 1e-10;

void check_unitary(const CMatrix& u, const char* what) {
    if (u.rows() != u.cols()) {
        throw ArgumentError(std::string(what) + " must be square");
    }
    const CMatrix gram = u.adjoint() * u;
    const CMatrix residual = gram - CMatrix::identity(u.rows());
    if (residual.frobenius_norm() > kUnitaryTol) {
        throw ArgumentError(std::string(what) + " is not unitary");
    }
}

void check_bipartite(const PureState& psi, const char* what) {
    if (psi.space().party_count() != 2) {
        throw ArgumentError(std::string(what) + " requires a bipartite state");
    }
}

bool is_two_qubit(const PureState& psi) {
    return psi.space().party_count() == 2 && psi.space().parties()[0].dim == 2 &&
           psi.space().parties()[1].dim == 2;
}

PartySet first_party(const PureState& psi) {
    return PartySet{psi.space().parties()[0].label};
}

// projector-sum unitary sum_k e^{i phase_k} |v_k><v_k| + identity on the rest
CMatrix phase_unitary(const CMatrix& basis, const std::vector<double>& phases,
                      std::size_t dim) {
    std::vector<Complex> entries(dim * dim, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        entries[i * dim + i] = Complex(1.0, 0.0);
    }
    for (std::size_t k = 0; k < phases.size(); ++k) {
        const Complex factor =
            Complex(std::cos(phases[k]), std::sin(phases[k])) - Complex(1.0, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            const Complex vi = basis(i, k);
            if (vi == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                entries[i * dim + j] += factor * vi * std::conj(basis(j, k));
            }
        }
    }
    return CMatrix(dim, dim, std::move(entries));
}

} // namespace

LocalUnitaryPair::LocalUnitaryPair(CMatrix a, CMatrix b)
    : u_a(std::move(a)), u_b(std::move(b)) {
    check_unitary(u_a, "u_a");
    check_unitary(u_b, "u_b");
}

double state_distance_up_to_phase(const PureState& before, const PureState& after) {
    const Complex ov = before.overlap(after);
    const double phi = std::arg(ov);
    const Complex phase(std::cos(phi), std::sin(phi));
    double d_sq = 0.0;
    for (std::size_t i = 0; i < before.amplitudes().size(); ++i) {
        d_sq += std::norm(after.amplitudes()[i] - phase * before.amplitudes()[i]);
    }
    return std::sqrt(d_sq);
}

double schmidt_spectrum_distance(const PureState& before, const PureState& after) {
    std::vector<double> a = schmidt(before, first_party(before)).coefficients;
    std::vector<double> b = schmidt(after, first_party(after)).coefficients;
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double d_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        d_sq += (a[k] - b[k]) * (a[k] - b[k]);
    }
    return std::sqrt(d_sq);
}

LocalUnitaryPair envariance_counterpart(const PureState& psi,
                                        const std::vector<double>& phases) {
    check_bipartite(psi, "envariance_counterpart");
    const SchmidtDecomposition sd = schmidt(psi, first_party(psi));
    if (phases.size() != sd.rank()) {
        throw ArgumentError("expected " + std::to_string(sd.rank()) +
                            " phases (Schmidt rank), got " +
                            std::to_string(phases.size()));
    }
    std::vector<double> negated(phases.size());
    std::transform(phases.begin(), phases.end(), negated.begin(),
                   [](double p) { return -p; });
    const std::size_t dim_a = psi.space().parties()[0].dim;
    const std::size_t dim_b = psi.space().parties()[1].dim;
    return LocalUnitaryPair(phase_unitary(sd.left_basis, phases, dim_a),
                            phase_unitary(sd.right_basis, negated, dim_b));
}

PureState apply_unitary_pair(const PureState& psi, const LocalUnitaryPair& pair) {
    check_bipartite(psi, "apply_unitary_pair");
    const std::size_t dim_a = psi.space().parties()[0].dim;
    const std::size_t dim_b = psi.space().parties()[1].dim;
    if (pair.u_a.rows() != dim_a || pair.u_b.rows() != dim_b) {
        throw DimensionError("unitary pair does not match the party dimensions");
    }
    const auto& in = psi.amplitudes();
    std::vector<Complex> out(in.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
            Complex sum(0.0, 0.0);
            for (std::size_t k = 0; k < dim_a; ++k) {
                for (std::size_t l = 0; l < dim_b; ++l) {
                    sum += pair.u_a(i, k) * pair.u_b(j, l) * in[k * dim_b + l];
                }
            }
            out[i * dim_b + j] = sum;
        }
    }
    // unitarity keeps the norm at 1 up to roundoff; tidy it anyway
    double norm_sq = 0.0;
    for (const Complex& a : out) norm_sq += std::norm(a);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : out) a *= inv;
    return PureState(psi.space(), std::move(out));
}

std::pair<PureState, SymmetryVerdict> apply_local_rotation(const PureState& psi,
                                                           const CMatrix& u) {
    check_bipartite(psi, "apply_local_rotation");
    check_unitary(u, "rotation");
    const std::size_t dim_a = psi.space().parties()[0].dim;
    const std::size_t dim_b = psi.space().parties()[1].dim;
    if (u.rows() != dim_a || u.rows() != dim_b) {
        throw DimensionError("identical rotation requires equal party dimensions "
                             "matching the unitary");
    }
    const PureState after = apply_unitary_pair(psi, LocalUnitaryPair(u, u));

    SymmetryVerdict verdict;
    verdict.operation = "rotation";
    verdict.state_distance = state_distance_up_to_phase(psi, after);
    verdict.schmidt_spectrum_distance = schmidt_spectrum_distance(psi, after);
    verdict.structure_class_changed =
        is_two_qubit(psi) && !(classify_state(psi) == classify_state(after));
    return {after, verdict};
}

std::pair<PureState, SymmetryVerdict> apply_permutation(const PureState& psi) {
    check_bipartite(psi, "apply_permutation");
    const std::size_t dim_a = psi.space().parties()[0].dim;
    const std::size_t dim_b = psi.space().parties()[1].dim;
    if (dim_a != dim_b) {
        throw ArgumentError("permutation requires equal party dimensions");
    }
    const auto& in = psi.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
            out[j * dim_a + i] = in[i * dim_b + j];
        }
    }
    const PureState after(psi.space(), std::move(out));

    SymmetryVerdict verdict;
    verdict.operation = "swap";
    verdict.state_distance = state_distance_up_to_phase(psi, after);
    verdict.schmidt_spectrum_distance = schmidt_spectrum_distance(psi, after);
    verdict.structure_class_changed =
        is_two_qubit(psi) && !(classify_state(psi) == classify_state(after));
    return {after, verdict};
}

OutInSummary out_in_suite(const PureState& psi, std::size_t trials,
                          std::uint64_t seed) {
    return symmetry_trials(psi, "suite", trials, seed);
}

OutInSummary symmetry_trials(const PureState& psi, const std::string& op_name,
                             std::size_t trials, std::uint64_t seed) {
    check_bipartite(psi, "out_in_suite");
    const std::size_t dim_a = psi.space().parties()[0].dim;
    const std::size_t dim_b = psi.space().parties()[1].dim;
    const bool swappable = dim_a == dim_b;

    std::size_t fixed_op = 3; // mixed
    if (op_name == "envariance") {
        fixed_op = 0;
    } else if (op_name == "rotation") {
        fixed_op = 1;
    } else if (op_name == "swap") {
        fixed_op = 2;
        if (!swappable) {
            throw ArgumentError("swap requires equal party dimensions");
        }
    } else if (op_name != "suite") {
        throw ArgumentError("unknown symmetry operation '" + op_name + "'");
    }

    OutInSummary summary;
    summary.trials = trials;
    summary.classes_tracked = is_two_qubit(psi);

    SplitMix64 root(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng = root.split(t);
        std::size_t op = fixed_op == 3 ? rng.next_u64() % 3 : fixed_op;
        if (op == 2 && !swappable) op = 1;

        if (op == 0) {
            const std::size_t rank = schmidt(psi, first_party(psi)).rank();
            std::vector<double> phases(rank);
            for (double& p : phases) {
                p = 2.0 * std::numbers::pi * rng.next_double();
            }
            const LocalUnitaryPair pair = envariance_counterpart(psi, phases);
            const PureState after = apply_unitary_pair(psi, pair);
            double residual_sq = 0.0;
            for (std::size_t i = 0; i < after.amplitudes().size(); ++i) {
                residual_sq +=
                    std::norm(after.amplitudes()[i] - psi.amplitudes()[i]);
            }
            summary.worst_envariance_residual = std::max(
                summary.worst_envariance_residual, std::sqrt(residual_sq));
            summary.worst_spectrum_distance =
                std::max(summary.worst_spectrum_distance,
                         schmidt_spectrum_distance(psi, after));
            ++summary.op_counts["envariance"];
        } else if (op == 1) {
            const CMatrix u = haar_random_unitary(dim_a, rng.next_u64());
            PureState after = psi;
            SymmetryVerdict verdict;
            if (swappable) {
                auto [state, v] = apply_local_rotation(psi, u);
                after = std::move(state);
                verdict = v;
            } else {
                // unequal dims: independent factors, same invariant
                const CMatrix u_b = haar_random_unitary(dim_b, rng.next_u64());
                after = apply_unitary_pair(psi, LocalUnitaryPair(u, u_b));
                verdict.state_distance = state_distance_up_to_phase(psi, after);
                verdict.schmidt_spectrum_distance =
                    schmidt_spectrum_distance(psi, after);
                verdict.structure_class_changed = false;
            }
            summary.worst_state_distance =
                std::max(summary.worst_state_distance, verdict.state_distance);
            summary.worst_spectrum_distance = std::max(
                summary.worst_spectrum_distance, verdict.schmidt_spectrum_distance);
            if (summary.classes_tracked && verdict.structure_class_changed) {
                summary.rotation_class_always_preserved = false;
            }
            ++summary.op_counts["rotation"];
        } else {
            const auto [after, verdict] = apply_permutation(psi);
            summary.worst_state_distance =
                std::max(summary.worst_state_distance, verdict.state_distance);
            summary.worst_spectrum_distance = std::max(
                summary.worst_spectrum_distance, verdict.schmidt_spectrum_distance);
            if (summary.classes_tracked && verdict.structure_class_changed) {
                summary.swap_class_always_preserved = false;
            }
            ++summary.op_counts["swap"];
        }
    }
    return summary;
}

} // namespace tangnet
