// symmetry.hpp
// Executable checks of the out-in symmetry: envariant unitary pairs, local
// base rotations applied to both parties, and party permutation. "Global
// property" is operationalized as the pair (Schmidt coefficient multiset,
// structure class); all three readings of invariance are measured and
// reported, never silently assumed.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "tangnet/structure.hpp"

namespace tangnet {

// Local unitaries on the two parties; each factor is validated against
// ||U^dagger U - I||_F <= 1e-10.
struct LocalUnitaryPair {
    CMatrix u_a;
    CMatrix u_b;

    LocalUnitaryPair(CMatrix a, CMatrix b);
};

struct SymmetryVerdict {
    std::string operation;
    double state_distance; // ||after - e^{i phi} before||, phi = arg<before|after>
    bool structure_class_changed;
    double schmidt_spectrum_distance;
};

// ||after - e^{i phi} before|| minimized over the global phase.
double state_distance_up_to_phase(const PureState& before, const PureState& after);

// l2 distance between descending Schmidt spectra (cut at the first party),
// shorter spectrum padded with zeros.
double schmidt_spectrum_distance(const PureState& before, const PureState& after);

// Envariant counterpart per Schmidt index: U_A = sum e^{+i phi_k}|a_k><a_k|,
// U_B = sum e^{-i phi_k}|b_k><b_k| in the Schmidt bases, identity on the
// complement. (U_A tensor U_B) leaves psi fixed. Phase count must equal the
// Schmidt rank; degenerate spectra are resolved by the deterministic
// eigensolver ordering.
LocalUnitaryPair envariance_counterpart(const PureState& psi,
                                        const std::vector<double>& phases);

PureState apply_unitary_pair(const PureState& psi, const LocalUnitaryPair& pair);

// The same rotation on both parties (u tensor u). The Schmidt spectrum is
// preserved; the computational-basis branch pattern generally is not, which
// the verdict reports rather than hides.
std::pair<PureState, SymmetryVerdict> apply_local_rotation(const PureState& psi,
                                                           const CMatrix& u);

// SWAP of the two (equal-dimension) parties. The structure class never
// changes (mirror equivalence); state-level invariance up to a global phase
// holds only for symmetric/antisymmetric states and is reported, not
// asserted.
std::pair<PureState, SymmetryVerdict> apply_permutation(const PureState& psi);

// Worst-case distances over `trials` seeded random operations drawn from
// {envariant pair, identical local rotation, permutation}.
struct OutInSummary {
    std::size_t trials = 0;
    std::map<std::string, std::size_t> op_counts;
    double worst_state_distance = 0.0;          // swap/rotation state movement
    double worst_spectrum_distance = 0.0;       // over every trial
    double worst_envariance_residual = 0.0;     // ||(UA x UB)psi - psi||, no phase
    bool swap_class_always_preserved = true;    // two-qubit states only
    bool rotation_class_always_preserved = true;
    bool classes_tracked = false;
};

OutInSummary out_in_suite(const PureState& psi, std::size_t trials,
                          std::uint64_t seed);

// The same trials engine restricted to one operation kind: "envariance",
// "rotation", "swap", or the mixed "suite".
OutInSummary symmetry_trials(const PureState& psi, const std::string& op,
                             std::size_t trials, std::uint64_t seed);

} // namespace tangnet
