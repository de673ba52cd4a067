// infometrics.hpp
// Von Neumann entropy and the mutual-information decompositions over the
// partition models, plus the two worked demos (double-slit visibility and
// Rabi entanglement). All quantities are reported in bits.

#pragma once

#include <map>
#include <string>

#include "tangnet/states.hpp"

namespace tangnet {

// Named entropy terms plus the composite multi-world mutual information and
// its four-term breakdown. `total` always equals
//   joint - env - cond_12 - cond_21
// by the same floating-point arithmetic that produced the terms.
struct MutualInfoReport {
    std::string model;
    std::map<std::string, double> entropies; // bits, keyed S_<roles>

    double term_joint;   // I(S1E1 : S2E2)
    double term_env;     // I(E1 : E2)
    double term_cond_12; // I(E1 : S2 | E2)
    double term_cond_21; // I(E2 : S1 | E1)
    double total;
    double eq_conditional_form; // I(S1E1:S2E2) - I(E1:E2), the case-(4) shape

    // reduction cases, by role-group shape and by the conditional terms
    bool case_shared_env_only; // E1 = E2 = empty, E0 present
    bool case_single_env;      // exactly one of E1, E2 empty
    bool case_pure_universe;   // E0 absent: the S1E1S2E2 state is pure
    bool case_conditionals_vanish; // both conditional terms <= 1e-9
};

// -sum lambda log2 lambda over the clamped spectrum; 0*log0 := 0.
// Eigenvalues in [-1e-10, 0) are clamped to 0; anything lower raises
// InvalidDensityError.
double entropy(const DensityOperator& rho);

// S_a + S_b - S_ab from partial traces; a and b disjoint, nonempty.
double mutual_info(const DensityOperator& rho, const PartySet& a, const PartySet& b);

// Mutual information of a pure state across the (system | env) cut, with the
// classical/quantum split: total = 2 S_E, classical = S_E, quantum = S_E.
struct PureBipartiteMutualInfo {
    double total;
    double classical_part;
    double quantum_part;
};

PureBipartiteMutualInfo mutual_info_pure_bipartite(const PureState& psi,
                                                   const PartySet& env);

// I(a:b|c) = S_ac + S_bc - S_c - S_abc; c may be empty (plain mutual info).
double conditional_mutual_info(const DensityOperator& rho, const PartySet& a,
                               const PartySet& b, const PartySet& c);

// The multi-world composite
//   I = I(S1E1:S2E2) - I(E1:E2) - I(E1:S2|E2) - I(E2:S1|E1)
// on a model-c partition (E0, when present, is traced out first). Degenerate
// custom models with empty environment roles are accepted as long as S1 and
// S2 are present; terms touching an empty group contribute zero. The value
// is reported raw, negative values included.
MutualInfoReport multiworld_mi(const DensityOperator& rho, const PartitionModel& model);

// Double-slit demo: builds (|r>|R> + |l>|L>)/sqrt(2) with <R|L> = overlap,
// traces out the apparatus and returns the interference visibility
// 2|off-diagonal| of the reduced state, which equals |overlap|.
double slit_visibility(Complex overlap);

// Rabi demo: cos(gt)|e,n-1> - i sin(gt)|g,n>; returns the entanglement
// entropy of the atom in bits.
double rabi_entanglement(double gt);

} // namespace tangnet
