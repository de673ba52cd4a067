// structure.hpp
// The diagrammatic "quantum structure" of a state: one node per local basis
// state, one branch per superposition term, branch length = amplitude
// magnitude, branch orientation = relative phase drawn as an anticlockwise
// rotation. Includes the two-qubit family and the structure-class quotient.

#pragma once

#include <string>
#include <vector>

#include "tangnet/states.hpp"

namespace tangnet {

// One superposition term: the occupied node per party, the amplitude
// magnitude, and the orientation in degrees within [0, 360).
struct Branch {
    std::vector<std::size_t> nodes;
    double length;
    double orientation_deg;
};

class QuantumStructure {
public:
    // Validates: sum of squared lengths is 1 (to 1e-10), node tuples are
    // pairwise distinct and in range, orientations lie in [0, 360), and the
    // reference branch has orientation exactly 0. Other branches may also sit
    // at 0 degrees (a relative phase of +1).
    QuantumStructure(std::vector<Party> parties, std::vector<Branch> branches,
                     std::size_t reference_branch);

    const std::vector<Party>& parties() const { return parties_; }
    const std::vector<Branch>& branches() const { return branches_; }
    std::size_t reference_branch() const { return reference_branch_; }

private:
    std::vector<Party> parties_;
    std::vector<Branch> branches_;
    std::size_t reference_branch_;
};

// Relative phase e^{i phi} is drawn as a rotation by -phi anticlockwise;
// branches below this magnitude are treated as intended zeros.
constexpr double kBranchThreshold = 1e-12;

// One branch per amplitude above kBranchThreshold, in lexicographic
// node-tuple order; the first branch is the reference at orientation 0.
QuantumStructure structure_from_state(const PureState& psi);

// Inverse map: amplitude of branch k = length_k * exp(-i orientation_k).
// Round-trips structure_from_state up to a global phase.
PureState state_from_structure(const QuantumStructure& qs);

enum class Pairing { Symmetric, Asymmetric, Other };

std::string pairing_name(Pairing pairing);

// Canonical class under the quotient by global rotation, mirror reflection
// (orientation negation), and party relabeling. Profiles are rounded to 1e-9
// so classes compare exactly.
struct StructureClass {
    Pairing pairing;
    std::vector<double> weight_profile; // sorted ascending
    std::vector<double> phase_class;    // canonical sorted orientation multiset

    bool operator==(const StructureClass& other) const = default;
    bool operator<(const StructureClass& other) const;
};

// The displayed two-qubit family: asymmetric cos a|01> + sin a e^{i t}|10>,
// symmetric cos a|00> + sin a e^{i t}|11>. Angles in degrees.
struct TwoQubitFamily {
    Pairing pairing; // Symmetric or Asymmetric
    double alpha_deg;
    double theta_deg;
};

PureState family_state(const TwoQubitFamily& f);

// Requires a two-qubit structure.
StructureClass classify(const QuantumStructure& qs);

StructureClass classify_state(const PureState& psi);

// The eight maximally-entangled family candidates at alpha = 45 degrees,
// grouped by class under the quotient. The distinct-class count is reported,
// not asserted.
struct QubitClassEntry {
    StructureClass cls;
    std::vector<TwoQubitFamily> members;
};

struct QubitClassEnumeration {
    std::vector<QubitClassEntry> classes;
    std::size_t candidate_count;

    std::size_t distinct_count() const { return classes.size(); }
};

QubitClassEnumeration enumerate_qubit_classes();

} // namespace tangnet
