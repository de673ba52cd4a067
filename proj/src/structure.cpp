#include "tangnet/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tangnet {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double round_profile(double x) { return std::round(x * 1e9) / 1e9; }

double wrap_degrees(double deg) {
    double out = std::fmod(deg, 360.0);
    if (out < 0.0) out += 360.0;
    if (out >= 360.0) out = 0.0;
    return out;
}

// Canonical representative of an orientation multiset under global rotation
// and mirror reflection: try anchoring every (possibly negated) element at
// zero, keep the lexicographically smallest sorted tuple after rounding.
std::vector<double> canonical_phases(const std::vector<double>& orientations) {
    std::vector<double> best;
    for (int mirror = 0; mirror < 2; ++mirror) {
        std::vector<double> oriented;
        oriented.reserve(orientations.size());
        for (double o : orientations) {
            oriented.push_back(mirror ? wrap_degrees(-o) : wrap_degrees(o));
        }
        for (double anchor : oriented) {
            std::vector<double> candidate;
            candidate.reserve(oriented.size());
            for (double o : oriented) {
                candidate.push_back(round_profile(wrap_degrees(o - anchor)));
            }
            std::sort(candidate.begin(), candidate.end());
            if (best.empty() ||
                std::lexicographical_compare(candidate.begin(), candidate.end(),
                                             best.begin(), best.end())) {
                best = candidate;
            }
        }
    }
    return best;
}

} // namespace

QuantumStructure::QuantumStructure(std::vector<Party> parties,
                                   std::vector<Branch> branches,
                                   std::size_t reference_branch)
    : parties_(std::move(parties)),
      branches_(std::move(branches)),
      reference_branch_(reference_branch) {
    if (parties_.empty()) {
        throw StructureError("structure needs at least one party");
    }
    if (branches_.empty()) {
        throw StructureError("structure needs at least one branch");
    }
    if (reference_branch_ >= branches_.size()) {
        throw StructureError("reference branch index out of range");
    }
    if (branches_[reference_branch_].orientation_deg != 0.0) {
        throw StructureError("reference branch must sit at orientation 0");
    }
    double length_sq = 0.0;
    for (const Branch& b : branches_) {
        if (b.nodes.size() != parties_.size()) {
            throw StructureError("branch node tuple arity mismatch");
        }
        for (std::size_t p = 0; p < parties_.size(); ++p) {
            if (b.nodes[p] >= parties_[p].dim) {
                throw StructureError("branch node index out of range for party '" +
                                     parties_[p].label + "'");
            }
        }
        if (!(b.length > 0.0) || b.length > 1.0 + 1e-10) {
            throw StructureError("branch length must lie in (0, 1]");
        }
        if (!(b.orientation_deg >= 0.0) || b.orientation_deg >= 360.0) {
            throw StructureError("branch orientation must lie in [0, 360)");
        }
        length_sq += b.length * b.length;
    }
    if (std::abs(length_sq - 1.0) > 1e-10) {
        throw StructureError("branch lengths must satisfy sum length^2 = 1");
    }
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        for (std::size_t j = i + 1; j < branches_.size(); ++j) {
            if (branches_[i].nodes == branches_[j].nodes) {
                throw StructureError("branch node tuples must be pairwise distinct");
            }
        }
    }
}

QuantumStructure structure_from_state(const PureState& psi) {
    const std::vector<std::size_t> dims = psi.space().dims();
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t p = dims.size(); p-- > 1;) {
        stride[p - 1] = stride[p] * dims[p];
    }

    struct Term {
        std::vector<std::size_t> nodes;
        Complex amplitude;
    };
    std::vector<Term> terms;
    const auto& amps = psi.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if (std::abs(amps[idx]) <= kBranchThreshold) continue;
        Term t;
        t.amplitude = amps[idx];
        std::size_t rem = idx;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            t.nodes.push_back(rem / stride[p]);
            rem %= stride[p];
        }
        terms.push_back(std::move(t));
    }
    if (terms.empty()) {
        throw ArgumentError("state has no branch above the amplitude threshold");
    }

    // amplitudes are already in composite-index order, which is lexicographic
    // node-tuple order; the first term anchors the phases
    const Complex ref = terms.front().amplitude;
    std::vector<Branch> branches;
    branches.reserve(terms.size());
    for (const Term& t : terms) {
        Branch b;
        b.nodes = t.nodes;
        b.length = std::abs(t.amplitude);
        const double rel_phase = std::arg(t.amplitude / ref);
        b.orientation_deg = wrap_degrees(-rel_phase * kDegPerRad);
        branches.push_back(std::move(b));
    }
    branches.front().orientation_deg = 0.0;
    return QuantumStructure(psi.space().parties(), std::move(branches), 0);
}

PureState state_from_structure(const QuantumStructure& qs) {
    std::vector<Party> parties = qs.parties();
    const MultipartiteSpace space(parties);
    const std::vector<std::size_t> dims = space.dims();
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t p = dims.size(); p-- > 1;) {
        stride[p - 1] = stride[p] * dims[p];
    }

    std::vector<Complex> amps(space.total_dim(), Complex(0.0, 0.0));
    double norm_sq = 0.0;
    for (const Branch& b : qs.branches()) {
        std::size_t idx = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            idx += b.nodes[p] * stride[p];
        }
        const double phase = -b.orientation_deg / kDegPerRad;
        amps[idx] = b.length * Complex(std::cos(phase), std::sin(phase));
        norm_sq += b.length * b.length;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) a *= inv;
    return PureState(space, std::move(amps));
}

std::string pairing_name(Pairing pairing) {
    switch (pairing) {
        case Pairing::Symmetric: return "symmetric";
        case Pairing::Asymmetric: return "asymmetric";
        case Pairing::Other: return "other";
    }
    return "?";
}

bool StructureClass::operator<(const StructureClass& other) const {
    if (pairing != other.pairing) return pairing < other.pairing;
    if (weight_profile != other.weight_profile) {
        return weight_profile < other.weight_profile;
    }
    return phase_class < other.phase_class;
}

PureState family_state(const TwoQubitFamily& f) {
    const double alpha = f.alpha_deg / kDegPerRad;
    const double theta = f.theta_deg / kDegPerRad;
    const Complex first(std::cos(alpha), 0.0);
    const Complex second =
        std::sin(alpha) * Complex(std::cos(theta), std::sin(theta));

    const MultipartiteSpace space({Party{"A", 2}, Party{"B", 2}});
    std::vector<Complex> amps(4, Complex(0.0, 0.0));
    switch (f.pairing) {
        case Pairing::Symmetric:
            amps[0] = first;  // |00>
            amps[3] = second; // |11>
            break;
        case Pairing::Asymmetric:
            amps[1] = first;  // |01>
            amps[2] = second; // |10>
            break;
        case Pairing::Other:
            throw ArgumentError("family pairing must be symmetric or asymmetric");
    }
    return PureState(space, std::move(amps));
}

StructureClass classify(const QuantumStructure& qs) {
    if (qs.parties().size() != 2 || qs.parties()[0].dim != 2 ||
        qs.parties()[1].dim != 2) {
        throw ArgumentError("classification is defined for two qubits");
    }

    bool all_equal = true;
    bool all_distinct = true;
    for (const Branch& b : qs.branches()) {
        if (b.nodes[0] == b.nodes[1]) {
            all_distinct = false;
        } else {
            all_equal = false;
        }
    }

    StructureClass out;
    if (qs.branches().size() >= 2 && all_equal) {
        out.pairing = Pairing::Symmetric;
    } else if (qs.branches().size() >= 2 && all_distinct) {
        out.pairing = Pairing::Asymmetric;
    } else {
        out.pairing = Pairing::Other;
    }

    std::vector<double> orientations;
    for (const Branch& b : qs.branches()) {
        out.weight_profile.push_back(round_profile(b.length));
        orientations.push_back(b.orientation_deg);
    }
    std::sort(out.weight_profile.begin(), out.weight_profile.end());
    out.phase_class = canonical_phases(orientations);
    return out;
}

StructureClass classify_state(const PureState& psi) {
    return classify(structure_from_state(psi));
}

QubitClassEnumeration enumerate_qubit_classes() {
    QubitClassEnumeration out;
    out.candidate_count = 0;
    for (Pairing pairing : {Pairing::Symmetric, Pairing::Asymmetric}) {
        for (double theta : {0.0, 90.0, 180.0, 270.0}) {
            const TwoQubitFamily member{pairing, 45.0, theta};
            const StructureClass cls = classify_state(family_state(member));
            ++out.candidate_count;
            bool merged = false;
            for (QubitClassEntry& entry : out.classes) {
                if (entry.cls == cls) {
                    entry.members.push_back(member);
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                out.classes.push_back(QubitClassEntry{cls, {member}});
            }
        }
    }
    return out;
}

} // namespace tangnet
