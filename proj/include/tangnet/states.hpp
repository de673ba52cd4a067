// states.hpp
// The state model: multipartite pure states, density operators, ensembles,
// purification, Schmidt decomposition, partition models, and the reduction
// chains between them. Values are immutable; operations are pure.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tangnet/linalg.hpp"
#include "tangnet/matrix.hpp"

namespace tangnet {

struct Party {
    std::string label;
    std::size_t dim;
};

using PartySet = std::set<std::string>;

// Ordered roster of parties. Labels must be unique and nonempty and the
// total dimension must respect the global cap. Party dimension 1 is legal at
// this level (rank-1 purification ancillas live on it); the DSL requires
// declared systems to use dim >= 2.
class MultipartiteSpace {
public:
    explicit MultipartiteSpace(std::vector<Party> parties);

    const std::vector<Party>& parties() const { return parties_; }
    std::size_t party_count() const { return parties_.size(); }
    std::size_t total_dim() const { return total_dim_; }

    std::size_t index_of(const std::string& label) const;
    bool has_party(const std::string& label) const;
    std::vector<std::size_t> dims() const;

    // Indices of the given labels in party order; validates existence and
    // rejects duplicates.
    std::vector<std::size_t> indices_of(const PartySet& labels) const;

    // Sub-space made of the given labels, in party order.
    MultipartiteSpace subspace(const PartySet& labels) const;

    // This space extended by one trailing ancilla party of dimension `dim`
    // (label "anc", suffixed if taken).
    MultipartiteSpace with_ancilla(std::size_t dim) const;

    bool same_layout(const MultipartiteSpace& other) const;

private:
    std::vector<Party> parties_;
    std::size_t total_dim_;
};

// Unit vector on a multipartite space, indexed by mixed-radix party indices
// with the first party most significant.
class PureState {
public:
    PureState(MultipartiteSpace space, std::vector<Complex> amplitudes);

    const MultipartiteSpace& space() const { return space_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }

    Complex overlap(const PureState& other) const; // <this|other>

private:
    MultipartiteSpace space_;
    std::vector<Complex> amps_;
};

// Hermitian trace-1 operator on a multipartite space. Eigenvalues are
// checked (and clamped) where they are consumed, not at construction.
class DensityOperator {
public:
    DensityOperator(MultipartiteSpace space, const CMatrix& matrix);

    const MultipartiteSpace& space() const { return space_; }
    const CMatrix& matrix() const { return matrix_; }

private:
    MultipartiteSpace space_;
    CMatrix matrix_;
};

DensityOperator to_density(const PureState& psi);

// Convex mixture of pure states on a common space.
struct EnsembleMember {
    double weight;
    PureState state;
};

class Ensemble {
public:
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const { return members_; }
    const MultipartiteSpace& space() const { return members_.front().state.space(); }

private:
    std::vector<EnsembleMember> members_;
};

// Bipartite Schmidt data for a cut of a pure state. Coefficients descending,
// numerically-zero ones dropped; basis columns orthonormal with the first
// significant component of each left vector real-positive.
struct SchmidtDecomposition {
    MultipartiteSpace space;
    std::vector<std::string> left_parties;  // in party order
    std::vector<std::string> right_parties; // in party order
    std::vector<double> coefficients;
    CMatrix left_basis;
    CMatrix right_basis;

    std::size_t rank() const { return coefficients.size(); }
};

enum class Role { S, S1, S2, E0, E1, E2 };

std::string role_name(Role role);
std::optional<Role> role_from_name(const std::string& name);

enum class PartitionKind { ModelA, ModelB, ModelC, Custom };

std::string partition_kind_name(PartitionKind kind);

// Assignment of party labels to roles. Role sets are validated per kind:
// model-a uses exactly {S, E0}; model-b {S, E1, E0}; model-c {S1, E1, S2, E2}
// with E0 optional. Several parties may share a role (a role names a group);
// an absent role is simply an empty group.
class PartitionModel {
public:
    PartitionModel(PartitionKind kind, std::map<std::string, Role> roles);

    PartitionKind kind() const { return kind_; }
    const std::map<std::string, Role>& roles() const { return roles_; }

    std::set<Role> used_roles() const;
    std::vector<std::string> parties_with_role(Role role) const;
    std::vector<std::string> parties_with_roles(const std::set<Role>& roles) const;

    // every party of the space has a role, and no stray labels
    void check_covers(const MultipartiteSpace& space) const;

private:
    PartitionKind kind_;
    std::map<std::string, Role> roles_;
};

// Infer the most specific kind for a role assignment and build the model.
PartitionModel infer_partition_model(const std::map<std::string, Role>& roles);

// ---- operations ------------------------------------------------------------

// Canonical purification: |Psi> = sum_k sqrt(lambda_k) |k><k_anc| in the
// descending eigenbasis, ancilla dimension = rank. Tracing the ancilla back
// out reproduces rho.
PureState purify(const DensityOperator& rho);

// rho = sum_i p_i |psi_i><psi_i|
DensityOperator mix(const Ensemble& e);

// |Psi> = sum_i sqrt(p_i) |psi_i>|i_anc>; tracing the ancilla gives mix(e).
// This is the executable content of the tracing/summing equivalence.
PureState views_equivalent(const Ensemble& e);

// Schmidt decomposition across the cut (left | complement). The cut must be
// proper and nonempty.
SchmidtDecomposition schmidt(const PureState& psi, const PartySet& left);

// sum_k lambda_k |L_k>|R_k| reassembled on the original space.
PureState schmidt_reconstruct(const SchmidtDecomposition& sd);

// Iterated partial trace of every party whose role is not in `target`.
DensityOperator reduce(const DensityOperator& rho_universe,
                       const PartitionModel& model,
                       const std::set<Role>& target);

// Label-level partial trace.
DensityOperator partial_density(const DensityOperator& rho, const PartySet& keep);

// tr(rho^2)
double purity(const DensityOperator& rho);

// purity >= 1 - epsilon ("the system has one wave function", operationally)
bool is_approx_pure(const DensityOperator& rho, double epsilon = 1e-6);

// Haar-random pure state on the given dims, party labels q0, q1, ...
PureState haar_random_state(const std::vector<std::size_t>& dims,
                            std::uint64_t seed);

// Random full-rank density operator (traced-out Haar state on dim^2).
DensityOperator haar_random_density(std::size_t dim, std::uint64_t seed);

} // namespace tangnet
