#include "tangnet/states.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace tangnet {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kRankTol = 1e-12;

Eigen::MatrixXcd cut_matrix(const PureState& psi,
                            const std::vector<std::size_t>& left_idx,
                            const std::vector<std::size_t>& right_idx) {
    const std::vector<std::size_t> dims = psi.space().dims();
    std::size_t dl = 1;
    for (std::size_t p : left_idx) dl *= dims[p];
    std::size_t dr = 1;
    for (std::size_t p : right_idx) dr *= dims[p];

    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t p = dims.size(); p-- > 1;) {
        stride[p - 1] = stride[p] * dims[p];
    }

    Eigen::MatrixXcd m(dl, dr);
    std::vector<std::size_t> digit(dims.size(), 0);
    const auto& amps = psi.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t rem = idx;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            digit[p] = rem / stride[p];
            rem %= stride[p];
        }
        std::size_t l = 0;
        for (std::size_t p : left_idx) l = l * dims[p] + digit[p];
        std::size_t r = 0;
        for (std::size_t p : right_idx) r = r * dims[p] + digit[p];
        m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(r)) = amps[idx];
    }
    return m;
}

CMatrix columns_to_cmatrix(const Eigen::MatrixXcd& m) {
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(m(i, j));
        }
    }
    return CMatrix(static_cast<std::size_t>(m.rows()),
                   static_cast<std::size_t>(m.cols()), std::move(entries));
}

} // namespace

MultipartiteSpace::MultipartiteSpace(std::vector<Party> parties)
    : parties_(std::move(parties)), total_dim_(1) {
    if (parties_.empty()) {
        throw ArgumentError("space needs at least one party");
    }
    std::set<std::string> seen;
    for (const Party& p : parties_) {
        if (p.label.empty()) {
            throw ArgumentError("party label must be nonempty");
        }
        if (!seen.insert(p.label).second) {
            throw ArgumentError("duplicate party label '" + p.label + "'");
        }
        if (p.dim == 0) {
            throw ArgumentError("party '" + p.label + "' has dimension 0");
        }
        if (total_dim_ > dimension_cap() / p.dim) {
            throw SizeLimitError("total dimension exceeds cap " +
                                 std::to_string(dimension_cap()));
        }
        total_dim_ *= p.dim;
    }
}

std::size_t MultipartiteSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        if (parties_[i].label == label) return i;
    }
    throw ArgumentError("unknown party '" + label + "'");
}

bool MultipartiteSpace::has_party(const std::string& label) const {
    for (const Party& p : parties_) {
        if (p.label == label) return true;
    }
    return false;
}

std::vector<std::size_t> MultipartiteSpace::dims() const {
    std::vector<std::size_t> out;
    out.reserve(parties_.size());
    for (const Party& p : parties_) out.push_back(p.dim);
    return out;
}

std::vector<std::size_t> MultipartiteSpace::indices_of(const PartySet& labels) const {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const std::string& label : labels) {
        out.push_back(index_of(label));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultipartiteSpace MultipartiteSpace::subspace(const PartySet& labels) const {
    std::vector<Party> sub;
    for (const Party& p : parties_) {
        if (labels.count(p.label)) sub.push_back(p);
    }
    if (sub.size() != labels.size()) {
        for (const std::string& label : labels) {
            if (!has_party(label)) {
                throw ArgumentError("unknown party '" + label + "'");
            }
        }
    }
    return MultipartiteSpace(std::move(sub));
}

MultipartiteSpace MultipartiteSpace::with_ancilla(std::size_t dim) const {
    std::string label = "anc";
    int suffix = 1;
    while (has_party(label)) {
        label = "anc" + std::to_string(suffix++);
    }
    std::vector<Party> parties = parties_;
    parties.push_back(Party{label, dim});
    return MultipartiteSpace(std::move(parties));
}

bool MultipartiteSpace::same_layout(const MultipartiteSpace& other) const {
    if (parties_.size() != other.parties_.size()) return false;
    for (std::size_t i = 0; i < parties_.size(); ++i) {
        if (parties_[i].label != other.parties_[i].label ||
            parties_[i].dim != other.parties_[i].dim) {
            return false;
        }
    }
    return true;
}

PureState::PureState(MultipartiteSpace space, std::vector<Complex> amplitudes)
    : space_(std::move(space)), amps_(std::move(amplitudes)) {
    if (amps_.size() != space_.total_dim()) {
        throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                             " does not match space dimension " +
                             std::to_string(space_.total_dim()));
    }
    double norm_sq = 0.0;
    for (const Complex& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ArgumentError("amplitude is not finite");
        }
        norm_sq += std::norm(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTol) {
        throw ContractError("state norm " + std::to_string(std::sqrt(norm_sq)) +
                            " deviates from 1");
    }
}

Complex PureState::overlap(const PureState& other) const {
    if (!space_.same_layout(other.space_)) {
        throw SpaceError("overlap requires states on the same space");
    }
    Complex out(0.0, 0.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out += std::conj(amps_[i]) * other.amps_[i];
    }
    return out;
}

DensityOperator::DensityOperator(MultipartiteSpace space, const CMatrix& matrix)
    : space_(std::move(space)),
      matrix_(matrix.hermitian_tagged() ? matrix : matrix.as_hermitian()) {
    if (matrix_.rows() != space_.total_dim()) {
        throw DimensionError("density matrix side " + std::to_string(matrix_.rows()) +
                             " does not match space dimension " +
                             std::to_string(space_.total_dim()));
    }
    if (std::abs(matrix_.trace().real() - 1.0) > kNormTol ||
        std::abs(matrix_.trace().imag()) > kNormTol) {
        throw ContractError("density matrix trace deviates from 1");
    }
}

DensityOperator to_density(const PureState& psi) {
    const auto& a = psi.amplitudes();
    const std::size_t n = a.size();
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries[i * n + j] = a[i] * std::conj(a[j]);
        }
    }
    return DensityOperator(psi.space(), CMatrix(n, n, std::move(entries)).as_hermitian());
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw ArgumentError("ensemble needs at least one member");
    }
    double total = 0.0;
    for (const EnsembleMember& m : members_) {
        if (!(m.weight > 0.0) || m.weight > 1.0 + kNormTol) {
            throw ArgumentError("ensemble weight must lie in (0, 1]");
        }
        if (!m.state.space().same_layout(members_.front().state.space())) {
            throw SpaceError("ensemble members live on different spaces");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ArgumentError("ensemble weights sum to " + std::to_string(total));
    }
}

std::string role_name(Role role) {
    switch (role) {
        case Role::S: return "S";
        case Role::S1: return "S1";
        case Role::S2: return "S2";
        case Role::E0: return "E0";
        case Role::E1: return "E1";
        case Role::E2: return "E2";
    }
    return "?";
}

std::optional<Role> role_from_name(const std::string& name) {
    if (name == "S") return Role::S;
    if (name == "S1") return Role::S1;
    if (name == "S2") return Role::S2;
    if (name == "E0") return Role::E0;
    if (name == "E1") return Role::E1;
    if (name == "E2") return Role::E2;
    return std::nullopt;
}

std::string partition_kind_name(PartitionKind kind) {
    switch (kind) {
        case PartitionKind::ModelA: return "model-a";
        case PartitionKind::ModelB: return "model-b";
        case PartitionKind::ModelC: return "model-c";
        case PartitionKind::Custom: return "custom";
    }
    return "?";
}

PartitionModel::PartitionModel(PartitionKind kind, std::map<std::string, Role> roles)
    : kind_(kind), roles_(std::move(roles)) {
    if (roles_.empty()) {
        throw ArgumentError("partition model needs at least one party");
    }
    const std::set<Role> used = used_roles();
    switch (kind_) {
        case PartitionKind::ModelA:
            if (used != std::set<Role>{Role::S, Role::E0}) {
                throw ArgumentError("model-a requires exactly roles {S, E0}");
            }
            break;
        case PartitionKind::ModelB:
            if (used != std::set<Role>{Role::S, Role::E1, Role::E0}) {
                throw ArgumentError("model-b requires exactly roles {S, E1, E0}");
            }
            break;
        case PartitionKind::ModelC: {
            std::set<Role> base = used;
            base.erase(Role::E0);
            if (base != std::set<Role>{Role::S1, Role::E1, Role::S2, Role::E2}) {
                throw ArgumentError(
                    "model-c requires roles {S1, E1, S2, E2} with E0 optional");
            }
            break;
        }
        case PartitionKind::Custom:
            break;
    }
}

std::set<Role> PartitionModel::used_roles() const {
    std::set<Role> out;
    for (const auto& [label, role] : roles_) {
        out.insert(role);
    }
    return out;
}

std::vector<std::string> PartitionModel::parties_with_role(Role role) const {
    std::vector<std::string> out;
    for (const auto& [label, r] : roles_) {
        if (r == role) out.push_back(label);
    }
    return out;
}

std::vector<std::string> PartitionModel::parties_with_roles(
    const std::set<Role>& roles) const {
    std::vector<std::string> out;
    for (const auto& [label, r] : roles_) {
        if (roles.count(r)) out.push_back(label);
    }
    return out;
}

void PartitionModel::check_covers(const MultipartiteSpace& space) const {
    // coverage, not equality: a model may mention parties that a previous
    // reduction already traced out
    for (const Party& p : space.parties()) {
        if (!roles_.count(p.label)) {
            throw ArgumentError("party '" + p.label + "' has no role in the model");
        }
    }
}

PartitionModel infer_partition_model(const std::map<std::string, Role>& roles) {
    std::set<Role> used;
    for (const auto& [label, role] : roles) used.insert(role);
    if (used == std::set<Role>{Role::S, Role::E0}) {
        return PartitionModel(PartitionKind::ModelA, roles);
    }
    if (used == std::set<Role>{Role::S, Role::E1, Role::E0}) {
        return PartitionModel(PartitionKind::ModelB, roles);
    }
    std::set<Role> base = used;
    base.erase(Role::E0);
    if (base == std::set<Role>{Role::S1, Role::E1, Role::S2, Role::E2}) {
        return PartitionModel(PartitionKind::ModelC, roles);
    }
    return PartitionModel(PartitionKind::Custom, roles);
}

PureState purify(const DensityOperator& rho) {
    const EigenSystem es = eig_hermitian(rho.matrix());
    std::size_t rank = 0;
    for (double v : es.eigenvalues) {
        if (v > kRankTol) ++rank;
    }
    if (rank == 0) rank = 1;

    const MultipartiteSpace out_space = rho.space().with_ancilla(rank);
    const std::size_t n = rho.space().total_dim();
    std::vector<Complex> amps(n * rank, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < rank; ++k) {
        const double lambda = std::max(es.eigenvalues[k], 0.0);
        const double w = std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i) {
            amps[i * rank + k] = w * es.eigenvectors(i, k);
        }
    }
    // renormalize away the dropped-tail dust
    double norm_sq = 0.0;
    for (const Complex& a : amps) norm_sq += std::norm(a);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) a *= inv;
    return PureState(out_space, std::move(amps));
}

DensityOperator mix(const Ensemble& e) {
    const std::size_t n = e.space().total_dim();
    std::vector<Complex> entries(n * n, Complex(0.0, 0.0));
    for (const EnsembleMember& m : e.members()) {
        const auto& a = m.state.amplitudes();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                entries[i * n + j] += m.weight * a[i] * std::conj(a[j]);
            }
        }
    }
    return DensityOperator(e.space(), CMatrix(n, n, std::move(entries)).as_hermitian());
}

PureState views_equivalent(const Ensemble& e) {
    const std::size_t count = e.members().size();
    const MultipartiteSpace out_space = e.space().with_ancilla(count);
    const std::size_t n = e.space().total_dim();
    std::vector<Complex> amps(n * count, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < count; ++k) {
        const EnsembleMember& m = e.members()[k];
        const double w = std::sqrt(m.weight);
        for (std::size_t i = 0; i < n; ++i) {
            amps[i * count + k] = w * m.state.amplitudes()[i];
        }
    }
    return PureState(out_space, std::move(amps));
}

SchmidtDecomposition schmidt(const PureState& psi, const PartySet& left) {
    if (left.empty()) {
        throw ArgumentError("schmidt cut must be nonempty");
    }
    if (left.size() >= psi.space().party_count()) {
        throw ArgumentError("schmidt cut must be a proper subset of the parties");
    }
    const std::vector<std::size_t> left_idx = psi.space().indices_of(left);
    std::vector<std::size_t> right_idx;
    for (std::size_t p = 0; p < psi.space().party_count(); ++p) {
        if (std::find(left_idx.begin(), left_idx.end(), p) == left_idx.end()) {
            right_idx.push_back(p);
        }
    }

    const Eigen::MatrixXcd m = cut_matrix(psi, left_idx, right_idx);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    Eigen::MatrixXcd u = svd.matrixU();
    Eigen::MatrixXcd v = svd.matrixV();

    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > kRankTol) ++rank;
    }
    if (rank == 0) rank = 1;

    // phase the left vectors canonically, pushing the phase into the right side
    for (std::size_t k = 0; k < rank; ++k) {
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            const Complex z = u(r, static_cast<Eigen::Index>(k));
            if (std::abs(z) > 1e-12) {
                // right side absorbs the same phase: the stored right basis is
                // conj(V), so scaling V by `phase` keeps u_k s_k conj(v_k) fixed
                const Complex phase = std::conj(z) / std::abs(z);
                u.col(static_cast<Eigen::Index>(k)) *= phase;
                v.col(static_cast<Eigen::Index>(k)) *= phase;
                break;
            }
        }
    }

    SchmidtDecomposition out{psi.space(), {}, {}, {}, CMatrix(), CMatrix()};
    for (std::size_t p : left_idx) {
        out.left_parties.push_back(psi.space().parties()[p].label);
    }
    for (std::size_t p : right_idx) {
        out.right_parties.push_back(psi.space().parties()[p].label);
    }
    out.coefficients.assign(sv.data(), sv.data() + rank);
    out.left_basis = columns_to_cmatrix(u.leftCols(static_cast<Eigen::Index>(rank)));
    // amplitude matrix reconstructs as sum_k s_k u_k (conj v_k)^T, so the
    // right-basis vectors are the conjugated V columns
    out.right_basis =
        columns_to_cmatrix(v.leftCols(static_cast<Eigen::Index>(rank)).conjugate());
    return out;
}

PureState schmidt_reconstruct(const SchmidtDecomposition& sd) {
    const std::vector<std::size_t> dims = sd.space.dims();
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t p = dims.size(); p-- > 1;) {
        stride[p - 1] = stride[p] * dims[p];
    }
    std::vector<std::size_t> left_idx;
    for (const std::string& label : sd.left_parties) {
        left_idx.push_back(sd.space.index_of(label));
    }
    std::vector<std::size_t> right_idx;
    for (const std::string& label : sd.right_parties) {
        right_idx.push_back(sd.space.index_of(label));
    }

    std::vector<Complex> amps(sd.space.total_dim(), Complex(0.0, 0.0));
    std::vector<std::size_t> digit(dims.size(), 0);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t rem = idx;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            digit[p] = rem / stride[p];
            rem %= stride[p];
        }
        std::size_t l = 0;
        for (std::size_t p : left_idx) l = l * dims[p] + digit[p];
        std::size_t r = 0;
        for (std::size_t p : right_idx) r = r * dims[p] + digit[p];
        Complex sum(0.0, 0.0);
        for (std::size_t k = 0; k < sd.rank(); ++k) {
            sum += sd.coefficients[k] * sd.left_basis(l, k) * sd.right_basis(r, k);
        }
        amps[idx] = sum;
    }
    return PureState(sd.space, std::move(amps));
}

DensityOperator reduce(const DensityOperator& rho_universe,
                       const PartitionModel& model, const std::set<Role>& target) {
    model.check_covers(rho_universe.space());
    const std::set<Role> used = model.used_roles();
    for (Role r : target) {
        if (!used.count(r)) {
            throw ArgumentError("target role " + role_name(r) +
                                " is not present in the model");
        }
    }

    DensityOperator current = rho_universe;
    // one party at a time, so the result is the literal trace chain
    for (;;) {
        std::string victim;
        for (const Party& p : current.space().parties()) {
            if (!target.count(model.roles().at(p.label))) {
                victim = p.label;
                break;
            }
        }
        if (victim.empty()) break;
        PartySet keep;
        for (const Party& p : current.space().parties()) {
            if (p.label != victim) keep.insert(p.label);
        }
        current = partial_density(current, keep);
    }
    return current;
}

DensityOperator partial_density(const DensityOperator& rho, const PartySet& keep) {
    const std::vector<std::size_t> keep_idx = rho.space().indices_of(keep);
    const CMatrix reduced = partial_trace(rho.matrix(), rho.space().dims(), keep_idx);
    return DensityOperator(rho.space().subspace(keep), reduced);
}

double purity(const DensityOperator& rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double out = 0.0;
    for (const Complex& z : rho.matrix().entries()) {
        out += std::norm(z);
    }
    return out;
}

bool is_approx_pure(const DensityOperator& rho, double epsilon) {
    return purity(rho) >= 1.0 - epsilon;
}

PureState haar_random_state(const std::vector<std::size_t>& dims, std::uint64_t seed) {
    std::vector<Party> parties;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        parties.push_back(Party{"q" + std::to_string(i), dims[i]});
    }
    return PureState(MultipartiteSpace(std::move(parties)),
                     haar_random_amplitudes(dims, seed));
}

DensityOperator haar_random_density(std::size_t dim, std::uint64_t seed) {
    const PureState psi = haar_random_state({dim, dim}, seed);
    return partial_density(to_density(psi), {"q0"});
}

} // namespace tangnet
