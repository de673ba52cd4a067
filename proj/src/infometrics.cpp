#include "tangnet/infometrics.hpp"

#include <algorithm>
#include <cmath>

namespace tangnet {

namespace {

constexpr double kEigenvalueFloor = -1e-10;
constexpr double kVanishTol = 1e-9;

void check_disjoint(const PartySet& a, const PartySet& b, const char* what) {
    for (const std::string& label : a) {
        if (b.count(label)) {
            throw ArgumentError(std::string(what) + ": party '" + label +
                                "' appears on both sides");
        }
    }
}

PartySet set_union(const PartySet& a, const PartySet& b) {
    PartySet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

// entropy of the reduced state on `labels`; empty set contributes zero
double entropy_of(const DensityOperator& rho, const PartySet& labels) {
    if (labels.empty()) return 0.0;
    if (labels.size() == rho.space().party_count()) return entropy(rho);
    return entropy(partial_density(rho, labels));
}

PartySet role_set(const PartitionModel& model, Role role) {
    PartySet out;
    for (const std::string& label : model.parties_with_role(role)) {
        out.insert(label);
    }
    return out;
}

std::string joined_role_names(std::initializer_list<Role> roles) {
    std::string out = "S_";
    for (Role r : roles) out += role_name(r);
    return out;
}

} // namespace

double entropy(const DensityOperator& rho) {
    const EigenSystem es = eig_hermitian(rho.matrix());
    double bits = 0.0;
    for (double lambda : es.eigenvalues) {
        if (lambda < kEigenvalueFloor) {
            throw InvalidDensityError("density eigenvalue " + std::to_string(lambda) +
                                      " below the admissible floor");
        }
        if (lambda <= 0.0) continue;
        bits -= lambda * std::log2(lambda);
    }
    return bits;
}

double mutual_info(const DensityOperator& rho, const PartySet& a, const PartySet& b) {
    if (a.empty() || b.empty()) {
        throw ArgumentError("mutual_info requires nonempty party sets");
    }
    check_disjoint(a, b, "mutual_info");
    const double s_a = entropy_of(rho, a);
    const double s_b = entropy_of(rho, b);
    const double s_ab = entropy_of(rho, set_union(a, b));
    return s_a + s_b - s_ab;
}

PureBipartiteMutualInfo mutual_info_pure_bipartite(const PureState& psi,
                                                   const PartySet& env) {
    if (env.empty() || env.size() >= psi.space().party_count()) {
        throw ArgumentError("env must be a proper nonempty subset of the parties");
    }
    const double s_env = entropy(partial_density(to_density(psi), env));
    return PureBipartiteMutualInfo{2.0 * s_env, s_env, s_env};
}

double conditional_mutual_info(const DensityOperator& rho, const PartySet& a,
                               const PartySet& b, const PartySet& c) {
    if (a.empty() || b.empty()) {
        throw ArgumentError("conditional_mutual_info requires nonempty a and b");
    }
    check_disjoint(a, b, "conditional_mutual_info");
    check_disjoint(a, c, "conditional_mutual_info");
    check_disjoint(b, c, "conditional_mutual_info");
    if (c.empty()) {
        return mutual_info(rho, a, b);
    }
    const double s_ac = entropy_of(rho, set_union(a, c));
    const double s_bc = entropy_of(rho, set_union(b, c));
    const double s_c = entropy_of(rho, c);
    const double s_abc = entropy_of(rho, set_union(set_union(a, b), c));
    return s_ac + s_bc - s_c - s_abc;
}

MutualInfoReport multiworld_mi(const DensityOperator& rho,
                               const PartitionModel& model) {
    if (model.kind() != PartitionKind::ModelC &&
        model.kind() != PartitionKind::Custom) {
        throw ArgumentError("multiworld_mi requires a model-c (or degenerate "
                            "custom) partition, got " +
                            partition_kind_name(model.kind()));
    }
    model.check_covers(rho.space());
    const std::set<Role> used = model.used_roles();
    if (!used.count(Role::S1) || !used.count(Role::S2)) {
        throw ArgumentError("multiworld_mi requires the S1 and S2 roles");
    }
    for (Role r : used) {
        if (r == Role::S) {
            throw ArgumentError("multiworld_mi does not accept the plain S role");
        }
    }

    // Eq.-(4) chain: the outer environment goes first
    DensityOperator world = rho;
    const PartySet e0 = role_set(model, Role::E0);
    if (!e0.empty()) {
        PartySet keep;
        for (const Party& p : rho.space().parties()) {
            if (!e0.count(p.label)) keep.insert(p.label);
        }
        world = partial_density(rho, keep);
    }

    const PartySet s1 = role_set(model, Role::S1);
    const PartySet s2 = role_set(model, Role::S2);
    const PartySet e1 = role_set(model, Role::E1);
    const PartySet e2 = role_set(model, Role::E2);
    const PartySet s1e1 = set_union(s1, e1);
    const PartySet s2e2 = set_union(s2, e2);

    MutualInfoReport report;
    report.model = partition_kind_name(model.kind());

    auto record = [&](const std::string& name, const PartySet& labels) {
        const double s = entropy_of(world, labels);
        report.entropies[name] = s;
        return s;
    };

    const double s_s1e1 = record(joined_role_names({Role::S1, Role::E1}), s1e1);
    const double s_s2e2 = record(joined_role_names({Role::S2, Role::E2}), s2e2);
    const double s_all =
        record("S_S1E1S2E2", set_union(s1e1, s2e2));
    const double s_e1 = record("S_E1", e1);
    const double s_e2 = record("S_E2", e2);
    const double s_e1e2 = record("S_E1E2", set_union(e1, e2));
    const double s_e1s2e2 = record("S_E1S2E2", set_union(e1, s2e2));
    const double s_s1e1e2 = record("S_S1E1E2", set_union(s1e1, e2));

    // plain terms vanish when either group is empty
    report.term_joint =
        (s1e1.empty() || s2e2.empty()) ? 0.0 : s_s1e1 + s_s2e2 - s_all;
    report.term_env = (e1.empty() || e2.empty()) ? 0.0 : s_e1 + s_e2 - s_e1e2;
    report.term_cond_12 =
        (e1.empty() || s2.empty()) ? 0.0 : s_e1e2 + s_s2e2 - s_e2 - s_e1s2e2;
    report.term_cond_21 =
        (e2.empty() || s1.empty()) ? 0.0 : s_e1e2 + s_s1e1 - s_e1 - s_s1e1e2;

    report.total = report.term_joint - report.term_env - report.term_cond_12 -
                   report.term_cond_21;
    report.eq_conditional_form = report.term_joint - report.term_env;

    report.case_shared_env_only = e1.empty() && e2.empty() && !e0.empty();
    report.case_single_env = e1.empty() != e2.empty();
    report.case_pure_universe = e0.empty();
    report.case_conditionals_vanish = std::abs(report.term_cond_12) <= kVanishTol &&
                                      std::abs(report.term_cond_21) <= kVanishTol;
    return report;
}

double slit_visibility(Complex overlap) {
    const double mag = std::abs(overlap);
    if (mag > 1.0 + 1e-12) {
        throw ArgumentError("apparatus overlap magnitude exceeds 1");
    }

    // apparatus states with <R|L> = overlap
    const Complex r0(1.0, 0.0);
    const double residual = std::sqrt(std::max(0.0, 1.0 - mag * mag));
    const Complex l0 = overlap;
    const Complex l1(residual, 0.0);

    const double w = 1.0 / std::sqrt(2.0);
    const MultipartiteSpace space({Party{"electron", 2}, Party{"apparatus", 2}});
    std::vector<Complex> amps(4, Complex(0.0, 0.0));
    amps[0] = w * r0; // |r>|R>
    amps[2] = w * l0; // |l>|L>
    amps[3] = w * l1;
    const PureState psi(space, std::move(amps));

    const DensityOperator reduced = partial_density(to_density(psi), {"electron"});
    return 2.0 * std::abs(reduced.matrix()(0, 1));
}

double rabi_entanglement(double gt) {
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    // atom basis {|e>, |g>}, field basis {|n-1>, |n>}
    const MultipartiteSpace space({Party{"atom", 2}, Party{"field", 2}});
    std::vector<Complex> amps(4, Complex(0.0, 0.0));
    amps[0] = Complex(c, 0.0);  // |e, n-1>
    amps[3] = Complex(0.0, -s); // -i |g, n>
    const PureState psi(space, std::move(amps));
    return entropy(partial_density(to_density(psi), {"atom"}));
}

} // namespace tangnet
