#include "tangnet/json_io.hpp"

namespace tangnet {

Json report_json(const MutualInfoReport& report) {
    Json terms;
    terms["I_S1E1:S2E2"] = report.term_joint;
    terms["I_E1:E2"] = report.term_env;
    terms["I_E1:S2|E2"] = report.term_cond_12;
    terms["I_E2:S1|E1"] = report.term_cond_21;

    Json cases;
    cases["shared_env_only"] = report.case_shared_env_only;
    cases["single_env"] = report.case_single_env;
    cases["pure_universe"] = report.case_pure_universe;
    cases["conditionals_vanish"] = report.case_conditionals_vanish;

    Json out;
    out["model"] = report.model;
    out["entropies"] = report.entropies;
    out["terms"] = terms;
    out["I_total"] = report.total;
    out["I_conditional_form"] = report.eq_conditional_form;
    out["cases"] = cases;
    return out;
}

Json verdict_json(const SymmetryVerdict& verdict) {
    Json out;
    out["operation"] = verdict.operation;
    out["state_distance"] = verdict.state_distance;
    out["structure_class_changed"] = verdict.structure_class_changed;
    out["schmidt_spectrum_distance"] = verdict.schmidt_spectrum_distance;
    return out;
}

Json summary_json(const OutInSummary& summary) {
    Json out;
    out["trials"] = summary.trials;
    out["op_counts"] = summary.op_counts;
    out["worst_state_distance"] = summary.worst_state_distance;
    out["worst_spectrum_distance"] = summary.worst_spectrum_distance;
    out["worst_envariance_residual"] = summary.worst_envariance_residual;
    out["classes_tracked"] = summary.classes_tracked;
    out["swap_class_always_preserved"] = summary.swap_class_always_preserved;
    out["rotation_class_always_preserved"] = summary.rotation_class_always_preserved;
    return out;
}

Json structure_json(const QuantumStructure& qs) {
    Json parties = Json::array();
    Json nodes = Json::array();
    for (const Party& p : qs.parties()) {
        parties.push_back({{"label", p.label}, {"dim", p.dim}});
        for (std::size_t i = 0; i < p.dim; ++i) {
            nodes.push_back({{"party", p.label}, {"index", i}});
        }
    }
    Json branches = Json::array();
    for (const Branch& b : qs.branches()) {
        branches.push_back({{"nodes", b.nodes},
                            {"length", b.length},
                            {"orientation", b.orientation_deg}});
    }
    Json out;
    out["parties"] = parties;
    out["nodes"] = nodes;
    out["branches"] = branches;
    out["reference_branch"] = qs.reference_branch();
    return out;
}

Json structure_class_json(const StructureClass& cls) {
    Json out;
    out["pairing"] = pairing_name(cls.pairing);
    out["weight_profile"] = cls.weight_profile;
    out["phase_class"] = cls.phase_class;
    return out;
}

Json enumeration_json(const QubitClassEnumeration& e) {
    Json classes = Json::array();
    for (const QubitClassEntry& entry : e.classes) {
        Json members = Json::array();
        for (const TwoQubitFamily& m : entry.members) {
            members.push_back({{"pairing", pairing_name(m.pairing)},
                               {"alpha_deg", m.alpha_deg},
                               {"theta_deg", m.theta_deg}});
        }
        classes.push_back({{"class", structure_class_json(entry.cls)},
                           {"members", members}});
    }
    Json out;
    out["candidate_count"] = e.candidate_count;
    out["distinct_count"] = e.distinct_count();
    out["classes"] = classes;
    return out;
}

Json schmidt_json(const SchmidtDecomposition& sd) {
    Json out;
    out["left_parties"] = sd.left_parties;
    out["right_parties"] = sd.right_parties;
    out["coefficients"] = sd.coefficients;
    out["rank"] = sd.rank();
    return out;
}

Json document_json(const SpecDocument& doc) {
    Json parties = Json::array();
    for (const Party& p : doc.parties) {
        parties.push_back({{"label", p.label}, {"dim", p.dim}});
    }
    Json states = Json::array();
    for (const StateDecl& decl : doc.states) {
        Json terms = Json::array();
        for (const StateTerm& t : decl.terms) {
            terms.push_back({{"re", t.amplitude.real()},
                             {"im", t.amplitude.imag()},
                             {"indices", t.indices}});
        }
        states.push_back({{"name", decl.name}, {"terms", terms}});
    }
    Json out;
    out["system"] = doc.system_name;
    out["parties"] = parties;
    out["states"] = states;
    if (doc.roles) {
        Json roles;
        for (const auto& [label, role] : *doc.roles) {
            roles[label] = role_name(role);
        }
        out["roles"] = roles;
    }
    return out;
}

Json matrix_json(const CMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = rows;
    return out;
}

} // namespace tangnet
