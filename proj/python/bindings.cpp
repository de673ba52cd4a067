// pybind11 surface over the core operations: state construction, the DSL
// parser, entropy/mutual-information reports, Schmidt data, quantum
// structures and classes, the demos, and the out-in symmetry trials.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tangnet/diagram.hpp"
#include "tangnet/infometrics.hpp"
#include "tangnet/json_io.hpp"
#include "tangnet/notation.hpp"
#include "tangnet/structure.hpp"
#include "tangnet/symmetry.hpp"

namespace py = pybind11;
using namespace tangnet;

namespace {

using PartyList = std::vector<std::pair<std::string, std::size_t>>;

MultipartiteSpace make_space(const PartyList& parties) {
    std::vector<Party> list;
    for (const auto& [label, dim] : parties) {
        list.push_back(Party{label, dim});
    }
    return MultipartiteSpace(std::move(list));
}

PartySet to_set(const std::vector<std::string>& labels) {
    return PartySet(labels.begin(), labels.end());
}

std::map<std::string, Role> to_roles(const std::map<std::string, std::string>& raw) {
    std::map<std::string, Role> roles;
    for (const auto& [party, role_text] : raw) {
        const std::optional<Role> role = role_from_name(role_text);
        if (!role) {
            throw ArgumentError("unknown role '" + role_text + "'");
        }
        roles.emplace(party, *role);
    }
    return roles;
}

Pairing to_pairing(const std::string& name) {
    if (name == "symmetric") return Pairing::Symmetric;
    if (name == "asymmetric") return Pairing::Asymmetric;
    throw ArgumentError("pairing must be 'symmetric' or 'asymmetric'");
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

DensityOperator density_of(const PureState& psi) { return to_density(psi); }

} // namespace

PYBIND11_MODULE(_tangnet, m) {
    m.doc() = "entropy and mutual-information decompositions, quantum "
              "structures, and out-in symmetry checks";

    py::register_exception<Error>(m, "TangnetError");

    py::class_<PureState>(m, "State")
        .def(py::init([](const PartyList& parties,
                         const std::vector<Complex>& amplitudes) {
                 return PureState(make_space(parties), amplitudes);
             }),
             py::arg("parties"), py::arg("amplitudes"))
        .def_property_readonly("parties",
                               [](const PureState& s) {
                                   PartyList out;
                                   for (const Party& p : s.space().parties()) {
                                       out.emplace_back(p.label, p.dim);
                                   }
                                   return out;
                               })
        .def_property_readonly(
            "amplitudes",
            [](const PureState& s) { return s.amplitudes(); })
        .def("overlap", &PureState::overlap, py::arg("other"))
        .def("__repr__", [](const PureState& s) {
            return "<tangnet.State dim=" + std::to_string(s.space().total_dim()) +
                   ">";
        });

    m.def(
        "parse_state",
        [](const std::string& text, const std::string& name, bool normalize) {
            ParseOptions options;
            options.allow_off_norm = normalize;
            return to_pure_state(parse(text, options), name);
        },
        py::arg("text"), py::arg("name") = "", py::arg("normalize") = false,
        "Build a state from DSL text");

    m.def(
        "canonical_form",
        [](const std::string& text) { return format_document(parse(text)); },
        py::arg("text"), "Parse DSL text and return the canonical form");

    m.def(
        "entropy",
        [](const PureState& psi, const std::vector<std::string>& keep) {
            return entropy(partial_density(density_of(psi), to_set(keep)));
        },
        py::arg("state"), py::arg("keep"),
        "Entropy of the reduced state on `keep`, in bits");

    m.def(
        "mutual_info",
        [](const PureState& psi, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            return mutual_info(density_of(psi), to_set(a), to_set(b));
        },
        py::arg("state"), py::arg("a"), py::arg("b"));

    m.def(
        "conditional_mutual_info",
        [](const PureState& psi, const std::vector<std::string>& a,
           const std::vector<std::string>& b, const std::vector<std::string>& c) {
            return conditional_mutual_info(density_of(psi), to_set(a), to_set(b),
                                           to_set(c));
        },
        py::arg("state"), py::arg("a"), py::arg("b"),
        py::arg("c") = std::vector<std::string>{});

    m.def(
        "multiworld_report",
        [](const PureState& psi, const std::map<std::string, std::string>& roles) {
            const PartitionModel model = infer_partition_model(to_roles(roles));
            return json_to_py(report_json(multiworld_mi(density_of(psi), model)));
        },
        py::arg("state"), py::arg("roles"),
        "The multi-world mutual-information report as a dict");

    m.def(
        "schmidt_coefficients",
        [](const PureState& psi, const std::vector<std::string>& left) {
            return schmidt(psi, to_set(left)).coefficients;
        },
        py::arg("state"), py::arg("left"));

    m.def(
        "purity",
        [](const PureState& psi, const std::vector<std::string>& keep) {
            return purity(partial_density(density_of(psi), to_set(keep)));
        },
        py::arg("state"), py::arg("keep"));

    m.def(
        "structure_of",
        [](const PureState& psi) {
            return json_to_py(structure_json(structure_from_state(psi)));
        },
        py::arg("state"), "Branches, lengths, and orientations as a dict");

    m.def(
        "classify",
        [](const PureState& psi) {
            return json_to_py(structure_class_json(classify_state(psi)));
        },
        py::arg("state"));

    m.def("enumerate_qubit_classes",
          []() { return json_to_py(enumeration_json(enumerate_qubit_classes())); });

    m.def(
        "family_state",
        [](const std::string& pairing, double alpha_deg, double theta_deg) {
            return family_state({to_pairing(pairing), alpha_deg, theta_deg});
        },
        py::arg("pairing"), py::arg("alpha_deg"), py::arg("theta_deg"));

    m.def("slit_visibility", &slit_visibility, py::arg("overlap"));
    m.def("rabi_entanglement", &rabi_entanglement, py::arg("gt"));

    m.def(
        "out_in_suite",
        [](const PureState& psi, std::size_t trials, std::uint64_t seed,
           const std::string& op) {
            return json_to_py(summary_json(symmetry_trials(psi, op, trials, seed)));
        },
        py::arg("state"), py::arg("trials") = 100, py::arg("seed") = 0,
        py::arg("op") = "suite");

    m.def(
        "structure_diagram",
        [](const PureState& psi, const std::string& format) {
            return emit_structure_diagram(structure_from_state(psi),
                                          diagram_format_from_name(format))
                .body;
        },
        py::arg("state"), py::arg("format") = "dot");

    m.def(
        "partition_diagram",
        [](const std::map<std::string, std::string>& roles,
           const std::string& format) {
            const PartitionModel model = infer_partition_model(to_roles(roles));
            return emit_partition_diagram(model, diagram_format_from_name(format))
                .body;
        },
        py::arg("roles"), py::arg("format") = "dot");

    m.def("dimension_cap", &dimension_cap);
    m.def("set_dimension_cap", &set_dimension_cap, py::arg("cap"));
}
