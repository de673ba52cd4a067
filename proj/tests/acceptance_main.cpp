// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero if any criterion fails. Tolerances are pinned in code next to
// the checks they gate.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tangnet/diagram.hpp"
#include "tangnet/infometrics.hpp"
#include "tangnet/notation.hpp"
#include "tangnet/structure.hpp"
#include "tangnet/symmetry.hpp"

using namespace tangnet;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int g_failures = 0;

void check(bool condition, const std::string& message) {
    if (!condition) {
        throw std::runtime_error(message);
    }
}

void criterion(int id, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "[PASS] criterion " << id << ": " << name << " ("
             << secs << " s)";
        std::cout << line.str() << std::endl;
    } catch (const std::exception& e) {
        std::cout << "[FAIL] criterion " << id << ": " << name << " -- " << e.what()
                  << std::endl;
        ++g_failures;
    }
}

std::string fixture_path(const std::string& name) {
    return std::string(TANGNET_TEST_DIR) + "/fixtures/" + name;
}

std::string golden_path(const std::string& name) {
    return std::string(TANGNET_TEST_DIR) + "/golden/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    check(in.good(), "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SpecDocument load_fixture(const std::string& name) {
    return parse(read_file(fixture_path(name)));
}

double entropy_oracle_of(const DensityOperator& rho, const PartySet& keep) {
    const CMatrix reduced = oracles::naive_partial_trace(
        rho.matrix(), rho.space().dims(), rho.space().indices_of(keep));
    return oracles::entropy_bits_oracle(reduced);
}

// ---- criteria ---------------------------------------------------------------

void criterion_eq5_identity() {
    const auto start = std::chrono::steady_clock::now();
    SplitMix64 seeds(101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 2 + trial % 3; // 2x2, 3x3, 4x4
        const MultipartiteSpace s({Party{"S", d}, Party{"E", d}});
        const PureState psi(s, haar_random_amplitudes({d, d}, seeds.next_u64()));
        const DensityOperator rho = to_density(psi);
        const double mi = mutual_info(rho, {"S"}, {"E"});
        const double s_env = entropy(partial_density(rho, {"E"}));
        check(std::abs(mi - 2.0 * s_env) <= 1e-8,
              "Eq.(5) identity broke at trial " + std::to_string(trial));
        const auto split = mutual_info_pure_bipartite(psi, {"E"});
        check(std::abs(split.total - mi) <= 1e-8, "split total mismatch");
        check(std::abs(split.classical_part - s_env) <= 1e-8 &&
                  std::abs(split.quantum_part - s_env) <= 1e-8,
              "classical/quantum halves mismatch");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check(secs < 5.0, "runtime bound 5 s exceeded");
}

void criterion_tracing_summing() {
    SplitMix64 rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + rng.next_u64() % 3; // <= 4
        const std::size_t members = 1 + rng.next_u64() % 4;
        const MultipartiteSpace s({Party{"A", dim}});
        std::vector<EnsembleMember> list;
        double total = 0.0;
        std::vector<double> weights(members);
        for (double& w : weights) {
            w = rng.next_open_double();
            total += w;
        }
        for (std::size_t m = 0; m < members; ++m) {
            list.push_back({weights[m] / total,
                            PureState(s, haar_random_amplitudes({dim},
                                                                rng.next_u64()))});
        }
        const Ensemble e(list);
        const CMatrix mixed = mix(e).matrix();
        const CMatrix traced =
            partial_density(to_density(views_equivalent(e)), {"A"}).matrix();
        check((mixed - traced).frobenius_norm() <= 1e-8,
              "views_equivalent trace-back broke at trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + trial % 4; // 2..5
        const DensityOperator rho = haar_random_density(dim, 9000 + trial);
        const PureState psi = purify(rho);
        const CMatrix back =
            partial_density(to_density(psi), {rho.space().parties()[0].label})
                .matrix();
        check((back - rho.matrix()).frobenius_norm() <= 1e-8,
              "purification round-trip broke at trial " + std::to_string(trial));
    }
}

void criterion_eq7_fixture() {
    // 4-qubit GHZ through the full parse -> model -> report chain
    const SpecDocument ghz_doc = load_fixture("ghz4.tgn");
    const DensityOperator ghz_rho = to_density(to_pure_state(ghz_doc));
    const MutualInfoReport ghz = multiworld_mi(ghz_rho, partition_from_document(ghz_doc));

    check(std::abs(ghz.term_joint - 2.0) <= 1e-9, "I(S1E1:S2E2) != 2");
    check(std::abs(ghz.term_env - 1.0) <= 1e-9, "I(E1:E2) != 1");
    check(std::abs(ghz.term_cond_12) <= 1e-9, "I(E1:S2|E2) != 0");
    check(std::abs(ghz.term_cond_21) <= 1e-9, "I(E2:S1|E1) != 0");
    check(std::abs(ghz.total - 1.0) <= 1e-9, "I_total != 1");
    check(ghz.case_conditionals_vanish, "case-(4) flag missing on GHZ");
    check(std::abs(ghz.total - ghz.eq_conditional_form) <=
              std::abs(ghz.term_cond_12) + std::abs(ghz.term_cond_21) + 1e-15,
          "Eq.(9) arithmetic agreement broke on GHZ");

    // cross-check every recorded entropy with the independent oracle
    const std::map<std::string, PartySet> groups = {
        {"S_S1E1", {"q1", "q2"}},           {"S_S2E2", {"q3", "q4"}},
        {"S_S1E1S2E2", {"q1", "q2", "q3", "q4"}}, {"S_E1", {"q2"}},
        {"S_E2", {"q4"}},                   {"S_E1E2", {"q2", "q4"}},
        {"S_E1S2E2", {"q2", "q3", "q4"}},   {"S_S1E1E2", {"q1", "q2", "q4"}},
    };
    for (const auto& [name, parties] : groups) {
        const double oracle = entropy_oracle_of(ghz_rho, parties);
        check(std::abs(ghz.entropies.at(name) - oracle) <= 1e-9,
              "entropy term " + name + " disagrees with the brute-force oracle");
    }

    // two independent Bell pairs: every term zero
    const SpecDocument pairs_doc = load_fixture("bell_pairs.tgn");
    const MutualInfoReport pairs =
        multiworld_mi(to_density(to_pure_state(pairs_doc)),
                      partition_from_document(pairs_doc));
    check(std::abs(pairs.term_joint) <= 1e-9 && std::abs(pairs.term_env) <= 1e-9 &&
              std::abs(pairs.term_cond_12) <= 1e-9 &&
              std::abs(pairs.term_cond_21) <= 1e-9,
          "Bell-pair terms are not all zero");
    check(std::abs(pairs.total) <= 1e-9, "Bell-pair I_total != 0");
    check(pairs.case_conditionals_vanish, "case-(4) flag missing on Bell pairs");
    check(std::abs(pairs.total - pairs.eq_conditional_form) <=
              std::abs(pairs.term_cond_12) + std::abs(pairs.term_cond_21) + 1e-15,
          "Eq.(9) arithmetic agreement broke on Bell pairs");
}

void criterion_fig2() {
    const SpecDocument doc = load_fixture("fig2.tgn");
    const PureState psi = to_pure_state(doc);

    const SchmidtDecomposition sd = schmidt(psi, {"A"});
    check(sd.coefficients.size() == 2, "figure-2 Schmidt rank != 2");
    check(std::abs(sd.coefficients[0] - kInvSqrt2) <= 1e-10 &&
              std::abs(sd.coefficients[1] - kInvSqrt2) <= 1e-10,
          "figure-2 Schmidt coefficients are not (1/sqrt2, 1/sqrt2)");

    const QuantumStructure qs = structure_from_state(psi);
    check(qs.branches().size() == 2, "figure-2 structure branch count != 2");
    check(std::abs(qs.branches()[0].length - qs.branches()[1].length) <= 1e-10,
          "figure-2 branches are not equal length");
    const double relative = std::abs(qs.branches()[1].orientation_deg -
                                     qs.branches()[0].orientation_deg);
    check(std::abs(relative - 90.0) <= 1e-9,
          "figure-2 relative orientation != 90 degrees");

    const PureState back = state_from_structure(qs);
    check(std::abs(psi.overlap(back)) >= 1.0 - 1e-9,
          "state_from_structure round trip lost fidelity");
}

void criterion_family() {
    const PureState fig2 = to_pure_state(load_fixture("fig2.tgn"));
    const PureState member = family_state({Pairing::Asymmetric, 45.0, 270.0});
    check(std::abs(member.overlap(fig2)) >= 1.0 - 1e-12,
          "(asym, 45, 270) does not reproduce the figure-2 state");

    const MultipartiteSpace s({Party{"A", 2}, Party{"B", 2}});
    const auto bell = [&](std::size_t i, std::size_t j, double sign) {
        std::vector<Complex> amps(4, Complex(0, 0));
        amps[i] = kInvSqrt2;
        amps[j] = sign * kInvSqrt2;
        return PureState(s, amps);
    };
    const PureState phi_plus = bell(0, 3, 1.0);
    const PureState phi_minus = bell(0, 3, -1.0);
    const PureState psi_plus = bell(1, 2, 1.0);
    const PureState psi_minus = bell(1, 2, -1.0);

    check(std::abs(family_state({Pairing::Symmetric, 45.0, 0.0}).overlap(phi_plus)) >=
              1.0 - 1e-12,
          "(sym, 45, 0) is not phi+");
    check(std::abs(family_state({Pairing::Symmetric, 45.0, 180.0})
                       .overlap(phi_minus)) >= 1.0 - 1e-12,
          "(sym, 45, 180) is not phi-");
    check(std::abs(family_state({Pairing::Asymmetric, 45.0, 0.0}).overlap(psi_plus)) >=
              1.0 - 1e-12,
          "(asym, 45, 0) is not psi+");
    check(std::abs(family_state({Pairing::Asymmetric, 45.0, 180.0})
                       .overlap(psi_minus)) >= 1.0 - 1e-12,
          "(asym, 45, 180) is not psi-");
}

void criterion_out_in() {
    const auto start = std::chrono::steady_clock::now();

    std::vector<PureState> fixtures;
    const MultipartiteSpace qq({Party{"A", 2}, Party{"B", 2}});
    fixtures.push_back(PureState(qq, {Complex(kInvSqrt2, 0), Complex(0, 0),
                                      Complex(0, 0), Complex(kInvSqrt2, 0)}));
    fixtures.push_back(to_pure_state(load_fixture("fig2.tgn")));
    fixtures.push_back(family_state({Pairing::Asymmetric, 30.0, 120.0}));
    const MultipartiteSpace qd({Party{"A", 3}, Party{"B", 3}});
    fixtures.push_back(PureState(qd, haar_random_amplitudes({3, 3}, 4711)));

    std::uint64_t seed = 1000;
    for (const PureState& psi : fixtures) {
        const OutInSummary summary = out_in_suite(psi, 200, seed++);
        check(summary.worst_spectrum_distance <= 1e-8,
              "Schmidt spectrum moved more than 1e-8");
        check(summary.worst_envariance_residual <= 1e-8,
              "envariance residual above 1e-8");
        check(!summary.classes_tracked || summary.swap_class_always_preserved,
              "structure class changed under swap");
    }

    // SWAP keeps the class of all 8 enumerated candidates
    for (Pairing pairing : {Pairing::Symmetric, Pairing::Asymmetric}) {
        for (double theta : {0.0, 90.0, 180.0, 270.0}) {
            const PureState psi = family_state({pairing, 45.0, theta});
            const auto [after, verdict] = apply_permutation(psi);
            check(!verdict.structure_class_changed,
                  "class changed under swap for a family candidate");
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check(secs < 20.0, "runtime bound 20 s exceeded");
}

void criterion_demos() {
    // closed form |overlap| against the implementation (which reduces the
    // explicit 4-dim state), plus the independent traced-matrix oracle
    for (double overlap : {0.0, 1.0, 0.5}) {
        const double got = slit_visibility(Complex(overlap, 0));
        check(std::abs(got - overlap) <= 1e-12, "visibility != |overlap|");

        const double w = kInvSqrt2;
        const double residual = std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
        std::vector<Complex> amps = {Complex(w, 0), Complex(0, 0),
                                     Complex(w * overlap, 0),
                                     Complex(w * residual, 0)};
        std::vector<Complex> proj(16);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                proj[i * 4 + j] = amps[i] * std::conj(amps[j]);
            }
        }
        const CMatrix reduced = oracles::naive_partial_trace(
            CMatrix(4, 4, proj), {2, 2}, {0});
        check(std::abs(2.0 * std::abs(reduced(0, 1)) - got) <= 1e-12,
              "visibility disagrees with the brute-force reduced matrix");
    }

    check(std::abs(rabi_entanglement(0.0)) <= 1e-12, "rabi(0) != 0");
    check(std::abs(rabi_entanglement(M_PI / 4.0) - 1.0) <= 1e-10,
          "rabi(pi/4) != 1");
    check(std::abs(rabi_entanglement(M_PI / 2.0)) <= 1e-10, "rabi(pi/2) != 0");
}

void criterion_ssa() {
    SplitMix64 rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dc = (trial % 2 == 0) ? 2 : 4;
        const MultipartiteSpace s({Party{"A", 2}, Party{"B", 2}, Party{"C", dc}});
        const PureState psi(s, haar_random_amplitudes({2, 2, dc}, rng.next_u64()));
        const double value =
            conditional_mutual_info(to_density(psi), {"A"}, {"B"}, {"C"});
        check(value >= -1e-9,
              "conditional mutual information below -1e-9 at trial " +
                  std::to_string(trial));
    }
}

void criterion_parser_emitters() {
    // round trips on every fixture
    for (const char* name : {"fig2.tgn", "ghz4.tgn", "bell_pairs.tgn", "product.tgn",
                             "ghz3.tgn", "bell.tgn"}) {
        const SpecDocument doc = load_fixture(name);
        const std::string canonical = format_document(doc);
        const SpecDocument again = parse(canonical);
        check(structurally_equal(doc, again),
              std::string("round trip changed ") + name);
        check(format_document(again) == canonical,
              std::string("canonical form is not a fixed point for ") + name);
    }

    // golden bytes
    const QuantumStructure fig2 =
        structure_from_state(to_pure_state(load_fixture("fig2.tgn")));
    check(emit_structure_diagram(fig2, DiagramFormat::Dot).body ==
              read_file(golden_path("fig2_structure.dot")),
          "fig2 dot golden mismatch");
    check(emit_structure_diagram(fig2, DiagramFormat::Svg).body ==
              read_file(golden_path("fig2_structure.svg")),
          "fig2 svg golden mismatch");
    const PartitionModel model_b(
        PartitionKind::ModelB,
        {{"A", Role::S}, {"B", Role::E1}, {"C", Role::E0}});
    check(emit_partition_diagram(model_b, DiagramFormat::Dot).body ==
              read_file(golden_path("model_b_partition.dot")),
          "model-b dot golden mismatch");
    check(emit_partition_diagram(model_b, DiagramFormat::Svg).body ==
              read_file(golden_path("model_b_partition.svg")),
          "model-b svg golden mismatch");
    const PartitionModel model_c(PartitionKind::ModelC, {{"a", Role::S1},
                                                         {"b", Role::E1},
                                                         {"c", Role::S2},
                                                         {"d", Role::E2}});
    check(emit_partition_diagram(model_c, DiagramFormat::Dot).body ==
              read_file(golden_path("model_c_partition.dot")),
          "model-c dot golden mismatch");

    // 1000 invalid inputs: a diagnostic or a clean parse, never a crash
    SplitMix64 rng(404);
    const std::string base = read_file(fixture_path("fig2.tgn"));
    int diagnostics = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::string mutated;
        if (trial % 5 == 0) {
            const std::size_t len = rng.next_u64() % 60;
            for (std::size_t k = 0; k < len; ++k) {
                mutated.push_back(static_cast<char>(rng.next_u64() % 255 + 1));
            }
        } else {
            mutated = base;
            const std::size_t edits = 1 + rng.next_u64() % 5;
            for (std::size_t e = 0; e < edits && !mutated.empty(); ++e) {
                const std::size_t pos = rng.next_u64() % mutated.size();
                switch (rng.next_u64() % 3) {
                    case 0:
                        mutated[pos] = static_cast<char>(rng.next_u64() % 96 + 32);
                        break;
                    case 1:
                        mutated.erase(pos, 1 + rng.next_u64() % 4);
                        break;
                    default:
                        mutated.insert(pos, 1,
                                       static_cast<char>(rng.next_u64() % 96 + 32));
                        break;
                }
            }
        }
        try {
            parse(mutated);
        } catch (const ParseError& e) {
            check(e.line() >= 1 && !e.expected().empty(),
                  "diagnostic without position or expected set");
            ++diagnostics;
        } catch (...) {
            check(false, "non-diagnostic escape on fuzz case " +
                             std::to_string(trial));
        }
    }
    check(diagnostics > 400, "fuzz produced suspiciously few diagnostics");
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();

    criterion(1, "Eq.(5) identity on Haar-random bipartite states",
              criterion_eq5_identity);
    criterion(2, "tracing/summing equivalence and purification round trip",
              criterion_tracing_summing);
    criterion(3, "Eq.(7) fixtures: 4-qubit GHZ and independent Bell pairs",
              criterion_eq7_fixture);
    criterion(4, "figure-2 reproduction through parser, Schmidt, and structure",
              criterion_fig2);
    criterion(5, "two-qubit family special cases", criterion_family);
    criterion(6, "out-in suite: spectrum, envariance, and swap classes",
              criterion_out_in);
    criterion(7, "double-slit and Rabi demos", criterion_demos);
    criterion(8, "strong-subadditivity spot check", criterion_ssa);
    criterion(9, "parser round trips, golden files, and fuzz",
              criterion_parser_emitters);

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    criterion(10, "whole suite under 60 s with the 4096 dimension cap", [&] {
        check(total < 60.0, "suite took " + std::to_string(total) + " s");
        check(dimension_cap() == 4096, "dimension cap is not the default 4096");
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (" << (10 - g_failures) << "/10)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
