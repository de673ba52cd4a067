#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& arguments, const std::string& env = "") {
    const std::string command = (env.empty() ? "" : env + " ") +
                                std::string(TANGNET_CLI_BIN) + " " + arguments +
                                " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{exit_code, output};
}

std::string fixture(const std::string& name) {
    return std::string(TANGNET_TEST_DIR) + "/fixtures/" + name;
}

double as_number(const std::string& text) { return std::strtod(text.c_str(), nullptr); }

} // namespace

TEST_CASE("demo values through the CLI") {
    const CliResult zero = run_cli("demo slit --overlap 0");
    CHECK(zero.exit_code == 0);
    CHECK(as_number(zero.output) == doctest::Approx(0.0).epsilon(1e-12));

    const CliResult half = run_cli("demo slit --overlap 0.5 --json");
    CHECK(half.exit_code == 0);
    const auto half_json = nlohmann::json::parse(half.output);
    CHECK(half_json.at("visibility").get<double>() ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.output.back() == '\n');

    const CliResult rabi = run_cli("demo rabi --gt 0.7853981633974483 --json");
    CHECK(rabi.exit_code == 0);
    CHECK(nlohmann::json::parse(rabi.output).at("entanglement_bits").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("entropy, mi, and schmidt subcommands") {
    const CliResult product = run_cli("entropy " + fixture("product.tgn") + " --keep A");
    CHECK(product.exit_code == 0);
    CHECK(std::abs(as_number(product.output)) < 1e-9);

    const CliResult bell = run_cli("mi " + fixture("bell.tgn") + " --a A --b B");
    CHECK(bell.exit_code == 0);
    CHECK(as_number(bell.output) == doctest::Approx(2.0).epsilon(1e-9));

    const CliResult cond =
        run_cli("mi " + fixture("ghz3.tgn") + " --a q1 --b q2 --c q3 --json");
    CHECK(cond.exit_code == 0);
    CHECK(nlohmann::json::parse(cond.output)
              .at("conditional_mutual_info_bits")
              .get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const CliResult schmidt =
        run_cli("schmidt " + fixture("fig2.tgn") + " --left A --json");
    CHECK(schmidt.exit_code == 0);
    const auto sj = nlohmann::json::parse(schmidt.output);
    REQUIRE(sj.at("coefficients").size() == 2);
    CHECK(sj.at("coefficients")[0].get<double>() ==
          doctest::Approx(0.7071067811865476).epsilon(1e-10));
}

TEST_CASE("mi7 report on the GHZ fixture") {
    const CliResult got = run_cli("mi7 " + fixture("ghz4.tgn") + " --json");
    CHECK(got.exit_code == 0);
    const auto j = nlohmann::json::parse(got.output);
    CHECK(j.at("I_total").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("terms").at("I_S1E1:S2E2").get<double>() ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(j.at("terms").at("I_E1:E2").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("cases").at("conditionals_vanish").get<bool>());

    // role assignments may come from the command line instead
    const CliResult flagged = run_cli(
        "mi7 " + fixture("ghz4.tgn") + " --roles S1=q1,E1=q2,S2=q3,E2=q4 --json");
    CHECK(flagged.exit_code == 0);
    CHECK(nlohmann::json::parse(flagged.output).at("I_total").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("reduce and structure subcommands") {
    const CliResult reduced =
        run_cli("reduce " + fixture("ghz3.tgn") + " --target S --json");
    CHECK(reduced.exit_code == 0);
    CHECK(nlohmann::json::parse(reduced.output).at("purity").get<double>() ==
          doctest::Approx(0.5).epsilon(1e-9));

    const CliResult dot = run_cli("structure " + fixture("fig2.tgn") + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("ang=90\xC2\xB0") != std::string::npos);

    const CliResult svg = run_cli("structure " + fixture("fig2.tgn") + " --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.find("<svg") != std::string::npos);

    const CliResult boxes =
        run_cli("structure " + fixture("ghz3.tgn") + " --partition --format dot");
    CHECK(boxes.exit_code == 0);
    CHECK(boxes.output.find("cluster_") != std::string::npos);

    const CliResult js = run_cli("structure " + fixture("fig2.tgn") + " --json");
    CHECK(js.exit_code == 0);
    CHECK(nlohmann::json::parse(js.output).at("branches").size() == 2);
}

TEST_CASE("classify and symmetry subcommands") {
    const CliResult cls = run_cli("classify " + fixture("bell.tgn") + " --json");
    CHECK(cls.exit_code == 0);
    CHECK(nlohmann::json::parse(cls.output).at("pairing").get<std::string>() ==
          "symmetric");

    const CliResult enumerated = run_cli("classify --enumerate --json");
    CHECK(enumerated.exit_code == 0);
    const auto ej = nlohmann::json::parse(enumerated.output);
    CHECK(ej.at("candidate_count").get<int>() == 8);
    CHECK(ej.at("distinct_count").get<int>() == 6);

    const CliResult sym = run_cli("symmetry " + fixture("bell.tgn") +
                                  " --op suite --trials 50 --seed 7 --json");
    CHECK(sym.exit_code == 0);
    const auto sj = nlohmann::json::parse(sym.output);
    CHECK(sj.at("within_tol").get<bool>());
    CHECK(sj.at("trials").get<int>() == 50);

    const CliResult swap_only = run_cli("symmetry " + fixture("fig2.tgn") +
                                        " --op swap --trials 5 --json");
    CHECK(swap_only.exit_code == 0);
    const auto swap_json = nlohmann::json::parse(swap_only.output);
    CHECK(swap_json.at("swap_class_always_preserved").get<bool>());
    // the deterministic single-application verdict rides along
    CHECK(swap_json.at("verdict").at("operation").get<std::string>() == "swap");
    CHECK_FALSE(swap_json.at("verdict").at("structure_class_changed").get<bool>());
    CHECK(swap_json.at("verdict").at("schmidt_spectrum_distance").get<double>() <=
          1e-10);
    CHECK(swap_json.at("verdict").at("state_distance").get<double>() > 0.1);
}

TEST_CASE("parse echoes the canonical form") {
    const CliResult echoed = run_cli("parse " + fixture("fig2.tgn"));
    CHECK(echoed.exit_code == 0);
    CHECK(echoed.output.find("tangnet-spec v1") == 0);
    CHECK(echoed.output.find("0.70710678 |0,1>") != std::string::npos);
}

TEST_CASE("exit codes map error categories") {
    // domain errors -> 1
    CHECK(run_cli("parse " + fixture("bad_norm.tgn")).exit_code == 1);
    CHECK(run_cli("parse " + fixture("bad_index.tgn")).exit_code == 1);
    CHECK(run_cli("parse /no/such/file.tgn").exit_code == 1);
    CHECK(run_cli("mi " + fixture("bell.tgn") + " --a A --b A").exit_code == 1);

    // the normalize flag turns the norm error into success
    CHECK(run_cli("parse " + fixture("bad_norm.tgn") + " --normalize").exit_code == 0);

    // usage errors -> 2
    CHECK(run_cli("no_such_command").exit_code == 2);
    CHECK(run_cli("parse").exit_code == 2);
    CHECK(run_cli("parse " + fixture("bell.tgn") + " --bogus-flag").exit_code == 2);
    CHECK(run_cli("demo slit").exit_code == 2);

    // success -> 0
    CHECK(run_cli("demo slit --overlap 1").exit_code == 0);
}

TEST_CASE("TANGNET_MAX_DIM lowers the dimension cap") {
    CHECK(run_cli("parse " + fixture("ghz4.tgn"), "TANGNET_MAX_DIM=8").exit_code == 1);
    CHECK(run_cli("parse " + fixture("ghz4.tgn"), "TANGNET_MAX_DIM=16").exit_code == 0);
    CHECK(run_cli("parse " + fixture("ghz4.tgn"), "TANGNET_MAX_DIM=bogus").exit_code ==
          1);
}
