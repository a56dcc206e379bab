#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hk/suites.hpp"

namespace {

// Plain-text rendering: one line per check.
void render_suite(const nlohmann::json& suite, std::ostream& os) {
    os << "== " << suite.value("suite", std::string("suite")) << " ==\n";
    for (const auto& rec : suite.at("checks")) {
        std::string status = rec.at("status");
        os << "  [" << (status == "pass" ? "pass" : status == "skipped" ? "skip" : "FAIL")
           << "] " << rec.value("id", std::string()) << ": "
           << rec.value("identity", std::string()) << "\n";
        if (rec.contains("witness"))
            os << "         witness: " << rec.at("witness").get<std::string>() << "\n";
    }
}

void render(const nlohmann::json& report, std::ostream& os) {
    if (report.contains("suites")) {
        for (const auto& [name, suite] : report.at("suites").items()) render_suite(suite, os);
    } else {
        render_suite(report, os);
    }
    os << (report.at("pass").get<bool>() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT")
       << "\n";
}

int emit(const hk::SuiteResult& result, bool as_json) {
    if (as_json)
        std::cout << result.report.dump(2) << "\n";
    else
        render(result.report, std::cout);
    return result.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for graph homology, the symplectic "
                 "contraction calculus, the formal Lefschetz rewriting system, Todd "
                 "series, and Riemann-Roch polynomials of the known hyperkahler "
                 "families"};
    app.require_subcommand(1);

    bool as_json = false, as_csv = false, assume_p1 = false;
    std::uint64_t seed = 42;
    int max_degree = 8, max_n = -1, trials = -1, gens = 0, todd_n = 8;
    std::string diagram = "all", family = "all";

    app.add_flag("--json", as_json, "emit the JSON report");
    app.add_option("--seed", seed, "seed for randomized checks");

    auto* wheeling = app.add_subcommand("wheeling", "wheeling identity modulo AS/IHX");
    wheeling->add_option("--max-degree", max_degree,
                         "largest total vertex degree of an Omega piece (even)");

    auto* phi = app.add_subcommand("phi-check", "gluing vs contraction on random cubics");
    phi->add_option("--diagram", diagram, "w2|w4|theta-union-tests|all");
    phi->add_option("--n", max_n, "largest half-dimension (default 3)");
    phi->add_option("--gens", gens, "auxiliary odd generators (default: trivalent+1)");
    phi->add_option("--trials", trials, "random trials per diagram (default 50)");

    auto* sl2 = app.add_subcommand("sl2-check", "local sl2 commutators on random elements");
    sl2->add_option("--n", max_n, "largest half-dimension (default 3)");
    sl2->add_option("--gens", gens, "auxiliary odd generators (default 3)");
    sl2->add_option("--trials", trials, "random trials per n (default 100)");

    auto* lef = app.add_subcommand("lefschetz", "formal sl2 rewriting system checks");
    lef->add_option("--max-n", max_n, "largest ambient n (default 12)");
    lef->add_flag("--assume-p1-positive", assume_p1,
                  "claim strictness of the degree bound for m > 1");

    auto* todd = app.add_subcommand("todd", "Bernoulli, Todd and wheel-symbol pipelines");
    todd->add_option("--n", todd_n, "truncation weight (default 8)");

    auto* rr = app.add_subcommand("rr", "Riemann-Roch polynomials of the known families");
    rr->add_option("--family", family, "k3n|kummer|og6|og10|all");
    rr->add_option("--n", max_n, "largest n (default 20)");
    rr->add_flag("--csv", as_csv, "emit the CSV table instead of a report");

    auto* ids = app.add_subcommand("identities", "combinatorial factorial identities");
    ids->add_option("--max-n", max_n, "largest n (default 40)");

    auto* all = app.add_subcommand("all", "every suite at default bounds");
    all->add_flag("--assume-p1-positive", assume_p1,
                  "claim strictness of the degree bound for m > 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (wheeling->parsed()) return emit(hk::run_wheeling(max_degree), as_json);
        if (phi->parsed())
            return emit(hk::run_phi_check(diagram, max_n < 0 ? 3 : max_n, gens,
                                          trials < 0 ? 50 : trials, seed),
                        as_json);
        if (sl2->parsed())
            return emit(hk::run_sl2_check(max_n < 0 ? 3 : max_n, gens <= 0 ? 3 : gens,
                                          trials < 0 ? 100 : trials, seed),
                        as_json);
        if (lef->parsed())
            return emit(hk::run_lefschetz(max_n < 0 ? 12 : max_n, seed, assume_p1), as_json);
        if (todd->parsed()) return emit(hk::run_todd(todd_n), as_json);
        if (rr->parsed()) {
            if (as_csv) {
                std::cout << hk::rr_csv(family, max_n < 0 ? 20 : max_n);
                return 0;
            }
            return emit(hk::run_rr(family, max_n < 0 ? 20 : max_n), as_json);
        }
        if (ids->parsed()) return emit(hk::run_identities(max_n < 0 ? 40 : max_n), as_json);
        if (all->parsed()) {
            hk::SuiteDefaults d;
            d.seed = seed;
            d.assume_p1_positive = assume_p1;
            return emit(hk::run_all(d), as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
