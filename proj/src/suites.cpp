#include "hk/suites.hpp"

#include <chrono>

#include "hk/char_classes.hpp"
#include "hk/identities.hpp"
#include "hk/ihx.hpp"
#include "hk/lefschetz.hpp"
#include "hk/phi.hpp"
#include "hk/rr_poly.hpp"

namespace hk {

namespace {

using nlohmann::json;

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

json check_record(const std::string& id, const std::string& identity, bool pass,
                  const std::string& witness = "") {
    json j;
    j["id"] = id;
    j["identity"] = identity;
    j["status"] = pass ? "pass" : "fail";
    if (!pass && !witness.empty()) j["witness"] = witness;
    return j;
}

json skipped_record(const std::string& id, const std::string& identity,
                    const std::string& reason) {
    json j;
    j["id"] = id;
    j["identity"] = identity;
    j["status"] = "skipped";
    j["reason"] = reason;
    return j;
}

struct SuiteBuilder {
    json report;
    bool pass = true;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit SuiteBuilder(const std::string& suite) {
        report["suite"] = suite;
        report["version"] = kToolVersion;
        report["checks"] = json::array();
    }
    void add(const json& rec) {
        if (rec.at("status") == "fail") pass = false;
        report["checks"].push_back(rec);
    }
    SuiteResult finish() {
        report["elapsed_ms"] = ms_since(t0);
        report["pass"] = pass;
        return {report, pass};
    }
};

} // namespace

// ---------------------------------------------------------------------------
// wheeling
// ---------------------------------------------------------------------------

SuiteResult run_wheeling(int max_degree) {
    SuiteBuilder sb("wheeling");
    sb.report["params"] = {{"max_degree", max_degree}};
    WheelingReport rep = wheeling_check(max_degree);
    for (const auto& d : rep.degrees) {
        json rec = check_record(
            "wheeling-degree-" + std::to_string(d.degree),
            "d(Omega_" + std::to_string(d.degree) + ") - (Theta/48) Omega_" +
                std::to_string(d.degree - 2) + " = 0 mod AS/IHX",
            d.reduced_norm_zero);
        rec["degree"] = d.degree;
        rec["basis_size"] = d.basis_size;
        rec["relation_rank"] = d.relation_rank;
        rec["reduced_norm_zero"] = d.reduced_norm_zero;
        rec["elapsed_ms"] = d.elapsed_ms;
        sb.add(rec);
    }
    return sb.finish();
}

// ---------------------------------------------------------------------------
// phi-check (Prop 3.12) and the local sl2 action
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<std::string, JacobiDiagram>> phi_diagrams(const std::string& name) {
    std::vector<std::pair<std::string, JacobiDiagram>> out;
    auto tripod = build_diagram(6, {{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}}, {2, 4, 6});
    if (name == "w2" || name == "all") out.push_back({"w2", wheel(1)});
    if (name == "w4" || name == "all") out.push_back({"w4", wheel(2)});
    if (name == "theta-union-tests" || name == "all") {
        out.push_back({"theta-u-w2", disjoint_union(theta(), wheel(1))});
        out.push_back({"tripod", tripod});
        out.push_back({"theta-u-tripod", disjoint_union(theta(), tripod)});
    }
    if (out.empty()) throw RangeError("unknown diagram set: " + name);
    return out;
}

} // namespace

SuiteResult run_phi_check(const std::string& diagram, int max_n, int gens, int trials,
                          std::uint64_t seed) {
    SuiteBuilder sb("phi-check");
    sb.report["params"] = {{"diagram", diagram}, {"max_n", max_n}, {"gens", gens},
                           {"trials", trials}};
    sb.report["seed"] = seed;
    for (const auto& [label, d] : phi_diagrams(diagram)) {
        int use_gens = std::max(gens, d.trivalent_count() + 1);
        for (int n = 1; n <= max_n; ++n) {
            SymplecticSpace sp(n);
            Prop312Report rep = prop312_check(d, sp, use_gens, trials, seed);
            json rec = check_record(
                "prop312-" + label + "-n" + std::to_string(n),
                "Phi^{dGamma}(beta x id^{l-2}) = delta(Phi^Gamma(beta x id^l))",
                rep.pass(), rep.witness);
            rec["diagram"] = label;
            rec["n"] = n;
            rec["gens"] = use_gens;
            rec["trials"] = trials;
            sb.add(rec);
        }
    }
    return sb.finish();
}

SuiteResult run_sl2_check(int max_n, int gens, int trials, std::uint64_t seed) {
    SuiteBuilder sb("sl2-check");
    sb.report["params"] = {{"max_n", max_n}, {"gens", gens}, {"trials", trials}};
    sb.report["seed"] = seed;
    for (int n = 1; n <= max_n; ++n) {
        SymplecticSpace sp(n);
        Sl2Report rep = sl2_check(sp, gens, trials, seed);
        json rec = check_record(
            "local-sl2-n" + std::to_string(n),
            "[sigma, delta] = Pi, [Pi, sigma] = 2 sigma, [Pi, delta] = -2 delta",
            rep.pass(), rep.witness);
        rec["n"] = n;
        rec["trials"] = trials;
        sb.add(rec);
    }
    return sb.finish();
}

// ---------------------------------------------------------------------------
// lefschetz
// ---------------------------------------------------------------------------

SuiteResult run_lefschetz(int max_n, std::uint64_t seed, bool assume_p1_positive) {
    SuiteBuilder sb("lefschetz");
    sb.report["params"] = {{"max_n", max_n},
                           {"assume_p1_positive", assume_p1_positive}};
    sb.report["seed"] = seed;

    for (int n = 1; n <= max_n; ++n) {
        const std::string ns = "n" + std::to_string(n);

        for (const auto& c : sl2_consistency(n, 25, seed)) {
            json rec = check_record("sl2-" + ns + "-" + c.name, c.name, c.pass, c.detail);
            rec["n"] = n;
            sb.add(rec);
        }

        for (int k = 0; 2 * k <= n; ++k) {
            bool ok = primitivity_check(n, k);
            json rec = check_record(
                "primitive-" + ns + "-k" + std::to_string(k),
                "Lambda(tp_{2k}) = 0", ok,
                ok ? "" : Lambda(tp(n, k)).str());
            rec["n"] = n;
            rec["k"] = k;
            sb.add(rec);
        }

        for (int k = 0; k <= n; ++k) {
            bool ok = decompose_check(n, k);
            json rec = check_record(
                "decompose-" + ns + "-k" + std::to_string(k),
                2 * k <= n
                    ? "P-basis decomposition of td^{1/2}_{2k} re-expands to T(k,0,0)"
                    : "decomposition of td^{1/2}_{2k} agrees under Lambda^{2k-n}",
                ok, ok ? "" : expand_to_T(decompose_td(n, k)).str());
            rec["n"] = n;
            rec["k"] = k;
            sb.add(rec);
        }

        for (const auto& c : theorem51_check(n)) {
            json rec = check_record("thm51-" + ns + "-" + c.name, c.name, c.pass,
                                    c.pass ? "" : c.detail);
            rec["n"] = n;
            if (c.pass && !c.detail.empty()) rec["residual"] = c.detail;
            sb.add(rec);
        }
        if (!assume_p1_positive)
            sb.add(skipped_record(
                "thm51-" + ns + "-strictness",
                "strict inequality for m > 1 (needs tp_2 != 0)",
                "pass --assume-p1-positive to claim strictness"));
        else
            sb.add(check_record("thm51-" + ns + "-strictness",
                                "strict inequality for m > 1 under p_1 > 0", true));

        for (const auto& c : eq51_check(n)) {
            json rec = check_record("eq51-" + ns + "-" + c.name, c.name, c.pass, c.detail);
            rec["n"] = n;
            sb.add(rec);
        }

        for (int k = 0; 2 * k <= n; ++k) {
            bool ok = omega_primitive_check(n, k);
            json rec = check_record(
                "omega-primitive-" + ns + "-k" + std::to_string(k),
                "Lambda_omega annihilates the omega-primitive combination", ok);
            rec["n"] = n;
            rec["k"] = k;
            sb.add(rec);
        }
    }
    return sb.finish();
}

// ---------------------------------------------------------------------------
// todd
// ---------------------------------------------------------------------------

SuiteResult run_todd(int n) {
    SuiteBuilder sb("todd");
    sb.report["params"] = {{"n", n}};

    BernoulliTable b = modified_bernoulli(std::max(2, n));
    sb.add(check_record("b2", "b_2 = 1/48", b.value(1) == Rational(1, 48),
                        b.value(1).get_str()));
    sb.add(check_record("b4", "b_4 = -1/5760", b.value(2) == Rational(-1, 5760),
                        b.value(2).get_str()));

    WeightedPoly h = td_half(n);
    WeightedPoly c2 = WeightedPoly::variable(n, 1);
    WeightedPoly c4 = WeightedPoly::variable(n, 2);
    bool w1 = h.component(1) == Rational(1, 24) * c2;
    sb.add(check_record("td-half-2", "td^{1/2}_2 = c_2/24", w1, h.component(1).str()));
    if (n >= 2) {
        WeightedPoly expect =
            Rational(7, 5760) * (c2 * c2) - Rational(4, 5760) * c4;
        bool w2 = h.component(2) == expect;
        sb.add(check_record("td-half-4", "td^{1/2}_4 = (7 c_2^2 - 4 c_4)/5760", w2,
                            h.component(2).str()));
    }

    WeightedPoly t = td(n);
    sb.add(check_record("td-square", "(td^{1/2})^2 = td (both exponential routes)",
                        t == h * h));
    sb.add(check_record("td-classical",
                        "td = classical Todd class with odd Chern classes zero",
                        t == classical_todd(n)));

    RwClass mapped = rw_symbol_map(wheeling_element(n), n);
    RwClass expect_rw;
    expect_rw.add_part({0, 0, 0}, h);
    sb.add(check_record("rw-omega", "wheel-symbol map sends Omega to td^{1/2}",
                        mapped == expect_rw));

    RwClass lmap = rw_symbol_map(GraphVector::single(strut()), n);
    RwClass lexp;
    lexp.add_part({1, 0, 0}, WeightedPoly::constant(n, Rational(2)));
    sb.add(check_record("rw-strut", "strut maps to 2 sigma", lmap == lexp));

    RwClass tmap = rw_symbol_map(GraphVector::single(theta()), n);
    RwClass texp;
    texp.add_part({0, 1, -1}, WeightedPoly::constant(n, Rational(48)));
    sb.add(check_record("rw-theta", "Theta maps to (48/lambda) sigmabar", tmap == texp));

    json comps = json::array();
    for (int w = 0; w <= n; ++w)
        comps.push_back({{"weight", w}, {"td_half", h.component(w).str()},
                         {"td", t.component(w).str()}});
    sb.report["components"] = comps;
    return sb.finish();
}

// ---------------------------------------------------------------------------
// rr
// ---------------------------------------------------------------------------

namespace {

Rational family_td_half_closed(Family f, int n) {
    switch (f) {
        case Family::K3n:
            return rational_pow(Rational(n + 3), n) /
                   (rational_pow(Rational(4), n) * Rational(factorial(n)));
        case Family::Kummer:
            return rational_pow(Rational(n + 1), n + 1) /
                   (rational_pow(Rational(4), n) * Rational(factorial(n)));
        case Family::OG6: return Rational(2, 3);
        case Family::OG10: return Rational(4, 15);
    }
    return Rational(0);
}

std::vector<FamilySpec> family_specs(const std::string& family, int max_n) {
    std::vector<FamilySpec> specs;
    auto add_range = [&](Family f) {
        for (int n = 1; n <= max_n; ++n) specs.push_back({f, n});
    };
    if (family == "k3n" || family == "all") add_range(Family::K3n);
    if (family == "kummer" || family == "all") add_range(Family::Kummer);
    if ((family == "og6" || family == "all") && max_n >= 3)
        specs.push_back({Family::OG6, 3});
    if ((family == "og10" || family == "all") && max_n >= 5)
        specs.push_back({Family::OG10, 5});
    if (specs.empty()) throw InvalidFamilyDimension("no family selected: " + family);
    return specs;
}

json rr_row(const FamilySpec& spec) {
    RRPolynomial rr = rr_family(spec);
    RootsReport roots = roots_report(spec);
    json row;
    row["family"] = family_name(spec.family);
    row["n"] = spec.n;
    json coeffs = json::array();
    for (const auto& c : rr.coeffs) coeffs.push_back(c.get_str());
    row["coefficients"] = coeffs;
    row["chi_O"] = chi_O(rr).get_str();
    row["td_half_integral"] = td_half_integral(rr).get_str();
    json rts = json::array();
    for (const auto& r : roots.roots) rts.push_back(r.get_str());
    row["roots"] = rts;
    row["log_concave"] = log_concavity(rr);
    return row;
}

} // namespace

SuiteResult run_rr(const std::string& family, int max_n) {
    SuiteBuilder sb("rr");
    sb.report["params"] = {{"family", family}, {"max_n", max_n}};
    json rows = json::array();
    for (const auto& spec : family_specs(family, max_n)) {
        RRPolynomial rr = rr_family(spec);
        const std::string id = family_name(spec.family) + "-n" + std::to_string(spec.n);

        sb.add(check_record("coeffs-positive-" + id,
                            "all Riemann-Roch coefficients positive",
                            coefficients_positive(rr), rr.str()));
        sb.add(check_record("chi-" + id, "RR(0) = n + 1",
                            chi_O(rr) == Rational(spec.n + 1), chi_O(rr).get_str()));

        Rational v = td_half_integral(rr);
        Rational closed = family_td_half_closed(spec.family, spec.n);
        sb.add(check_record("td-half-integral-" + id,
                            "B^n/((2n)^n A^{n-1}) matches the family value",
                            v == closed, v.get_str() + " vs " + closed.get_str()));
        sb.add(check_record("fujiki-chain-" + id,
                            "the Fujiki-constant route gives the same integral",
                            td_half_integral_via_fujiki(rr, Rational(1)) == v &&
                                td_half_integral_via_fujiki(rr, Rational(7, 3)) == v));
        if (spec.n >= 2)
            sb.add(check_record("upper-bound-" + id, "int td^{1/2} < 1",
                                upper_bound_check(rr), v.get_str()));

        RootsReport roots = roots_report(spec);
        bool roots_ok = roots.negative_even_integers && roots.arithmetic_progression;
        json rec = check_record("roots-" + id,
                                "roots are negative even integers in arithmetic progression"
                                " (exploratory)",
                                roots_ok);
        rec["exploratory"] = true;
        sb.add(rec);

        json lc = check_record("log-concave-" + id,
                               "coefficient sequence is log concave (exploratory)",
                               log_concavity(rr));
        lc["exploratory"] = true;
        sb.add(lc);

        MonotonicityReport mono =
            monotonicity_and_nonvanishing(rr, {Rational(2), Rational(4), Rational(1, 2)});
        sb.add(check_record("monotone-" + id,
                            "derivative has positive coefficients; RR(q) > n+1 for q > 0",
                            mono.derivative_positive && mono.values_above_chi));

        rows.push_back(rr_row(spec));
    }
    sb.report["rows"] = rows;
    return sb.finish();
}

std::string rr_csv(const std::string& family, int max_n) {
    std::string out = "family,n,coefficients,chi_O,td_half_integral,roots,log_concave\n";
    for (const auto& spec : family_specs(family, max_n)) {
        RRPolynomial rr = rr_family(spec);
        RootsReport roots = roots_report(spec);
        out += family_name(spec.family) + "," + std::to_string(spec.n) + ",\"";
        for (std::size_t i = 0; i < rr.coeffs.size(); ++i) {
            if (i) out += " ";
            out += rr.coeffs[i].get_str();
        }
        out += "\"," + chi_O(rr).get_str() + "," + td_half_integral(rr).get_str() + ",\"";
        for (std::size_t i = 0; i < roots.roots.size(); ++i) {
            if (i) out += " ";
            out += roots.roots[i].get_str();
        }
        out += "\",";
        out += log_concavity(rr) ? "true" : "false";
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

SuiteResult run_identities(int max_n) {
    SuiteBuilder sb("identities");
    sb.report["params"] = {{"max_n", max_n}};

    long a1_count = 0;
    bool a1_ok = true;
    std::string a1_witness;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (int j = 0; j <= k; ++j) {
                ++a1_count;
                if (lemma_a1(n, k, j) != lemma_a1_closed(n, k, j)) {
                    a1_ok = false;
                    if (a1_witness.empty())
                        a1_witness = "(n,k,j)=(" + std::to_string(n) + "," +
                                     std::to_string(k) + "," + std::to_string(j) + ")";
                }
            }
    json a1 = check_record("lemma-a1",
                           "alternating factorial sum equals 0 (k > j) or 1 (k = j)",
                           a1_ok, a1_witness);
    a1["cases"] = a1_count;
    sb.add(a1);

    long a2_count = 0;
    bool a2_ok = true;
    std::string a2_witness;
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= n; ++m)
            for (int i = 0; 2 * i <= m; ++i) {
                ++a2_count;
                if (lemma_a2(n, m, i) != lemma_a2_closed(n, m, i)) {
                    a2_ok = false;
                    if (a2_witness.empty())
                        a2_witness = "(n,m,i)=(" + std::to_string(n) + "," +
                                     std::to_string(m) + "," + std::to_string(i) + ")";
                }
            }
    json a2 = check_record("lemma-a2",
                           "factorial sum equals (n-m)!^2 binom(2n-2i-m+1, m-2i)",
                           a2_ok, a2_witness);
    a2["cases"] = a2_count;
    sb.add(a2);
    return sb.finish();
}

// ---------------------------------------------------------------------------
// all
// ---------------------------------------------------------------------------

SuiteResult run_all(const SuiteDefaults& d) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["version"] = kToolVersion;
    report["seed"] = d.seed;
    bool pass = true;

    json suites;
    auto put = [&](const std::string& name, SuiteResult r) {
        suites[name] = r.report;
        pass = pass && r.pass;
    };
    put("identities", run_identities(d.identities_max_n));
    put("lefschetz", run_lefschetz(d.lefschetz_max_n, d.seed, d.assume_p1_positive));
    put("phi-check", run_phi_check("all", d.phi_max_n, 0, d.phi_trials, d.seed));
    put("rr", run_rr("all", d.rr_max_n));
    put("sl2-check", run_sl2_check(d.phi_max_n, 3, d.sl2_trials, d.seed));
    put("todd", run_todd(d.todd_n));
    put("wheeling", run_wheeling(d.wheeling_max_degree));

    report["suites"] = suites;
    report["elapsed_ms"] = ms_since(t0);
    report["pass"] = pass;
    return {report, pass};
}

} // namespace hk
