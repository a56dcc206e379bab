#include "hk/rr_poly.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

std::string family_name(Family f) {
    switch (f) {
        case Family::K3n: return "k3n";
        case Family::Kummer: return "kummer";
        case Family::OG6: return "og6";
        case Family::OG10: return "og10";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "k3n" || s == "K3n") return Family::K3n;
    if (s == "kummer" || s == "Kummer") return Family::Kummer;
    if (s == "og6" || s == "OG6") return Family::OG6;
    if (s == "og10" || s == "OG10") return Family::OG10;
    throw InvalidFamilyDimension("unknown family: " + s);
}

Rational RRPolynomial::eval(const Rational& q) const {
    Rational r(0);
    for (int i = degree(); i >= 0; --i) r = r * q + coeffs[i];
    return r;
}

std::string RRPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs[i] == 0 && degree() > 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].get_str() << ")";
        if (i > 0) os << "*q";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct FamilyShape {
    int n;
    Rational scale;            // leading multiplier
    std::vector<Rational> sh;  // factors (q/2 + sh_j)
};

FamilyShape family_shape(const FamilySpec& spec) {
    if (spec.n < 1) throw InvalidFamilyDimension("n must be >= 1");
    switch (spec.family) {
        case Family::OG6:
            if (spec.n != 3) throw InvalidFamilyDimension("OG6 has n = 3");
            break;
        case Family::OG10:
            if (spec.n != 5) throw InvalidFamilyDimension("OG10 has n = 5");
            break;
        default: break;
    }
    FamilyShape s;
    s.n = spec.n;
    const bool k3_type = spec.family == Family::K3n || spec.family == Family::OG10;
    s.scale = Rational(k3_type ? 1 : spec.n + 1) / Rational(factorial(spec.n));
    for (int j = 0; j < spec.n; ++j)
        s.sh.push_back(Rational(k3_type ? spec.n + 1 - j : spec.n - j));
    return s;
}

} // namespace

RRPolynomial rr_family(const FamilySpec& spec) {
    FamilyShape s = family_shape(spec);
    std::vector<Rational> poly = {s.scale};
    for (const Rational& sh : s.sh) {
        // multiply by (q/2 + sh)
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * sh;
            next[i + 1] += poly[i] / 2;
        }
        poly = std::move(next);
    }
    RRPolynomial rr;
    rr.n = spec.n;
    rr.coeffs = std::move(poly);
    return rr;
}

bool coefficients_positive(const RRPolynomial& rr) {
    for (const auto& c : rr.coeffs)
        if (c <= 0) return false;
    return true;
}

RootsReport roots_report(const FamilySpec& spec) {
    FamilyShape s = family_shape(spec);
    RootsReport rep;
    for (const Rational& sh : s.sh) rep.roots.push_back(Rational(-2) * sh);
    std::sort(rep.roots.begin(), rep.roots.end());

    rep.negative_even_integers = true;
    for (const auto& r : rep.roots) {
        if (r >= 0 || r.get_den() != 1 || mpz_odd_p(r.get_num().get_mpz_t()))
            rep.negative_even_integers = false;
    }
    rep.arithmetic_progression = true;
    if (rep.roots.size() >= 2) {
        rep.common_difference = rep.roots[1] - rep.roots[0];
        for (std::size_t i = 2; i < rep.roots.size(); ++i)
            if (rep.roots[i] - rep.roots[i - 1] != rep.common_difference)
                rep.arithmetic_progression = false;
    }
    return rep;
}

bool log_concavity(const RRPolynomial& rr) {
    for (int i = 1; i < rr.degree(); ++i)
        if (rr.coeffs[i] * rr.coeffs[i] < rr.coeffs[i - 1] * rr.coeffs[i + 1]) return false;
    return true;
}

Rational chi_O(const RRPolynomial& rr) { return rr.eval(Rational(0)); }

Rational td_half_integral(const RRPolynomial& rr) {
    const int n = rr.n;
    if (rr.degree() != n)
        throw DegreeMismatch("polynomial degree does not equal the ambient n");
    const Rational A = rr.coeff(n);
    const Rational B = rr.coeff(n - 1);
    if (A <= 0) throw DegreeMismatch("leading coefficient must be positive");
    Rational bn = rational_pow(B, n);
    Rational denom = rational_pow(Rational(2 * n), n) * rational_pow(A, n - 1);
    return bn / denom;
}

bool upper_bound_check(const RRPolynomial& rr) { return td_half_integral(rr) < 1; }

MonotonicityReport monotonicity_and_nonvanishing(const RRPolynomial& rr,
                                                 const std::vector<Rational>& q_samples) {
    MonotonicityReport rep;
    rep.derivative_positive = true;
    for (int i = 1; i <= rr.degree(); ++i)
        if (Rational(i) * rr.coeffs[i] <= 0) rep.derivative_positive = false;
    rep.values_above_chi = true;
    const Rational chi = Rational(rr.n + 1);
    for (const auto& q : q_samples) {
        Rational v = rr.eval(q);
        rep.samples.push_back({q, v});
        if (!(q > 0) || !(v > chi)) rep.values_above_chi = false;
    }
    return rep;
}

Rational td_half_integral_via_fujiki(const RRPolynomial& rr, const Rational& q_value) {
    const int n = rr.n;
    if (rr.degree() != n) throw DegreeMismatch("polynomial degree does not equal n");
    if (!(q_value > 0)) throw RangeError("q must be positive");
    const Rational A = rr.coeff(n);
    const Rational B = rr.coeff(n - 1);
    Rational c_X = Rational(factorial(2 * n)) * A;
    Rational lambda = Rational(2 * n) * A / B * q_value;
    // int (sigma sigmabar)^n = (n!)^2/(2n)! * c_X * q^n
    Rational ss = Rational(factorial(n) * factorial(n)) / Rational(factorial(2 * n)) * c_X *
                  rational_pow(q_value, n);
    // int td^{1/2} = ss / (lambda^n (n!)^2)
    return ss / (rational_pow(lambda, n) * Rational(factorial(n) * factorial(n)));
}

} // namespace hk
