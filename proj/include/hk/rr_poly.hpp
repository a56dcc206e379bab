#ifndef HK_RR_POLY_HPP
#define HK_RR_POLY_HPP

#include <string>
#include <vector>

#include "hk/errors.hpp"
#include "hk/rational.hpp"

namespace hk {

enum class Family { K3n, Kummer, OG6, OG10 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct FamilySpec {
    Family family = Family::K3n;
    int n = 1;
};

// Univariate polynomial in q over exact rationals; coeffs[i] multiplies q^i.
struct RRPolynomial {
    std::vector<Rational> coeffs;
    int n = 0; // ambient half-dimension

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i <= degree()) ? coeffs[i] : Rational(0);
    }
    Rational eval(const Rational& q) const;
    std::string str() const;
};

// Expansion of binom(q/2+n+1, n) (K3n/OG10) or (n+1) binom(q/2+n, n)
// (Kummer/OG6) by exact product of linear factors. OG6 forces n = 3 and
// OG10 forces n = 5; throws InvalidFamilyDimension otherwise.
RRPolynomial rr_family(const FamilySpec& spec);

bool coefficients_positive(const RRPolynomial& rr);

struct RootsReport {
    std::vector<Rational> roots;  // ascending
    bool negative_even_integers = false;
    bool arithmetic_progression = false;
    Rational common_difference;
};

// Roots of a family polynomial, exact by construction.
RootsReport roots_report(const FamilySpec& spec);

// a_i^2 >= a_{i-1} a_{i+1} for all interior i.
bool log_concavity(const RRPolynomial& rr);

// RR(0); equals chi(O_X) = n+1 on family polynomials.
Rational chi_O(const RRPolynomial& rr);

// B^n / ((2n)^n A^{n-1}) from the two leading coefficients A, B.
Rational td_half_integral(const RRPolynomial& rr);

// td_half_integral < 1; meaningful for n >= 2.
bool upper_bound_check(const RRPolynomial& rr);

struct MonotonicityReport {
    bool derivative_positive = false;
    bool values_above_chi = false; // RR(q) > n+1 at every supplied q > 0
    std::vector<std::pair<Rational, Rational>> samples;
};

MonotonicityReport monotonicity_and_nonvanishing(const RRPolynomial& rr,
                                                 const std::vector<Rational>& q_samples);

// Recomputes int td^{1/2} through the proof chain of the B^n/(2n)^n A^{n-1}
// lemma: c_X = (2n)! A, lambda = (2nA/B) q, int (ss)^n = (n!)^2/(2n)! c_X q^n.
// The formal q cancels; any positive value gives the same result.
Rational td_half_integral_via_fujiki(const RRPolynomial& rr, const Rational& q_value);

} // namespace hk

#endif
