#ifndef HK_CHAR_CLASSES_HPP
#define HK_CHAR_CLASSES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hk/errors.hpp"
#include "hk/graph_vector.hpp"
#include "hk/rational.hpp"

namespace hk {

// Polynomial in the weighted variables x_1, ..., x_n where x_w stands for
// c_{2w} (or ch_{2w}) and carries weight w. Monomials above the truncation
// weight n are dropped eagerly, mirroring cohomological vanishing on a
// 2n-fold.
class WeightedPoly {
  public:
    using Monomial = std::vector<int>; // exponent of x_w at index w-1

    explicit WeightedPoly(int weight_cap = 0) : cap_(weight_cap) {}
    static WeightedPoly constant(int cap, const Rational& c);
    static WeightedPoly variable(int cap, int w); // x_w, weight w

    int weight_cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    static int monomial_weight(const Monomial& m);

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    WeightedPoly& operator+=(const WeightedPoly& o);
    WeightedPoly& operator-=(const WeightedPoly& o);
    friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
    friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }
    friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
    friend WeightedPoly operator*(const Rational& s, const WeightedPoly& a);
    friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    // exp of a polynomial with zero constant term.
    WeightedPoly exp() const;

    // Homogeneous part of the given weight.
    WeightedPoly component(int weight) const;

    // Substitute x_w -> values[w] (1-based), re-truncating.
    WeightedPoly substitute(const std::vector<WeightedPoly>& values) const;

    std::string str(const std::string& varname = "c") const;

  private:
    int cap_;
    std::map<Monomial, Rational> terms_;
};

// Modified Bernoulli numbers b_{2k}: coefficients of (1/2) ln(sinh(x/2)/(x/2)).
class BernoulliTable {
  public:
    explicit BernoulliTable(std::vector<Rational> b) : b_(std::move(b)) {}
    Rational value(int k) const; // b_{2k}, 1 <= k <= order
    int order() const { return static_cast<int>(b_.size()); }

  private:
    std::vector<Rational> b_; // index k-1 -> b_{2k}
};

BernoulliTable modified_bernoulli(int k_max);

// ch_{2w} as polynomials in c_2,...,c_{2n} (all odd Chern classes zero);
// index w in 1..n. Entry 0 is unused.
std::vector<WeightedPoly> ch_from_c(int n);

// c_{2w} as polynomials in ch_2,...,ch_{2n}; inverse of ch_from_c.
std::vector<WeightedPoly> c_from_ch(int n);

// td^{1/2} = exp(-sum b_{2k} (2k)! ch_{2k}) through weight n, in c-variables.
WeightedPoly td_half(int n);

// td = exp(-2 sum ...) through weight n; asserts it equals td_half(n)^2.
WeightedPoly td(int n);

// Classical Todd class from the generating function x/(1-e^{-x}),
// specialized to vanishing odd Chern classes. Independent pipeline from the
// Bernoulli-exponential route; the two must agree.
WeightedPoly classical_todd(int n);

// Value of the multiplicative wheel-symbol map: a polynomial in c-variables
// together with commuting formal powers of sigma, sigmabar and a Laurent
// power of lambda.
struct RwClass {
    // key = (sigma power, sigmabar power, lambda exponent)
    std::map<std::array<int, 3>, WeightedPoly> parts;

    bool is_zero() const { return parts.empty(); }
    void add_part(const std::array<int, 3>& k, const WeightedPoly& p);
    friend bool operator==(const RwClass& a, const RwClass& b) { return a.parts == b.parts; }
};

// Multiplicative extension of ell -> 2 sigma, Theta -> (48/lambda) sigmabar,
// w_{2k} -> -(2k)! ch_{2k}. Defined on disjoint unions of these generators;
// throws UnsupportedDiagram otherwise.
RwClass rw_symbol_map(const GraphVector& g, int n);

} // namespace hk

#endif
