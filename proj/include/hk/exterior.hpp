#ifndef HK_EXTERIOR_HPP
#define HK_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hk/errors.hpp"
#include "hk/rational.hpp"
#include "hk/rng.hpp"

namespace hk {

// Symplectic vector space of dimension 2n with the standard basis e_1..e_2n
// and sigma = sum theta^{2i-1} ^ theta^{2i}.
struct SymplecticSpace {
    int n = 1;
    explicit SymplecticSpace(int half_dim) : n(half_dim) {
        if (n < 1) throw RangeError("half-dimension must be >= 1");
    }
    int dim() const { return 2 * n; }

    // sigma(u, v) for exact rational coordinate vectors (size 2n).
    Rational sigma(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

    // sigma(e_i, e_j) on basis vectors (1-based).
    int sigma_basis(int i, int j) const;
};

// Element of Lambda V* tensor Lambda(a_1..a_g): a map from (dual-index set,
// auxiliary-index set) to exact rationals. Both factors are realized as
// exterior algebras, so the auxiliary generators are odd and products of
// distinct generators stay nonzero up to degree g.
class ExteriorElement {
  public:
    struct Mono {
        std::uint64_t form = 0; // bit i-1 set: theta^i present
        std::uint64_t aux = 0;  // bit j-1 set: a_j present
        auto operator<=>(const Mono&) const = default;
    };

    ExteriorElement() = default;
    static ExteriorElement scalar(const Rational& c);
    static ExteriorElement theta(int i);           // theta^i
    static ExteriorElement aux_generator(int j);   // a_j
    static ExteriorElement sigma_form(const SymplecticSpace& sp);
    // The 1-form sigma(w, .) = sum_m sigma(w, e_m) theta^m.
    static ExteriorElement flat(const SymplecticSpace& sp, const std::vector<Rational>& w);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    void add_term(const Mono& m, const Rational& c);

    ExteriorElement& operator+=(const ExteriorElement& o);
    ExteriorElement& operator-=(const ExteriorElement& o);
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    friend ExteriorElement operator*(const Rational& s, const ExteriorElement& a);
    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.terms_ == b.terms_;
    }

    // Graded product: (x tensor a)(y tensor b) = (-1)^{|a||y|} (x^y) tensor (ab).
    ExteriorElement wedge(const ExteriorElement& o) const;

    std::string str() const;

  private:
    std::map<Mono, Rational> terms_;
};

// Contraction by sigma: lowers form degree by 2.
ExteriorElement contract_delta(const ExteriorElement& x, const SymplecticSpace& sp);

// Wedge by sigma.
ExteriorElement sigma_wedge(const ExteriorElement& x, const SymplecticSpace& sp);

// Multiplies the form-degree-p component by (p - n).
ExteriorElement pi_operator(const ExteriorElement& x, const SymplecticSpace& sp);

// Random homogeneous element with small rational coefficients.
ExteriorElement random_homogeneous(const SymplecticSpace& sp, int aux_gens, Rng& rng);

struct Sl2Report {
    int n = 0;
    int gens = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int failures = 0;
    std::string witness; // first failing element, if any
    bool pass() const { return failures == 0; }
};

// Checks [sigma, delta] = Pi, [Pi, sigma] = 2 sigma, [Pi, delta] = -2 delta
// exactly on random homogeneous elements.
Sl2Report sl2_check(const SymplecticSpace& sp, int aux_gens, int trials, std::uint64_t seed);

} // namespace hk

#endif
