#ifndef HK_LEFSCHETZ_HPP
#define HK_LEFSCHETZ_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hk/errors.hpp"
#include "hk/laurent.hpp"

namespace hk {

// Free module over Laurent polynomials in lambda on the basis symbols
// T(i,a,b) = td^{1/2}_{2i} sigma^a sigmabar^b, 0 <= i <= n. No vanishing is
// imposed for large (a,b); integrals are only taken through the pairing.
class FormalClass {
  public:
    using Key = std::array<int, 3>; // (i, a, b)

    explicit FormalClass(int n) : n_(n) {
        if (n < 1) throw RangeError("ambient n must be >= 1");
    }
    static FormalClass basis(int n, int i, int a, int b,
                             const Laurent& c = Laurent(Rational(1)));

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Laurent>& terms() const { return terms_; }
    void add_term(const Key& k, const Laurent& c);

    FormalClass& operator+=(const FormalClass& o);
    FormalClass& operator-=(const FormalClass& o);
    friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
    friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
    friend FormalClass operator*(const Laurent& s, const FormalClass& x);
    friend bool operator==(const FormalClass& a, const FormalClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    int n_;
    std::map<Key, Laurent> terms_;
};

// T(i,a,b) -> T(i,a+1,b)
FormalClass L_sigma(const FormalClass& x);
// T(i,a,b) -> T(i,a,b+1)
FormalClass L_sigmabar(const FormalClass& x);
// Lambda_{sigma/4}: T(i,a,b) -> (1/lambda) T(i-1,a,b+1) - a(2i-n+a-1) T(i,a-1,b)
FormalClass Lambda(const FormalClass& x);
// Scales T(i,a,b) by its holomorphic degree shift 2i+2a-n.
FormalClass Pi_op(const FormalClass& x);

// Same shape over the basis P(i,a,b) = tp_{2i} sigma^a sigmabar^b,
// 0 <= i <= n/2.
class PBasisClass {
  public:
    using Key = std::array<int, 3>;

    explicit PBasisClass(int n) : n_(n) {
        if (n < 1) throw RangeError("ambient n must be >= 1");
    }
    static PBasisClass basis(int n, int i, int a, int b,
                             const Laurent& c = Laurent(Rational(1)));
    static PBasisClass unit(int n) { return basis(n, 0, 0, 0); }

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Laurent>& terms() const { return terms_; }
    void add_term(const Key& k, const Laurent& c);

    PBasisClass& operator+=(const PBasisClass& o);
    friend PBasisClass operator*(const Laurent& s, const PBasisClass& x);
    friend bool operator==(const PBasisClass& a, const PBasisClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    std::map<Key, Laurent> terms_;
};

// Linear form in the free nonnegative parameters p_i = int (tp_{2i})^2
// (sigma sigmabar)^{n-2i}, i = 0..floor(n/2).
class PairingForm {
  public:
    explicit PairingForm(int n)
        : n_(n), coeffs_(static_cast<std::size_t>(n / 2 + 1)) {}

    int ambient() const { return n_; }
    const Laurent& coeff(int i) const { return coeffs_.at(i); }
    void add(int i, const Laurent& c) { coeffs_.at(i) += c; }
    int size() const { return static_cast<int>(coeffs_.size()); }

    PairingForm& operator+=(const PairingForm& o);
    PairingForm& operator-=(const PairingForm& o);
    friend PairingForm operator*(const Laurent& s, PairingForm f);
    friend bool operator==(const PairingForm& a, const PairingForm& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    bool is_zero() const;
    std::string str() const;

  private:
    int n_;
    std::vector<Laurent> coeffs_;
};

// tp_{2k} in the T-basis: sum_i (n-2k+1)! /
// ((-lambda)^{k-i} (k-i)! (n-k-i+1)!) T(i, k-i, k-i). Requires 2k <= n.
FormalClass tp(int n, int k);

// Lambda(tp_{2k}) = 0 in the free model.
bool primitivity_check(int n, int k);

// td^{1/2}_{2k} in the P-basis: sum_{i<=min(k,n-k)} (n-k-i)! /
// (lambda^{k-i} (k-i)! (n-2i)!) P(i, k-i, k-i).
PBasisClass decompose_td(int n, int k);

// Re-expands a P-basis class through tp's definition into the T-basis.
FormalClass expand_to_T(const PBasisClass& x);

FormalClass Lambda_power(const FormalClass& x, int m);

// Verifies the decomposition of td^{1/2}_{2k}. For 2k <= n the re-expansion
// equals T(k,0,0) identically (this is the alternating-sum identity behind
// the decomposition theorem). For 2k > n the identity lives in cohomology,
// where Lambda^{2k-n} is injective on the relevant degree; the free model
// checks the equality of the Lambda^{2k-n}-images, which is the content of
// the theorem's proof and reduces through the commutator rule.
bool decompose_check(int n, int k);

// Pairing int x y (sigma sigmabar)^extra: P(i,a,b) P(j,c,d) contributes
// p_i exactly when i = j, a+c+extra = n-2i and b+d+extra = n-2i.
PairingForm pairing(const PBasisClass& x, const PBasisClass& y, int extra);

// int td_{2m} (sigma sigmabar)^{n-m} expanded through decompose_td and the
// pairing. Requires 0 <= m <= n.
PairingForm td_integral_form(int n, int m);

// The closed form of the same integral:
// sum_i (n-m)!^2 / (lambda^{m-2i} (n-2i)!^2) C(2n-2i-m+1, m-2i) p_i.
PairingForm td_integral_closed_form(int n, int m);

struct CheckOutcome {
    std::string name;
    bool pass = true;
    std::string detail;
};

// [L, Lambda] = Pi, [Pi, L] = 2L, [Pi, Lambda] = -2 Lambda on random classes.
std::vector<CheckOutcome> sl2_consistency(int n, int samples, std::uint64_t seed);

// Per-m outcome rows for the Theorem 5.1 expansion: closed form agreement,
// positive p_i coefficients, residual p_0-part zero, residual p_{>=1}-parts
// positive (identically zero residual for m in {0,1}).
std::vector<CheckOutcome> theorem51_check(int n);

// int td^{1/2}_{2k} (sigma sigmabar)^{n-k} = ((n-k)!/(lambda^k k! n!)) p_0
// for all k, plus the binomial resummation to (1+lambda)^n int td^{1/2}.
std::vector<CheckOutcome> eq51_check(int n);

// ---------------------------------------------------------------------------
// The omega-model: basis U(i,a) = td^{1/2}_{2i} omega^a on a compact Kaehler
// manifold of complex dimension 2n, with Lambda_omega U(i,0) =
// (1/lambda_omega) U(i-1,1) and the Kaehler commutation rule.
// ---------------------------------------------------------------------------

class OmegaClass {
  public:
    using Key = std::array<int, 2>; // (i, a)

    explicit OmegaClass(int n) : n_(n) {
        if (n < 1) throw RangeError("ambient n must be >= 1");
    }
    static OmegaClass basis(int n, int i, int a, const Laurent& c = Laurent(Rational(1)));

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Laurent>& terms() const { return terms_; }
    void add_term(const Key& k, const Laurent& c);

    OmegaClass& operator+=(const OmegaClass& o);
    friend bool operator==(const OmegaClass& a, const OmegaClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    std::map<Key, Laurent> terms_;
};

// Lambda_omega U(i,a) = (1/lambda) U(i-1,a+1) - a(4i - 2n + a - 1) U(i,a-1).
OmegaClass Lambda_omega(const OmegaClass& x);

// The omega-primitive combination
// sum_i (2n-4k+2)!(n-k-i+1)! U(i, 2k-2i) /
//       ((-lambda)^{k-i} (k-i)! (n-2k+1)! (2n-2k-2i+2)!).
OmegaClass omega_primitive_combination(int n, int k);

// Lambda_omega of the combination vanishes. Requires 2k <= n.
bool omega_primitive_check(int n, int k);

} // namespace hk

#endif
