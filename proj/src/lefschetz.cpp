#include "hk/lefschetz.hpp"

#include <sstream>

#include "hk/rational.hpp"
#include "hk/rng.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// FormalClass
// ---------------------------------------------------------------------------

FormalClass FormalClass::basis(int n, int i, int a, int b, const Laurent& c) {
    FormalClass x(n);
    if (i < 0 || i > n || a < 0 || b < 0)
        throw RangeError("basis symbol out of range");
    x.add_term({i, a, b}, c);
    return x;
}

void FormalClass::add_term(const Key& k, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalClass& FormalClass::operator+=(const FormalClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, Laurent(Rational(-1)) * c);
    return *this;
}

FormalClass operator*(const Laurent& s, const FormalClass& x) {
    FormalClass r(x.n_);
    for (const auto& [k, c] : x.terms_) r.add_term(k, s * c);
    return r;
}

std::string FormalClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T(" << k[0] << "," << k[1] << "," << k[2] << ")";
    }
    return os.str();
}

FormalClass L_sigma(const FormalClass& x) {
    FormalClass r(x.ambient());
    for (const auto& [k, c] : x.terms()) r.add_term({k[0], k[1] + 1, k[2]}, c);
    return r;
}

FormalClass L_sigmabar(const FormalClass& x) {
    FormalClass r(x.ambient());
    for (const auto& [k, c] : x.terms()) r.add_term({k[0], k[1], k[2] + 1}, c);
    return r;
}

FormalClass Lambda(const FormalClass& x) {
    const int n = x.ambient();
    FormalClass r(n);
    for (const auto& [k, c] : x.terms()) {
        const int i = k[0], a = k[1], b = k[2];
        if (i >= 1)
            r.add_term({i - 1, a, b + 1}, Laurent(Rational(1), -1) * c);
        if (a >= 1) {
            Rational f = Rational(-(a)) * Rational(2 * i - n + a - 1);
            if (f != 0) r.add_term({i, a - 1, b}, Laurent(f) * c);
        }
    }
    return r;
}

FormalClass Pi_op(const FormalClass& x) {
    const int n = x.ambient();
    FormalClass r(n);
    for (const auto& [k, c] : x.terms()) {
        Rational f(2 * k[0] + 2 * k[1] - n);
        if (f != 0) r.add_term(k, Laurent(f) * c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// PBasisClass / PairingForm
// ---------------------------------------------------------------------------

PBasisClass PBasisClass::basis(int n, int i, int a, int b, const Laurent& c) {
    PBasisClass x(n);
    if (i < 0 || 2 * i > n || a < 0 || b < 0)
        throw RangeError("P-basis symbol out of range");
    x.add_term({i, a, b}, c);
    return x;
}

void PBasisClass::add_term(const Key& k, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBasisClass& PBasisClass::operator+=(const PBasisClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PBasisClass operator*(const Laurent& s, const PBasisClass& x) {
    PBasisClass r(x.n_);
    for (const auto& [k, c] : x.terms_) r.add_term(k, s * c);
    return r;
}

PairingForm& PairingForm::operator+=(const PairingForm& o) {
    for (int i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

PairingForm& PairingForm::operator-=(const PairingForm& o) {
    for (int i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

PairingForm operator*(const Laurent& s, PairingForm f) {
    for (auto& c : f.coeffs_) c = s * c;
    return f;
}

bool PairingForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::string PairingForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].str() << ")*p" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// tp, decomposition, pairing
// ---------------------------------------------------------------------------

FormalClass tp(int n, int k) {
    if (k < 0 || 2 * k > n) throw RangeError("tp requires 0 <= 2k <= n");
    FormalClass x(n);
    const Integer top = factorial(n - 2 * k + 1);
    for (int i = 0; i <= k; ++i) {
        Rational c = Rational(top) / Rational(factorial(k - i) * factorial(n - k - i + 1));
        if ((k - i) % 2 == 1) c = -c;
        x.add_term({i, k - i, k - i}, Laurent(c, -(k - i)));
    }
    return x;
}

bool primitivity_check(int n, int k) { return Lambda(tp(n, k)).is_zero(); }

PBasisClass decompose_td(int n, int k) {
    if (k < 0 || k > n) throw RangeError("decompose_td requires 0 <= k <= n");
    PBasisClass x(n);
    const int imax = std::min(k, n - k);
    for (int i = 0; i <= imax; ++i) {
        Rational c = Rational(factorial(n - k - i)) /
                     Rational(factorial(k - i) * factorial(n - 2 * i));
        x.add_term({i, k - i, k - i}, Laurent(c, -(k - i)));
    }
    return x;
}

FormalClass expand_to_T(const PBasisClass& x) {
    const int n = x.ambient();
    FormalClass r(n);
    for (const auto& [k, c] : x.terms()) {
        FormalClass base = tp(n, k[0]);
        for (const auto& [tk, tc] : base.terms())
            r.add_term({tk[0], tk[1] + k[1], tk[2] + k[2]}, c * tc);
    }
    return r;
}

FormalClass Lambda_power(const FormalClass& x, int m) {
    FormalClass r = x;
    for (int i = 0; i < m; ++i) r = Lambda(r);
    return r;
}

bool decompose_check(int n, int k) {
    FormalClass expanded = expand_to_T(decompose_td(n, k));
    if (2 * k <= n) return expanded == FormalClass::basis(n, k, 0, 0);
    const int m = 2 * k - n;
    return Lambda_power(expanded, m) ==
           Lambda_power(FormalClass::basis(n, k, 0, 0), m);
}

PairingForm pairing(const PBasisClass& x, const PBasisClass& y, int extra) {
    if (x.ambient() != y.ambient()) throw RangeError("pairing requires equal ambient n");
    if (extra < 0) throw RangeError("extra power must be nonnegative");
    const int n = x.ambient();
    PairingForm f(n);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            if (kx[0] != ky[0]) continue;
            const int i = kx[0];
            if (kx[1] + ky[1] + extra != n - 2 * i) continue;
            if (kx[2] + ky[2] + extra != n - 2 * i) continue;
            f.add(i, cx * cy);
        }
    return f;
}

PairingForm td_integral_form(int n, int m) {
    if (m < 0 || m > n) throw RangeError("td_integral_form requires 0 <= m <= n");
    PairingForm f(n);
    for (int k = 0; k <= m; ++k)
        f += pairing(decompose_td(n, k), decompose_td(n, m - k), n - m);
    return f;
}

PairingForm td_integral_closed_form(int n, int m) {
    if (m < 0 || m > n) throw RangeError("bad (n, m)");
    PairingForm f(n);
    const Integer nm = factorial(n - m);
    for (int i = 0; 2 * i <= m; ++i) {
        Rational c = Rational(nm * nm * binomial(2 * n - 2 * i - m + 1, m - 2 * i)) /
                     Rational(factorial(n - 2 * i) * factorial(n - 2 * i));
        f.add(i, Laurent(c, -(m - 2 * i)));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Randomized sl2 consistency
// ---------------------------------------------------------------------------

namespace {

FormalClass random_formal(int n, Rng& rng) {
    FormalClass x(n);
    const int terms = static_cast<int>(rng.uniform(1, 4));
    for (int t = 0; t < terms; ++t) {
        int i = static_cast<int>(rng.uniform(0, n));
        int a = static_cast<int>(rng.uniform(0, n + 1));
        int b = static_cast<int>(rng.uniform(0, n + 1));
        Rational c(rng.nonzero(3), rng.uniform(1, 3));
        c.canonicalize();
        x.add_term({i, a, b}, Laurent(c, static_cast<int>(rng.uniform(-1, 1))));
    }
    return x;
}

} // namespace

std::vector<CheckOutcome> sl2_consistency(int n, int samples, std::uint64_t seed) {
    std::vector<CheckOutcome> out;
    CheckOutcome bracket{"[L_sigma, Lambda] = Pi", true, ""};
    CheckOutcome comm1{"[Pi, L_sigma] = 2 L_sigma", true, ""};
    CheckOutcome comm2{"[Pi, Lambda] = -2 Lambda", true, ""};
    CheckOutcome comm3{"Lambda L_sigmabar = L_sigmabar Lambda", true, ""};
    for (int t = 0; t < samples; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        FormalClass x = random_formal(n, rng);
        FormalClass lhs1 = L_sigma(Lambda(x));
        lhs1 -= Lambda(L_sigma(x));
        if (!(lhs1 == Pi_op(x))) {
            bracket.pass = false;
            if (bracket.detail.empty()) bracket.detail = x.str();
        }
        FormalClass lhs2 = Pi_op(L_sigma(x));
        lhs2 -= L_sigma(Pi_op(x));
        if (!(lhs2 == Laurent(Rational(2)) * L_sigma(x))) {
            comm1.pass = false;
            if (comm1.detail.empty()) comm1.detail = x.str();
        }
        FormalClass lhs3 = Pi_op(Lambda(x));
        lhs3 -= Lambda(Pi_op(x));
        if (!(lhs3 == Laurent(Rational(-2)) * Lambda(x))) {
            comm2.pass = false;
            if (comm2.detail.empty()) comm2.detail = x.str();
        }
        if (!(Lambda(L_sigmabar(x)) == L_sigmabar(Lambda(x)))) {
            comm3.pass = false;
            if (comm3.detail.empty()) comm3.detail = x.str();
        }
    }
    out.push_back(bracket);
    out.push_back(comm1);
    out.push_back(comm2);
    out.push_back(comm3);
    return out;
}

// ---------------------------------------------------------------------------
// Theorem 5.1 and Eq. (5.1)
// ---------------------------------------------------------------------------

std::vector<CheckOutcome> theorem51_check(int n) {
    std::vector<CheckOutcome> out;
    for (int m = 0; m <= n; ++m) {
        PairingForm form = td_integral_form(n, m);
        PairingForm closed = td_integral_closed_form(n, m);
        CheckOutcome agree{"td_integral m=" + std::to_string(m) + " closed form", true, ""};
        if (!(form == closed)) {
            agree.pass = false;
            agree.detail = "expansion " + form.str() + " vs closed " + closed.str();
        }
        out.push_back(agree);

        CheckOutcome positive{"td_integral m=" + std::to_string(m) + " positive", true, ""};
        for (int i = 0; 2 * i <= std::min(m, n); ++i) {
            if (!form.coeff(i).is_positive_monomial()) {
                positive.pass = false;
                positive.detail = form.str();
                break;
            }
        }
        out.push_back(positive);

        // Normalize to int td_{2m} exp(sigma+sigmabar) and subtract the bound
        // binom(2n-m+1, m) lambda^{n-m} * p_0/(lambda^n n!^2).
        Rational inv_nm = Rational(1) / Rational(factorial(n - m) * factorial(n - m));
        PairingForm residual = Laurent(inv_nm) * form;
        Rational bound = Rational(binomial(2 * n - m + 1, m)) /
                         Rational(factorial(n) * factorial(n));
        residual.add(0, Laurent(-bound, -m));

        CheckOutcome res{"theorem51 residual m=" + std::to_string(m), true, ""};
        if (!residual.coeff(0).is_zero()) {
            res.pass = false;
            res.detail = "p0 part nonzero: " + residual.str();
        } else if (m <= 1) {
            if (!residual.is_zero()) {
                res.pass = false;
                res.detail = "expected identically zero residual: " + residual.str();
            }
        } else {
            for (int i = 1; 2 * i <= m; ++i)
                if (!residual.coeff(i).is_positive_monomial()) {
                    res.pass = false;
                    res.detail = "p" + std::to_string(i) +
                                 " part not positive: " + residual.str();
                    break;
                }
        }
        res.detail = res.pass ? residual.str() : res.detail;
        out.push_back(res);
    }
    return out;
}

std::vector<CheckOutcome> eq51_check(int n) {
    std::vector<CheckOutcome> out;
    Laurent lhs_sum, rhs_sum;
    bool all_match = true;
    std::string witness;
    for (int k = 0; k <= n; ++k) {
        PairingForm f = pairing(decompose_td(n, k), PBasisClass::unit(n), n - k);
        // Expected ((n-k)!/(lambda^k k! n!)) p_0 and nothing else.
        Laurent expect(Rational(factorial(n - k)) / Rational(factorial(k) * factorial(n)), -k);
        bool ok = f.coeff(0) == expect;
        for (int i = 1; i < f.size(); ++i) ok = ok && f.coeff(i).is_zero();
        if (!ok) {
            all_match = false;
            if (witness.empty())
                witness = "k=" + std::to_string(k) + ": " + f.str();
        }
        // Normalized to exp form and resummed against the binomial identity.
        lhs_sum += Laurent(Rational(1) / Rational(factorial(n - k) * factorial(n - k))) *
                   f.coeff(0);
        rhs_sum += Laurent(Rational(binomial(n, k)) /
                               Rational(factorial(n) * factorial(n)),
                           -k);
    }
    out.push_back({"int td^{1/2}_{2k} (ss)^{n-k} = ((n-k)!/(lambda^k k! n!)) p0",
                   all_match, witness});
    out.push_back({"binomial resummation to (1+lambda)^n int td^{1/2}",
                   lhs_sum == rhs_sum,
                   all_match ? "" : lhs_sum.str() + " vs " + rhs_sum.str()});
    return out;
}

// ---------------------------------------------------------------------------
// Omega model
// ---------------------------------------------------------------------------

OmegaClass OmegaClass::basis(int n, int i, int a, const Laurent& c) {
    OmegaClass x(n);
    if (i < 0 || i > n || a < 0) throw RangeError("U-basis symbol out of range");
    x.add_term({i, a}, c);
    return x;
}

void OmegaClass::add_term(const Key& k, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OmegaClass& OmegaClass::operator+=(const OmegaClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

OmegaClass Lambda_omega(const OmegaClass& x) {
    const int n = x.ambient();
    OmegaClass r(n);
    for (const auto& [k, c] : x.terms()) {
        const int i = k[0], a = k[1];
        if (i >= 1) r.add_term({i - 1, a + 1}, Laurent(Rational(1), -1) * c);
        if (a >= 1) {
            Rational f = Rational(-a) * Rational(4 * i - 2 * n + a - 1);
            if (f != 0) r.add_term({i, a - 1}, Laurent(f) * c);
        }
    }
    return r;
}

OmegaClass omega_primitive_combination(int n, int k) {
    if (k < 0 || 2 * k > n) throw RangeError("requires 0 <= 2k <= n");
    OmegaClass x(n);
    const Integer a_num = factorial(2 * n - 4 * k + 2);
    const Integer den0 = factorial(n - 2 * k + 1);
    for (int i = 0; i <= k; ++i) {
        Rational c = Rational(a_num * factorial(n - k - i + 1)) /
                     Rational(factorial(k - i) * den0 * factorial(2 * n - 2 * k - 2 * i + 2));
        if ((k - i) % 2 == 1) c = -c;
        x.add_term({i, 2 * k - 2 * i}, Laurent(c, -(k - i)));
    }
    return x;
}

bool omega_primitive_check(int n, int k) {
    return Lambda_omega(omega_primitive_combination(n, k)).is_zero();
}

} // namespace hk
