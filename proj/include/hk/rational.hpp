#ifndef HK_RATIONAL_HPP
#define HK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hk {

// Exact rational scalar used throughout. All arithmetic in this project is
// exact; no floating point is allowed on any verification path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binomial(n, k) with the convention C(n, k) = 0 for k < 0 or k > n; n >= 0.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long m = e > 0 ? e : -e;
    Rational r(1);
    for (long i = 0; i < m; ++i) r *= b;
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace hk

#endif
