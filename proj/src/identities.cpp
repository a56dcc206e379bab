#include "hk/identities.hpp"

namespace hk {

Rational lemma_a1(int n, int k, int j) {
    if (!(j >= 0 && k >= j && 2 * k <= n)) throw RangeError("lemma_a1 requires n/2 >= k >= j >= 0");
    Rational sum(0);
    for (int i = 0; i <= k - j; ++i) {
        Rational term = Rational(n - 2 * k + 2 * i + 1) * Rational(factorial(n - 2 * k + i)) /
                        Rational(factorial(i) * factorial(k - i - j) *
                                 factorial(n - k + i - j + 1));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational lemma_a1_closed(int n, int k, int j) {
    if (!(j >= 0 && k >= j && 2 * k <= n)) throw RangeError("bad (n, k, j)");
    return Rational(k == j ? 1 : 0);
}

Rational lemma_a2(int n, int m, int i) {
    if (!(i >= 0 && m >= 2 * i && n >= m)) throw RangeError("lemma_a2 requires n >= m >= 2i >= 0");
    Rational sum(0);
    for (int k = i; k <= m - i; ++k)
        sum += Rational(factorial(n - k - i) * factorial(n - m + k - i)) /
               Rational(factorial(k - i) * factorial(m - k - i));
    return sum;
}

Rational lemma_a2_closed(int n, int m, int i) {
    if (!(i >= 0 && m >= 2 * i && n >= m)) throw RangeError("bad (n, m, i)");
    Integer f = factorial(n - m);
    return Rational(f * f * binomial(2 * n - 2 * i - m + 1, m - 2 * i));
}

} // namespace hk
