#ifndef HK_IDENTITIES_HPP
#define HK_IDENTITIES_HPP

#include "hk/errors.hpp"
#include "hk/rational.hpp"

namespace hk {

// sum_{i=0}^{k-j} (-1)^i (n-2k+2i+1)(n-2k+i)! / (i! (k-i-j)! (n-k+i-j+1)!)
// for n/2 >= k >= j >= 0; equals 0 for k > j and 1 for k = j.
Rational lemma_a1(int n, int k, int j);

// sum_{k=i}^{m-i} (n-k-i)! (n-m+k-i)! / ((k-i)! (m-k-i)!) for
// n >= m >= 2i >= 0; equals (n-m)!^2 binom(2n-2i-m+1, m-2i).
Rational lemma_a2(int n, int m, int i);

Rational lemma_a1_closed(int n, int k, int j);
Rational lemma_a2_closed(int n, int m, int i);

} // namespace hk

#endif
