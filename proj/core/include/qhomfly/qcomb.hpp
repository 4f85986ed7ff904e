#pragma once

#include "qhomfly/qfield.hpp"

namespace qhomfly {

// [r] = (q^r - q^-r)/(q - q^-1)
RatQ qint(int r);
// [r]! for r >= 0
RatQ qfactorial(int r);
// 0 for s < 0, otherwise prod_{k=r-s+1}^{r} [k] / [s]!, any integer r
RatQ qbinom(int r, int s);
// qbinom as a Laurent polynomial; it always is one
const LaurentQ& qbinom_laurent(int r, int s);
// 0 for l < 0, otherwise prod_{j=1}^{l} (x q^{s-j+1} - x^-1 q^{-s+j-1}) / (q^j - q^-j)
XPoly xbinom(int s, int l);

inline int heaviside(long k) { return k >= 0 ? 1 : 0; }
inline int kronecker(long a, long b) { return a == b ? 1 : 0; }

}  // namespace qhomfly
