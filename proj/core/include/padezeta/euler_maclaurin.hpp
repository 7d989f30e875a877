#pragma once

// Certified evaluation of Hurwitz zeta at integer s >= 2 and of the digamma
// function, both at positive rational arguments, via Euler-Maclaurin with an
// exact first-omitted-term remainder bound (the summands are completely
// monotone, so the remainder is bounded by the first term left out).

#include "padezeta/mpfloat.hpp"
#include "padezeta/rational.hpp"

namespace padezeta {

// Exact Bernoulli number B_k (B_1 = -1/2), cached.
const BigRat& bernoulli(unsigned long k);

// zeta(s, x) = sum_{k>=0} (x+k)^-s. Certified absolute error <= 2^log2err,
// with the method tail pushed below 2^-(prec+8). Accepts any rational x > 0
// (the documented domain is (0, 1]; larger x converges even faster).
CertReal hurwitz_zeta(long s, const BigRat& x, long prec);

// psi(x) = Gamma'(x)/Gamma(x) for rational x > 0, same certification scheme.
CertReal digamma(const BigRat& x, long prec);

} // namespace padezeta
