#pragma once

// Numerical evaluation of the derivative series of the two linear forms.
//
// Plain route: partial summation of
//   S0^(k-1)(z)   = sum_{t>n}  F(-t) (t-k+2)_(k-1) z^(t-k+1)
//   Sinf^(k-1)(z) = sum_{t>=1} F(t) (-1)^(k-1) (t)_(k-1) z^(-t-k+1)
// with a certified integral-comparison tail bound (valid on |z| = 1 for
// k <= d0 - 1, where the terms decay like t^(k-1-d0)).
//
// Accelerated route (unit-circle points z = w z0 with w^N = 1): the weighted
// combination sum_t G(t) c_t with periodic weights c_t is split into an exact
// head t <= T and a closed-form tail, by expanding G exactly into partial
// fractions sum_{i,h} g[i][h]/(t -+ Nh)^i and completing each pole series with
// Hurwitz zeta (i >= 2) or digamma (i = 1) values anchored at T.

#include "padezeta/construction.hpp"
#include "padezeta/mpfloat.hpp"

#include <vector>

namespace padezeta {

enum class SBranch { AtZero, AtInfinity }; // S0 or Sinf

struct SDerivEval {
    MPComplex value;
    double log2err = 0;
    long terms = 0; // summed series terms
};

// Plain partial summation at z (|z| <= 1 for AtZero, |z| >= 1 for AtInfinity;
// in both cases the bound assumes the evaluation stays on or inside the unit
// circle in the series variable). Requires 1 <= k <= d0 - 1. Stops once the
// certified tail is below 2^-(prec+2); PrecisionNotReached if term_cap terms
// do not get there.
SDerivEval eval_S_deriv(const Construction& c, SBranch branch, long k, const MPComplex& z,
                        long prec, long term_cap = 200000);

// Exact pole expansion of G(t) = F(-t) (t-k+2)_(k-1) about t = +Nh (AtZero)
// or of G(t) = F(t) (t)_(k-1) about t = -Nh (AtInfinity): g[i][h] for
// i = 1..a, h = 0..n/N. The expansion has no polynomial part (the kernel
// decays); PreconditionViolated if one shows up, or if the 1/t coefficients
// fail to cancel (sum_h g[1][h] must vanish).
std::vector<std::vector<BigRat>> pole_expansion(const Construction& c, SBranch branch, long k);

// The weighted tail sum_{t>T} G(t) c_t for the branch, using the expansion
// above; weights c_t = f(t) z0^t. Also returns (via *out_...) the finite
// correction structure for reuse in tests.
CertComplex accelerated_tail(const Construction& c, SBranch branch, long k, long T, long prec);

// Weighted head sum_{t0 <= t <= T} G(t) c_t with exact rational G values.
CertComplex weighted_head(const Construction& c, SBranch branch, long k, long T, long prec);

// Default anchor: first index past the kernel zeros and past all poles.
long default_anchor(const Construction& c, long k);

} // namespace padezeta
