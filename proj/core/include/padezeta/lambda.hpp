#pragma once

// The weighted derivative combination
//   Lambda_k = sum_{t>n} F(-t) (t-k+2)_(k-1) c_t
//            + (-1)^(p+k-1) sum_{t>=1} F(t) (t)_(k-1) c_t,   c_t = f(t) z0^t,
// evaluated two independent ways: numerically (exact head + closed-form
// certified tail) and through the integer table, delta_n Lambda_k =
// sum_{i >= i0} s[k][i] xi'_i. Their agreement is the end-to-end check that
// ties the exact pipeline to the transcendental targets.

#include "padezeta/construction.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/mpfloat.hpp"
#include "padezeta/xi.hpp"

namespace padezeta {

// Accelerated numerical evaluation; requires 1 <= k <= d0 - 1.
CertComplex lambda_direct(const Construction& c, long k, long prec);

// (1/delta_n) sum_{i=i0}^{a+N} s[k][i] xi'_i from the integer table.
CertComplex lambda_via_table(const LinearFormTable& tab, const XiVector& xv, long k, long prec);

struct LambdaComparison {
    CertComplex direct;
    CertComplex via_table;
    MpFloat residual_scaled;   // |delta_n| * |direct - via_table|
    double residual_log2err;   // certified bound on the two routes' joint error, scaled
    MpFloat scale;             // max(1, |delta_n * direct|), the comparison scale
};

// Runs both routes and reports the delta_n-scaled residual and scale.
LambdaComparison lambda_k(const Construction& c, const LinearFormTable& tab, const XiVector& xv,
                          long k, long prec);

} // namespace padezeta
