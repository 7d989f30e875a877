#include "padezeta/lambda.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/seval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padezeta {

namespace {

constexpr double kNoErr = -std::numeric_limits<double>::infinity();

double log2_int(const BigInt& v) {
    if (v == 0) return kNoErr;
    return static_cast<double>(bit_length(v));
}

} // namespace

CertComplex lambda_direct(const Construction& c, long k, long prec) {
    if (k < 1 || k > c.d0 - 1)
        throw InvalidParams("Lambda_k is defined for 1 <= k <= d0 - 1");
    const long T = default_anchor(c, k);
    const CertComplex h0 = weighted_head(c, SBranch::AtZero, k, T, prec);
    const CertComplex t0 = accelerated_tail(c, SBranch::AtZero, k, T, prec);
    const CertComplex hi = weighted_head(c, SBranch::AtInfinity, k, T, prec);
    const CertComplex ti = accelerated_tail(c, SBranch::AtInfinity, k, T, prec);
    const bool flip = (c.params.p + k - 1) % 2 != 0; // (-1)^(p+k-1)
    MPComplex v = h0.v + t0.v;
    MPComplex vi = hi.v + ti.v;
    if (flip) vi = -vi;
    v += vi;
    double err = log2_add(log2_add(h0.log2err, t0.log2err), log2_add(hi.log2err, ti.log2err));
    err = log2_add(err, rounding_allowance(v.precision(), v.log2_abs(), 8));
    return CertComplex{v, err};
}

CertComplex lambda_via_table(const LinearFormTable& tab, const XiVector& xv, long k, long prec) {
    if (k < 1 || k > tab.K) throw InvalidParams("table has no row k");
    if (tab.a != xv.a || tab.N != xv.N)
        throw InvalidParams("table and xi vector belong to different instances");
    const long wp = prec + 32;
    MPComplex acc(wp);
    double err = kNoErr;
    double maxmag = kNoErr;
    const auto& row = tab.s[static_cast<size_t>(k - 1)];
    for (long i = tab.i0; i <= tab.a + tab.N; ++i) {
        const BigInt& s = row[static_cast<size_t>(i - 1)];
        if (s == 0) continue;
        const CertComplex& xp = xv.xi_prime[static_cast<size_t>(i - 1)];
        acc += xp.v.scaled(MpFloat::from_bigint(s, wp));
        err = log2_add(err, xp.log2err + log2_int(s));
        maxmag = std::max(maxmag, acc.log2_abs());
    }
    const MpFloat delta = MpFloat::from_bigint(tab.delta, wp);
    acc = MPComplex(acc.re / delta, acc.im / delta);
    err -= log2_int(tab.delta);
    err = log2_add(err, rounding_allowance(wp, maxmag - log2_int(tab.delta),
                                           4 * (tab.a + tab.N) + 4));
    return CertComplex{acc, err};
}

LambdaComparison lambda_k(const Construction& c, const LinearFormTable& tab, const XiVector& xv,
                          long k, long prec) {
    LambdaComparison cmp{lambda_direct(c, k, prec), lambda_via_table(tab, xv, k, prec),
                         MpFloat(prec), 0.0, MpFloat(prec)};
    const long wp = prec + 32;
    const MpFloat delta = MpFloat::from_bigint(tab.delta, wp);
    cmp.residual_scaled = (cmp.direct.v - cmp.via_table.v).abs() * delta;
    const double dlog = log2_int(tab.delta);
    cmp.residual_log2err = log2_add(cmp.direct.log2err, cmp.via_table.log2err) + dlog;
    const MpFloat scaled_mag = cmp.direct.v.abs() * delta;
    cmp.scale = scaled_mag < MpFloat::from_long(1, wp) ? MpFloat::from_long(1, wp) : scaled_mag;
    return cmp;
}

} // namespace padezeta
