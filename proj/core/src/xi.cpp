#include "padezeta/xi.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/euler_maclaurin.hpp"

#include <cmath>
#include <limits>

namespace padezeta {

namespace {

constexpr double kNoErr = -std::numeric_limits<double>::infinity();

// Rounding slack for converting one exact scalar at precision wp.
double conv_err(const MPComplex& v, long wp) {
    return rounding_allowance(wp, log2_add(v.log2_abs(), 0.0), 4);
}

} // namespace

std::vector<MPComplex> mu_weights(const ProblemParams& pp, long prec) {
    pp.validate();
    std::vector<MPComplex> mu;
    mu.reserve(static_cast<size_t>(pp.N));
    const BigRat invN = make_rat(1, pp.N);
    for (long l = 1; l <= pp.N; ++l) {
        MPComplex acc(prec);
        for (long la = 1; la <= pp.N; ++la) {
            const CycScalar term =
                pp.f_at(la) * CycScalar::root_of_unity(BigRat(-l * la) / BigRat(pp.N));
            acc += MPComplex::from_cyc(term, prec);
        }
        mu.push_back(acc.scaled(MpFloat::from_bigrat(invN, prec)));
    }
    return mu;
}

CertComplex xi1_value(const ProblemParams& pp, long prec) {
    pp.validate();
    if (pp.z0 == Z0Kind::One)
        throw DivergentXi1("xi_1 diverges (or is conditionally defined) at z0 = 1; "
                           "it is excluded from the linear forms there");
    const long P = pp.period();
    // Structural check that the period-P weights cancel: c_(rho+N) = -c_rho.
    for (long rho = 1; rho <= pp.N; ++rho)
        if (!(pp.c_at(rho + pp.N) == -pp.c_at(rho)))
            throw DivergentXi1("period weights do not cancel; xi_1 would diverge");
    const long wp = prec + 32;
    MPComplex acc(wp);
    double err = kNoErr;
    for (long rho = 1; rho <= P; ++rho) {
        const MPComplex c = MPComplex::from_cyc(pp.c_at(rho), wp);
        if (c.is_zero()) continue;
        const CertReal psi = digamma(make_rat(rho, P), wp);
        acc += c.scaled(psi.v);
        err = log2_add(err, psi.log2err + c.log2_abs());
        err = log2_add(err, conv_err(c, wp) + psi.v.log2_abs());
    }
    const MpFloat scale = MpFloat::from_bigrat(make_rat(-1, P), wp);
    CertComplex out{acc.scaled(scale), err - std::log2(static_cast<double>(P)) };
    out.log2err = log2_add(out.log2err, rounding_allowance(wp, out.v.log2_abs(), 4 * P));
    return out;
}

XiVector xi_values(const ProblemParams& pp, long prec) {
    pp.validate();
    const long wp = prec + 32;
    XiVector xv;
    xv.a = pp.a;
    xv.N = pp.N;
    xv.period = pp.period();
    xv.i0 = pp.i0();
    const long P = xv.period;

    xv.xi.reserve(static_cast<size_t>(pp.a));
    for (long j = 1; j <= pp.a; ++j) {
        if (j == 1) {
            if (pp.z0 == Z0Kind::One)
                xv.xi.push_back(CertComplex{MPComplex(wp), kNoErr});
            else
                xv.xi.push_back(xi1_value(pp, prec));
            continue;
        }
        MPComplex acc(wp);
        double err = kNoErr;
        const BigRat pj = pow_rat(BigRat(P), -j);
        for (long rho = 1; rho <= P; ++rho) {
            const MPComplex c = MPComplex::from_cyc(pp.c_at(rho), wp);
            if (c.is_zero()) continue;
            const CertReal hz = hurwitz_zeta(j, make_rat(rho, P), wp);
            acc += c.scaled(hz.v);
            err = log2_add(err, hz.log2err + c.log2_abs());
            err = log2_add(err, conv_err(c, wp) + hz.v.log2_abs());
        }
        acc = acc.scaled(MpFloat::from_bigrat(pj, wp));
        err += -static_cast<double>(j) * std::log2(static_cast<double>(P));
        err = log2_add(err, rounding_allowance(wp, acc.log2_abs(), 4 * P));
        xv.xi.push_back(CertComplex{acc, err});
    }

    xv.xi_prime.reserve(static_cast<size_t>(pp.a + pp.N));
    for (long j = 1; j <= pp.a; ++j) {
        if (j % 2 == pp.p % 2) {
            const CertComplex& x = xv.xi[static_cast<size_t>(j - 1)];
            const MpFloat two = MpFloat::from_long(pp.p == 0 ? 2 : -2, wp);
            xv.xi_prime.push_back(CertComplex{x.v.scaled(two), x.log2err + 1.0});
        } else {
            xv.xi_prime.push_back(CertComplex{MPComplex(wp), kNoErr});
        }
    }
    for (long lam = 0; lam < pp.N; ++lam) {
        const CycScalar w = pp.f_at(lam == 0 ? pp.N : lam) * pp.z0_scalar().pow(lam);
        const MPComplex v = MPComplex::from_cyc(w, wp);
        xv.xi_prime.push_back(CertComplex{v, conv_err(v, wp)});
    }
    return xv;
}

} // namespace padezeta
