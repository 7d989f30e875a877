#include "padezeta/seval.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/euler_maclaurin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padezeta {

namespace {

constexpr double kNoErr = -std::numeric_limits<double>::infinity();

double log2_rat(const BigRat& q) {
    if (q == 0) return kNoErr;
    const BigInt num = ::abs(BigInt(q.get_num()));
    return static_cast<double>(bit_length(num)) - static_cast<double>(bit_length(q.get_den())) + 1.0;
}

// (t - k + 2)_(k-1) for the S0 branch, (t)_(k-1) for the Sinf branch.
Poly weight_poly(SBranch branch, long k) {
    Poly w{BigRat(1)};
    const long base = branch == SBranch::AtZero ? -k + 2 : 0;
    for (long i = 0; i < k - 1; ++i) w *= Poly{BigRat(base + i), BigRat(1)};
    return w;
}

// Exact G(t) for one index: F(-t) W(t) or F(t) W(t).
BigRat g_value(const Construction& c, SBranch branch, const Poly& w, long t) {
    const BigRat ft =
        branch == SBranch::AtZero ? c.F.eval(BigRat(-t)) : c.F.eval(BigRat(t));
    return ft * w.eval(BigRat(t));
}

long first_nonzero_index(const Construction& c, SBranch branch) {
    return branch == SBranch::AtZero ? (c.params.r + 1) * c.params.n + 1
                                     : c.params.r * c.params.n + 1;
}

} // namespace

SDerivEval eval_S_deriv(const Construction& c, SBranch branch, long k, const MPComplex& z,
                        long prec, long term_cap) {
    if (k < 1 || k > c.d0 - 1)
        throw InvalidParams("derivative order k must satisfy 1 <= k <= d0 - 1");
    if (prec < 8) throw InvalidParams("precision too small");
    const long n = c.params.n;
    const long wp = prec + 32;
    const Poly w = weight_poly(branch, k);
    const BigRat An = tail_constant_An(c.pjh, n);

    // |tail past T| <= (2n+1) An (2n)^d0 2^(k-1) T^(k-d0) / (d0-k) for
    // T >= max(2n, 2k), assuming the series variable stays on or inside the
    // unit circle.  Strictly inside the disc the per-term z-power adds a
    // geometric factor |zser|^(T+2-k) on top (a common lower bound on the
    // z-exponent of every term past T, for either branch).
    const double log2C = log2_rat(An) + std::log2(2.0 * n + 1.0) +
                         static_cast<double>(c.d0) * std::log2(2.0 * n) +
                         static_cast<double>(k - 1) -
                         std::log2(static_cast<double>(c.d0 - k));

    const long t0 = first_nonzero_index(c, branch);
    const MPComplex zser = branch == SBranch::AtZero ? z : cx_inverse(z);
    // Upper bound on log2|zser| with slack for the double-precision estimate;
    // clamped at 0 so points on the circle keep the polynomial-decay bound.
    const double log2zser = std::min(0.0, zser.log2_abs() + 1.0 / 1024.0);
    auto tail_log2 = [&](long T) {
        return log2C + static_cast<double>(k - c.d0) * std::log2(static_cast<double>(T)) +
               static_cast<double>(T + 2 - k) * log2zser;
    };
    // z-power at the first term: z^(t0-k+1) resp. z^-(t0+k-1).
    MPComplex zpow = cx_pow(zser, branch == SBranch::AtZero ? t0 - k + 1 : t0 + k - 1);

    MPComplex acc(wp);
    double maxmag = kNoErr;
    const BigRat ksign = (branch == SBranch::AtInfinity && k % 2 == 0) ? BigRat(-1) : BigRat(1);
    long t = t0;
    const long tmin = std::max({2 * n, 2 * k, t0});
    for (;; ++t) {
        if (t > term_cap)
            throw PrecisionNotReached("series tail still above target at the term cap");
        const BigRat gv = g_value(c, branch, w, t) * ksign;
        if (gv != 0) {
            acc += zpow.scaled(MpFloat::from_bigrat(gv, wp));
            maxmag = std::max(maxmag, acc.log2_abs());
        }
        zpow = zpow * zser;
        if (t >= tmin && (t & 15L) == 0 && tail_log2(t) <= -static_cast<double>(prec + 2)) break;
    }

    SDerivEval out;
    out.value = acc;
    out.terms = t - t0 + 1;
    out.log2err = log2_add(tail_log2(t), rounding_allowance(wp, maxmag, 4 * out.terms + 8));
    return out;
}

std::vector<std::vector<BigRat>> pole_expansion(const Construction& c, SBranch branch, long k) {
    if (k < 1 || k > c.d0 - 1)
        throw InvalidParams("pole expansion needs 1 <= k <= d0 - 1");
    const long a = c.params.a, N = c.params.N, m = c.params.m();
    const Poly w = weight_poly(branch, k);
    std::vector<std::vector<BigRat>> g(static_cast<size_t>(a + 1),
                                       std::vector<BigRat>(static_cast<size_t>(m + 1), BigRat(0)));
    Poly polypart; // accumulated in the common t-basis
    for (long h = 0; h <= m; ++h) {
        // Taylor coefficients of the weight about the pole location t = sh.
        const long sh = branch == SBranch::AtZero ? N * h : -N * h;
        const Poly wsh = w.shifted(BigRat(sh)); // wsh(x) = W(x + sh), x = t - sh
        for (long j = 1; j <= a; ++j) {
            BigRat pj = c.pjh.coeff(j, h);
            if (branch == SBranch::AtZero && j % 2 == 1) pj = -pj;
            if (pj == 0) continue;
            for (long i = j; i >= 1; --i) {
                const long widx = j - i;
                if (widx < static_cast<long>(wsh.coeffs().size()))
                    g[static_cast<size_t>(i)][static_cast<size_t>(h)] +=
                        pj * wsh.coeff(static_cast<size_t>(widx));
            }
            // Non-negative powers of x = t - sh contribute a polynomial in t.
            if (wsh.degree() >= j) {
                std::vector<BigRat> tail(wsh.coeffs().begin() + j, wsh.coeffs().end());
                for (BigRat& cterm : tail) cterm *= pj;
                polypart += Poly::from_coeffs(std::move(tail)).shifted(BigRat(-sh));
            }
        }
    }
    if (!polypart.is_zero())
        throw PreconditionViolated("pole expansion produced a polynomial part");
    BigRat c1(0);
    for (long h = 0; h <= m; ++h) c1 += g[1][static_cast<size_t>(h)];
    if (c1 != 0)
        throw PreconditionViolated("1/t coefficients of the pole expansion do not cancel");
    g.erase(g.begin()); // drop the unused i = 0 slot; g[i-1][h] from here on
    return g;
}

CertComplex weighted_head(const Construction& c, SBranch branch, long k, long T, long prec) {
    const long wp = prec + 32;
    const Poly w = weight_poly(branch, k);
    MPComplex acc(wp);
    double maxmag = kNoErr;
    long ops = 0;
    for (long t = first_nonzero_index(c, branch); t <= T; ++t) {
        const BigRat gv = g_value(c, branch, w, t);
        if (gv == 0) continue;
        const MPComplex ct = MPComplex::from_cyc(c.params.c_at(t), wp);
        if (ct.is_zero()) continue;
        acc += ct.scaled(MpFloat::from_bigrat(gv, wp));
        maxmag = std::max(maxmag, acc.log2_abs());
        ops += 6;
    }
    return CertComplex{acc, rounding_allowance(wp, maxmag, ops + 1)};
}

long default_anchor(const Construction& c, long k) {
    const long n = c.params.n, r = c.params.r;
    return std::max({2 * n + 1, (r + 1) * n + 1, 2 * k + 2});
}

CertComplex accelerated_tail(const Construction& c, SBranch branch, long k, long T, long prec) {
    const ProblemParams& pp = c.params;
    if (T < std::max(pp.n, k + 1)) throw InvalidParams("anchor T is too small");
    const long wp = prec + 32;
    const long P = pp.period();
    const long m = pp.m();
    const auto g = pole_expansion(c, branch, k);
    const BigRat y = pp.z0_pow_N();

    // Combined pole-series coefficients C_i = sum_h g[i][h] y^h.
    std::vector<BigRat> C(static_cast<size_t>(pp.a + 1), BigRat(0));
    for (long i = 1; i <= pp.a; ++i)
        for (long h = 0; h <= m; ++h)
            C[static_cast<size_t>(i)] +=
                g[static_cast<size_t>(i - 1)][static_cast<size_t>(h)] * pow_rat(y, h);

    MPComplex acc(wp);
    double err = kNoErr;
    double maxmag = kNoErr;
    long ops = 0;

    // Anchored class sums L_i(T) = sum_{u>T} c_u / u^i.
    for (long i = 1; i <= pp.a; ++i) {
        if (C[static_cast<size_t>(i)] == 0) continue;
        MPComplex Li(wp);
        double errLi = kNoErr;
        if (i == 1) {
            if (pp.z0 == Z0Kind::One)
                throw PreconditionViolated("a 1/t pole series survived at z0 = 1");
            for (long rho = 1; rho <= P; ++rho) {
                const MPComplex cr = MPComplex::from_cyc(pp.c_at(rho), wp);
                if (cr.is_zero()) continue;
                const long u = T + 1 + ((rho - (T + 1)) % P + P) % P;
                const CertReal ps = digamma(make_rat(u, P), wp);
                Li -= cr.scaled(ps.v);
                errLi = log2_add(errLi, ps.log2err + cr.log2_abs());
            }
            Li = Li.scaled(MpFloat::from_bigrat(make_rat(1, P), wp));
            errLi -= std::log2(static_cast<double>(P));
        } else {
            for (long rho = 1; rho <= P; ++rho) {
                const MPComplex cr = MPComplex::from_cyc(pp.c_at(rho), wp);
                if (cr.is_zero()) continue;
                const long u = T + 1 + ((rho - (T + 1)) % P + P) % P;
                const CertReal hz = hurwitz_zeta(i, make_rat(u, P), wp);
                Li += cr.scaled(hz.v);
                errLi = log2_add(errLi, hz.log2err + cr.log2_abs());
            }
            Li = Li.scaled(MpFloat::from_bigrat(pow_rat(BigRat(P), -i), wp));
            errLi -= static_cast<double>(i) * std::log2(static_cast<double>(P));
        }
        acc += Li.scaled(MpFloat::from_bigrat(C[static_cast<size_t>(i)], wp));
        err = log2_add(err, errLi + log2_rat(C[static_cast<size_t>(i)]));
        maxmag = std::max(maxmag, acc.log2_abs());
        ops += 8 * P;
    }

    // Finite anchor corrections between L_i(T) and each pole's own offset.
    for (long i = 1; i <= pp.a; ++i) {
        for (long h = 0; h <= m; ++h) {
            const BigRat& gih = g[static_cast<size_t>(i - 1)][static_cast<size_t>(h)];
            if (gih == 0 || h == 0) continue;
            const BigRat coef = gih * pow_rat(y, h);
            MPComplex fs(wp);
            if (branch == SBranch::AtZero) {
                for (long u = T - pp.N * h + 1; u <= T; ++u) {
                    const MPComplex cu = MPComplex::from_cyc(pp.c_at(u), wp);
                    if (cu.is_zero()) continue;
                    fs += cu.scaled(MpFloat::from_bigrat(pow_rat(BigRat(u), -i), wp));
                }
            } else {
                for (long u = T + 1; u <= T + pp.N * h; ++u) {
                    const MPComplex cu = MPComplex::from_cyc(pp.c_at(u), wp);
                    if (cu.is_zero()) continue;
                    fs -= cu.scaled(MpFloat::from_bigrat(pow_rat(BigRat(u), -i), wp));
                }
            }
            acc += fs.scaled(MpFloat::from_bigrat(coef, wp));
            maxmag = std::max(maxmag, acc.log2_abs());
            ops += 6 * pp.N * h;
        }
    }

    err = log2_add(err, rounding_allowance(wp, maxmag, ops + 8));
    return CertComplex{acc, err};
}

} // namespace padezeta
