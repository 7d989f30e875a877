#include "padezeta/construction.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/series.hpp"

#include <cstdlib>

namespace padezeta {

namespace {

// (x + c)(x + c + 1) ... (x + c + len - 1) as a polynomial in x.
Poly rising_factor(const BigRat& c, long len) {
    Poly prod{BigRat(1)};
    for (long i = 0; i < len; ++i) prod *= Poly{c + i, BigRat(1)};
    return prod;
}

// Exact-polynomial series with knowledge declared through exponent end-1.
SeriesQ series_from_poly(const Poly& p, long end) {
    std::vector<BigRat> c(static_cast<size_t>(end), BigRat(0));
    for (size_t e = 0; e < p.coeffs().size() && e < c.size(); ++e) c[e] = p.coeffs()[e];
    return SeriesQ(0, std::move(c));
}

// p(1/w) as a series in w with knowledge through exponent end-1 (end > 0).
SeriesQ series_from_poly_inverted(const Poly& p, long end) {
    const long d = p.is_zero() ? 0 : p.degree();
    std::vector<BigRat> c(static_cast<size_t>(end + d), BigRat(0));
    for (long e = 0; e <= d; ++e) c[static_cast<size_t>(d - e)] = p.coeff(static_cast<size_t>(e));
    return SeriesQ(-d, std::move(c));
}

} // namespace

void ProblemParams::validate() const {
    if (a < 2) throw InvalidParams("weight a must be at least 2");
    if (r < 1) throw InvalidParams("depth r must be at least 1");
    if (N < 1) throw InvalidParams("grid step N must be at least 1");
    if (2 * r * N >= a) throw InvalidParams("need 2*r*N < a (strictly)");
    if (n < 1) throw InvalidParams("degree n must be positive");
    if (n % N != 0) throw InvalidParams("degree n must be a multiple of N");
    if (p != 0 && p != 1) throw InvalidParams("parity p must be 0 or 1");
    if (static_cast<long>(f.size()) != N)
        throw InvalidParams("exactly N weight values f(1)..f(N) are required");
}

CycScalar ProblemParams::z0_scalar() const {
    return z0 == Z0Kind::One ? CycScalar::one() : CycScalar::root_of_unity(1, 2 * N);
}

BigRat ProblemParams::z0_pow_N() const {
    return z0 == Z0Kind::One ? BigRat(1) : BigRat(-1);
}

CycScalar ProblemParams::f_at(long t) const {
    long idx = (t - 1) % N;
    if (idx < 0) idx += N;
    return f[static_cast<size_t>(idx)];
}

CycScalar ProblemParams::c_at(long t) const {
    return f_at(t) * z0_scalar().pow(t);
}

RatFunc build_F(const ProblemParams& pp) {
    pp.validate();
    const long m = pp.m();
    Poly num = rising_factor(BigRat(-pp.r * pp.n), pp.r * pp.n) *
               rising_factor(BigRat(pp.n + 1), pp.r * pp.n);
    num = num.scaled(pow_rat(BigRat(factorial(static_cast<unsigned long>(m))),
                             pp.a - 2 * pp.r * pp.N));
    Poly den{BigRat(1)};
    for (long h = 0; h <= m; ++h) den *= Poly{BigRat(pp.N * h), BigRat(1)}.pow(static_cast<unsigned long>(pp.a));
    return RatFunc(num, den);
}

PartialFractionForm expand_F(const ProblemParams& pp) {
    pp.validate();
    PartialFractionForm acc = pf_pow(pf_f0(pp.n, pp.N), pp.a - 2 * pp.r * pp.N);
    for (long i = 1; i <= pp.r * pp.N; ++i) acc = pf_multiply(acc, pf_g(i, pp.n, pp.N));
    for (long i = pp.N; i <= (pp.r + 1) * pp.N - 1; ++i)
        acc = pf_multiply(acc, pf_h(i, pp.n, pp.N));
    return acc;
}

PartialFractionForm expand_F_oracle(const RatFunc& F, const ProblemParams& pp) {
    pp.validate();
    const long m = pp.m();
    PartialFractionForm out(pp.N, pp.a, m);
    BigRat dfact(1);
    for (long h = 0; h <= m; ++h) {
        RatFunc g = F * RatFunc(Poly{BigRat(pp.N * h), BigRat(1)}.pow(static_cast<unsigned long>(pp.a)));
        dfact = 1;
        for (long d = 0; d < pp.a; ++d) {
            if (d > 0) {
                g = g.derivative();
                dfact *= d;
            }
            out.add_term(pp.a - d, h, g.eval(BigRat(-pp.N * h)) / dfact);
        }
    }
    return out;
}

std::vector<Poly> build_P(const PartialFractionForm& pf, const ProblemParams& pp) {
    std::vector<Poly> P;
    P.reserve(static_cast<size_t>(pp.a));
    for (long j = 1; j <= pp.a; ++j) {
        std::vector<BigRat> c(static_cast<size_t>(pp.n + 1), BigRat(0));
        for (long h = 0; h <= pf.hmax(); ++h) c[static_cast<size_t>(pp.N * h)] = pf.coeff(j, h);
        P.push_back(Poly::from_coeffs(std::move(c)));
    }
    return P;
}

Poly build_U(const PartialFractionForm& pf, const ProblemParams& pp) {
    // S0(z) = sum_j P_j(z)(-1)^j Li_j(z) + U(z) forces
    // U(z) = -sum_{t=1}^n z^t sum_j sum_{Nh < t} p[j][h] / (Nh - t)^j.
    std::vector<BigRat> u(static_cast<size_t>(pp.n + 1), BigRat(0));
    for (long t = 1; t <= pp.n; ++t) {
        BigRat s(0);
        for (long j = 1; j <= pp.a; ++j) {
            const BigRat sj = (j % 2 == 0) ? BigRat(1) : BigRat(-1);
            for (long h = 0; h <= (t - 1) / pp.N && h <= pf.hmax(); ++h)
                s += sj * pf.coeff(j, h) / pow_rat(BigRat(t - pp.N * h), j);
        }
        u[static_cast<size_t>(t)] = -s;
    }
    return Poly::from_coeffs(std::move(u));
}

Poly build_V(const PartialFractionForm& pf, const ProblemParams& pp) {
    std::vector<BigRat> v(static_cast<size_t>(pp.n), BigRat(0));
    for (long t = 0; t < pp.n; ++t) {
        BigRat s(0);
        for (long j = 1; j <= pp.a; ++j)
            for (long h = (t + pp.N) / pp.N; h <= pf.hmax(); ++h)
                s += pf.coeff(j, h) / pow_rat(BigRat(pp.N * h - t), j);
        v[static_cast<size_t>(t)] = -s;
    }
    return Poly::from_coeffs(std::move(v));
}

Construction build_construction(const ProblemParams& pp) {
    pp.validate();
    Construction c{pp, build_F(pp), expand_F(pp), {}, {}, {}, 0, false};
    if (c.pjh.max_order() != pp.a)
        throw PreconditionViolated("partial-fraction expansion lost its top pole order");
    if (c.pjh.reassemble() != c.F)
        throw PreconditionViolated("partial-fraction expansion does not reassemble to F");
    c.P = build_P(c.pjh, pp);
    c.U = build_U(c.pjh, pp);
    c.V = build_V(c.pjh, pp);
    c.d0 = pp.d0();
    if (c.F.degree() != -c.d0)
        throw PreconditionViolated("kernel degree disagrees with a(n/N+1) - 2rn");
    c.d0_below_n_plus_a = c.d0 < pp.n + pp.a;
    return c;
}

BigRat s0_coefficient(const Construction& c, long t) {
    if (t < c.params.n + 1)
        throw InvalidParams("S0 coefficients are defined for t >= n+1");
    return c.F.eval(BigRat(-t));
}

BigRat sinf_coefficient(const Construction& c, long t) {
    if (t < 1) throw InvalidParams("Sinf coefficients are defined for t >= 1");
    return c.F.eval(BigRat(t));
}

bool verify_pade_at_one(const Construction& c, long depth) {
    if (depth < 0) throw InvalidParams("depth must be nonnegative");
    if (depth == 0) return true; // empty check

    const SeriesQ lg = log1p_series(depth); // log z at z = 1 + x
    SeriesQ acc = SeriesQ::zero_to(depth);
    SeriesQ lgpow = SeriesQ::one(depth);
    BigRat fact(1);
    for (long j = 1; j <= c.params.a; ++j) {
        if (j > 1) {
            lgpow = (lgpow * lg).truncated(depth);
            fact *= (j - 1);
        }
        const BigRat sj = (j % 2 == 1) ? BigRat(1) : BigRat(-1);
        acc = acc + series_from_poly(c.P[static_cast<size_t>(j - 1)].shifted(BigRat(1)), depth)
                        .scaled(sj / fact) *
                        lgpow;
    }
    for (long e = 0; e < depth; ++e)
        if (acc.coeff(e) != 0) return false;
    return true;
}

bool check_s0_series_identity(const Construction& c, long terms) {
    const long end = terms + 1;
    SeriesQ lhs = series_from_poly(c.U, end);
    for (long j = 1; j <= c.params.a; ++j) {
        const BigRat sj = (j % 2 == 0) ? BigRat(1) : BigRat(-1);
        lhs = lhs + series_from_poly(c.P[static_cast<size_t>(j - 1)], end).scaled(sj) *
                        polylog_series(static_cast<unsigned long>(j), end);
    }
    for (long e = 0; e <= terms; ++e) {
        const BigRat want = e > c.params.n ? c.F.eval(BigRat(-e)) : BigRat(0);
        if (lhs.coeff(e) != want) return false;
    }
    return true;
}

bool check_sinf_series_identity(const Construction& c, long terms) {
    // In the variable w = 1/z the claim reads
    //   V(1/w) + sum_j P_j(1/w) Li_j(w) = sum_{t>=1} F(t) w^t;
    // every negative w-power on the left must cancel.
    const long end = terms + 1;
    SeriesQ lhs = series_from_poly_inverted(c.V, end);
    for (long j = 1; j <= c.params.a; ++j)
        lhs = lhs + series_from_poly_inverted(c.P[static_cast<size_t>(j - 1)], end) *
                        polylog_series(static_cast<unsigned long>(j), end + c.params.n);
    for (long e = -c.params.n; e <= terms; ++e) {
        const BigRat want = e >= 1 ? c.F.eval(BigRat(e)) : BigRat(0);
        if (lhs.coeff(e) != want) return false;
    }
    return true;
}

BigRat tail_constant_An(const PartialFractionForm& pf, long n) {
    BigRat s(0);
    for (long j = 1; j <= pf.max_order(); ++j)
        for (long h = 0; h <= pf.hmax(); ++h)
            s += abs(pf.coeff(j, h)) / pow_rat(BigRat(n), j);
    s /= 2;
    return s > 1 ? s : BigRat(1);
}

} // namespace padezeta
