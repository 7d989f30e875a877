#include "padezeta/euler_maclaurin.hpp"

#include "padezeta/errors.hpp"

#include <cmath>
#include <vector>

namespace padezeta {

namespace {

// Conservative log2 of a positive rational (within 1 either way, rounded up).
double log2_rat_upper(const BigRat& q) {
    if (q == 0) return -1e300;
    const BigInt num = ::abs(q.get_num());
    return static_cast<double>(bit_length(num)) - static_cast<double>(bit_length(q.get_den())) + 1.0;
}

// Shift count so that x + M is comfortably past the Euler-Maclaurin
// convergence radius for the target precision.
long shift_for(const BigRat& x, long s, long prec) {
    const double need = 0.12 * static_cast<double>(prec + 8) + static_cast<double>(s) + 2.0;
    const double xv = mpq_get_d(x.get_mpq_t());
    if (xv >= need) return 0;
    return static_cast<long>(std::ceil(need - xv));
}

} // namespace

const BigRat& bernoulli(unsigned long k) {
    static std::vector<BigRat> cache{BigRat(1), make_rat(-1, 2)};
    while (cache.size() <= k) {
        const unsigned long m = cache.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0.
        BigRat acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += BigRat(binomial_ui(m + 1, j)) * cache[j];
        acc /= BigInt(m + 1);
        cache.push_back(-acc);
    }
    return cache[k];
}

CertReal hurwitz_zeta(long s, const BigRat& x, long prec) {
    if (s < 2) throw InvalidParams("Hurwitz zeta here needs integer s >= 2");
    if (x <= 0) throw InvalidParams("Hurwitz zeta needs x > 0");
    if (prec < 8) throw InvalidParams("precision too small");
    const long wp = prec + 48;
    const long M = shift_for(x, s, prec);

    MpFloat acc(wp);
    double maxmag = -1e300;
    long ops = 0;
    for (long kk = 0; kk < M; ++kk) {
        acc += MpFloat::from_bigrat(pow_rat(x + kk, -s), wp);
        ++ops;
    }
    maxmag = std::max(maxmag, acc.log2_abs());

    const BigRat y = x + M; // > 0
    // (x+M)^(1-s)/(s-1) + (x+M)^(-s)/2
    acc += MpFloat::from_bigrat(pow_rat(y, 1 - s) / BigRat(s - 1), wp);
    acc += MpFloat::from_bigrat(pow_rat(y, -s) / 2, wp);
    ops += 2;
    maxmag = std::max(maxmag, acc.log2_abs());

    // Correction terms B_2j/(2j)! (s)_(2j-1) (x+M)^(1-s-2j); the remainder
    // after J terms is at most the (J+1)-st term in absolute value.
    const long jcap = 2 * prec + 64;
    double tail_log2 = 0;
    bool certified = false;
    for (long j = 1; j <= jcap; ++j) {
        const BigRat coef = bernoulli(2 * static_cast<unsigned long>(j)) /
                            BigRat(factorial(2 * static_cast<unsigned long>(j))) *
                            pochhammer(BigRat(s), 2 * static_cast<unsigned long>(j) - 1);
        const BigRat term = coef * pow_rat(y, 1 - s - 2 * j);
        const double tl = log2_rat_upper(abs(term));
        if (tl <= -static_cast<double>(prec + 8)) {
            tail_log2 = tl; // first omitted term bounds the remainder
            certified = true;
            break;
        }
        acc += MpFloat::from_bigrat(term, wp);
        ++ops;
        maxmag = std::max(maxmag, acc.log2_abs());
    }
    if (!certified)
        throw PrecisionNotReached("Euler-Maclaurin corrections did not shrink enough");

    CertReal out;
    out.v = std::move(acc);
    out.log2err = log2_add(tail_log2, rounding_allowance(wp, maxmag, ops + 1));
    return out;
}

CertReal digamma(const BigRat& x, long prec) {
    if (x <= 0) throw InvalidParams("digamma here needs x > 0");
    if (prec < 8) throw InvalidParams("precision too small");
    const long wp = prec + 48;
    const long M = shift_for(x, 2, prec);

    MpFloat acc(wp);
    double maxmag = -1e300;
    long ops = 0;
    for (long kk = 0; kk < M; ++kk) {
        acc -= MpFloat::from_bigrat(BigRat(1) / (x + kk), wp);
        ++ops;
    }
    maxmag = std::max(maxmag, acc.log2_abs());

    const BigRat y = x + M;
    acc += MpFloat::from_bigrat(y, wp).log();
    acc -= MpFloat::from_bigrat(BigRat(1) / (2 * y), wp);
    ops += 2;
    maxmag = std::max(maxmag, acc.log2_abs());

    const long jcap = 2 * prec + 64;
    double tail_log2 = 0;
    bool certified = false;
    for (long j = 1; j <= jcap; ++j) {
        const BigRat term = bernoulli(2 * static_cast<unsigned long>(j)) / BigRat(2 * j) *
                            pow_rat(y, -2 * j);
        const double tl = log2_rat_upper(abs(term));
        if (tl <= -static_cast<double>(prec + 8)) {
            tail_log2 = tl;
            certified = true;
            break;
        }
        acc -= MpFloat::from_bigrat(term, wp);
        ++ops;
        maxmag = std::max(maxmag, acc.log2_abs());
    }
    if (!certified)
        throw PrecisionNotReached("Euler-Maclaurin corrections did not shrink enough");

    CertReal out;
    out.v = std::move(acc);
    out.log2err = log2_add(tail_log2, rounding_allowance(wp, maxmag, ops + 1));
    return out;
}

} // namespace padezeta
