#include "padezeta/mpfloat.hpp"

#include "padezeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <vector>

namespace padezeta {

namespace {

long min_prec(const MpFloat& a, const MpFloat& b) {
    return std::min(a.precision(), b.precision());
}

long checked_prec(long prec) {
    if (prec < MPFR_PREC_MIN || prec > 1L << 26)
        throw InvalidParams("unreasonable float precision requested");
    return prec;
}

} // namespace

MpFloat::MpFloat(long prec) { mpfr_init2(x_, checked_prec(prec)); mpfr_set_zero(x_, 1); }

MpFloat::MpFloat(const MpFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

MpFloat& MpFloat::operator=(const MpFloat& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

MpFloat::~MpFloat() { mpfr_clear(x_); }

MpFloat MpFloat::from_long(long v, long prec) {
    MpFloat r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::from_bigint(const BigInt& v, long prec) {
    MpFloat r(prec);
    mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

MpFloat MpFloat::from_bigrat(const BigRat& v, long prec) {
    MpFloat r(prec);
    mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

MpFloat MpFloat::from_double(double v, long prec) {
    MpFloat r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::pi(long prec) {
    MpFloat r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::euler_gamma(long prec) {
    MpFloat r(prec);
    mpfr_const_euler(r.x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::catalan(long prec) {
    MpFloat r(prec);
    mpfr_const_catalan(r.x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::zeta_ui(unsigned long s, long prec) {
    MpFloat r(prec);
    mpfr_zeta_ui(r.x_, s, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::log2_const(long prec) {
    MpFloat r(prec);
    mpfr_const_log2(r.x_, MPFR_RNDN);
    return r;
}

MpFloat operator+(const MpFloat& a, const MpFloat& b) {
    MpFloat r(min_prec(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

MpFloat operator-(const MpFloat& a, const MpFloat& b) {
    MpFloat r(min_prec(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

MpFloat operator*(const MpFloat& a, const MpFloat& b) {
    MpFloat r(min_prec(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

MpFloat operator/(const MpFloat& a, const MpFloat& b) {
    if (b.is_zero()) throw InvalidParams("division by a zero float");
    MpFloat r(min_prec(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::operator-() const {
    MpFloat r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::abs() const {
    MpFloat r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::sqrt() const {
    if (sign() < 0) throw InvalidParams("square root of a negative float");
    MpFloat r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::log() const {
    if (sign() <= 0) throw InvalidParams("logarithm of a nonpositive float");
    MpFloat r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::exp() const {
    MpFloat r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::pow_si(long e) const {
    MpFloat r(precision());
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

MpFloat MpFloat::mul_2si(long e) const {
    MpFloat r(precision());
    mpfr_mul_2si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

long MpFloat::ceil_long() const {
    MpFloat r(precision());
    mpfr_ceil(r.x_, x_);
    if (!mpfr_fits_slong_p(r.x_, MPFR_RNDN)) {
        throw InvalidParams("ceil_long: value out of range");
    }
    return mpfr_get_si(r.x_, MPFR_RNDN);
}

double MpFloat::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    // exponent-exact part plus a double-precision mantissa log.
    long exp2 = mpfr_get_exp(x_);
    MpFloat m(precision());
    mpfr_abs(m.x_, x_, MPFR_RNDN);
    mpfr_mul_2si(m.x_, m.x_, -exp2, MPFR_RNDN); // in [1/2, 1)
    return static_cast<double>(exp2) + std::log2(mpfr_get_d(m.x_, MPFR_RNDN));
}

std::string MpFloat::decimal(long digits) const {
    if (digits < 1) throw InvalidParams("need at least one decimal digit");
    // Render sign and integer/fraction split from a scaled integer so the
    // result is deterministic (no exponent form, fixed digit count).
    BigInt scale = pow_int(BigInt(10), static_cast<unsigned long>(digits));
    MpFloat t(precision() + 64);
    mpfr_mul_z(t.x_, x_, scale.get_mpz_t(), MPFR_RNDN);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), t.x_, MPFR_RNDN);
    const bool neg = z < 0;
    if (neg) z = -z;
    BigInt ip = z / scale, fp = z % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

double log2_add(double a, double b) {
    const double inf = std::numeric_limits<double>::infinity();
    if (a == -inf) return b;
    if (b == -inf) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp2(lo - hi)) / std::log(2.0);
}

double rounding_allowance(long prec, double log2mag, long ops) {
    if (ops <= 0) return -std::numeric_limits<double>::infinity();
    return log2mag + std::log2(static_cast<double>(ops)) - static_cast<double>(prec) + 2.0;
}

MPComplex MPComplex::from_cyc(const CycScalar& c, long prec) {
    MPComplex r(prec);
    if (c.is_zero()) return r;
    const BigRat& ang = c.angle();
    MpFloat theta = MpFloat::pi(prec) * MpFloat::from_bigrat(ang * 2, prec);
    MpFloat s(prec), co(prec);
    mpfr_sin_cos(s.raw(), co.raw(), theta.raw(), MPFR_RNDN);
    const MpFloat coef = MpFloat::from_bigrat(c.coef(), prec);
    return MPComplex(coef * co, coef * s);
}

MPComplex MPComplex::root_of_unity(long num, long den, long prec) {
    return from_cyc(CycScalar::root_of_unity(num, den), prec);
}

MPComplex MPComplex::from_bigrat(const BigRat& v, long prec) {
    return MPComplex(MpFloat::from_bigrat(v, prec), MpFloat(prec));
}

MPComplex operator+(const MPComplex& a, const MPComplex& b) {
    return MPComplex(a.re + b.re, a.im + b.im);
}

MPComplex operator-(const MPComplex& a, const MPComplex& b) {
    return MPComplex(a.re - b.re, a.im - b.im);
}

MPComplex operator*(const MPComplex& a, const MPComplex& b) {
    return MPComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

MPComplex MPComplex::operator-() const { return MPComplex(-re, -im); }

MPComplex MPComplex::conj() const { return MPComplex(re, -im); }

MPComplex MPComplex::scaled(const MpFloat& s) const { return MPComplex(re * s, im * s); }

MpFloat MPComplex::abs() const {
    MpFloat r(precision());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

double MPComplex::log2_abs() const { return abs().log2_abs(); }

MPComplex cx_inverse(const MPComplex& z) {
    if (z.is_zero()) throw InvalidParams("inverse of the zero complex");
    const MpFloat d = z.re * z.re + z.im * z.im;
    return MPComplex(z.re / d, -(z.im / d));
}

MPComplex cx_pow(const MPComplex& z, long e) {
    if (e < 0) return cx_pow(cx_inverse(z), -e);
    MPComplex acc(z.precision());
    acc.re = MpFloat::from_long(1, z.precision());
    MPComplex base = z;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1UL) acc = acc * base;
        u >>= 1UL;
        if (u > 0) base = base * base;
    }
    return acc;
}

} // namespace padezeta
