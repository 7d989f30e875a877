#pragma once

// Arbitrary-precision binary floats (MPFR) and complex pairs. Arithmetic
// rounds to nearest at the *coarsest* operand precision, so a low-precision
// input visibly caps the precision of everything downstream.
//
// Error accounting model: certified quantities carry log2 of a rigorous bound
// on the accumulated *method* error (series tails, Euler-Maclaurin remainders,
// conversion of exact scalars). Floating-point rounding is covered separately
// by rounding_allowance(), a conservative ops-count * magnitude / 2^prec term;
// callers fold both into a single log2 bound. Work at prec + guard bits and
// report to prec to keep the allowance negligible.

#include "padezeta/cyclotomic.hpp"
#include "padezeta/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace padezeta {

class MpFloat {
public:
    explicit MpFloat(long prec = 64);
    MpFloat(const MpFloat& o);
    MpFloat(MpFloat&& o) noexcept;
    MpFloat& operator=(const MpFloat& o);
    MpFloat& operator=(MpFloat&& o) noexcept;
    ~MpFloat();

    static MpFloat from_long(long v, long prec);
    static MpFloat from_bigint(const BigInt& v, long prec);
    static MpFloat from_bigrat(const BigRat& v, long prec);
    static MpFloat from_double(double v, long prec);

    static MpFloat pi(long prec);
    static MpFloat euler_gamma(long prec);
    static MpFloat catalan(long prec);
    static MpFloat zeta_ui(unsigned long s, long prec);
    static MpFloat log2_const(long prec);

    long precision() const { return mpfr_get_prec(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    friend MpFloat operator+(const MpFloat& a, const MpFloat& b);
    friend MpFloat operator-(const MpFloat& a, const MpFloat& b);
    friend MpFloat operator*(const MpFloat& a, const MpFloat& b);
    friend MpFloat operator/(const MpFloat& a, const MpFloat& b);
    MpFloat operator-() const;
    MpFloat& operator+=(const MpFloat& o) { return *this = *this + o; }
    MpFloat& operator-=(const MpFloat& o) { return *this = *this - o; }
    MpFloat& operator*=(const MpFloat& o) { return *this = *this * o; }

    MpFloat abs() const;
    MpFloat sqrt() const;    // requires >= 0
    MpFloat log() const;     // requires > 0
    MpFloat exp() const;
    MpFloat pow_si(long e) const;
    MpFloat mul_2si(long e) const;
    long ceil_long() const; // smallest integer >= value; must fit in long

    int cmp(const MpFloat& o) const { return mpfr_cmp(x_, o.x_); }
    friend bool operator<(const MpFloat& a, const MpFloat& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const MpFloat& a, const MpFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const MpFloat& a, const MpFloat& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const MpFloat& a, const MpFloat& b) { return a.cmp(b) >= 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // log2 |x| as a double; -infinity for zero.
    double log2_abs() const;

    // Fixed-point decimal rendering with the given fractional digit count;
    // deterministic for a given (value, digits) pair.
    std::string decimal(long digits) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

// log2(2^a + 2^b), the bound for a sum of two absolute error bounds.
double log2_add(double a, double b);
// Conservative log2 bound on accumulated rounding error: ops additions of
// magnitude <= 2^log2mag rounded at precision prec.
double rounding_allowance(long prec, double log2mag, long ops);

struct MPComplex {
    MpFloat re, im;

    explicit MPComplex(long prec = 64) : re(prec), im(prec) {}
    MPComplex(MpFloat r, MpFloat i) : re(std::move(r)), im(std::move(i)) {}

    static MPComplex from_cyc(const CycScalar& c, long prec); // coef * e^(2*pi*i*angle)
    static MPComplex root_of_unity(long num, long den, long prec);
    static MPComplex from_bigrat(const BigRat& v, long prec);

    long precision() const { return std::min(re.precision(), im.precision()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend MPComplex operator+(const MPComplex& a, const MPComplex& b);
    friend MPComplex operator-(const MPComplex& a, const MPComplex& b);
    friend MPComplex operator*(const MPComplex& a, const MPComplex& b);
    MPComplex operator-() const;
    MPComplex& operator+=(const MPComplex& o) { return *this = *this + o; }
    MPComplex& operator-=(const MPComplex& o) { return *this = *this - o; }

    MPComplex conj() const;
    MPComplex scaled(const MpFloat& s) const;
    MpFloat abs() const;
    double log2_abs() const;
};

// 1/z (throws InvalidParams at z = 0) and integer powers (binary, any sign).
MPComplex cx_inverse(const MPComplex& z);
MPComplex cx_pow(const MPComplex& z, long e);

// A value together with log2 of a rigorous bound on |value - true|.
struct CertReal {
    MpFloat v;
    double log2err;
};
struct CertComplex {
    MPComplex v;
    double log2err;
};

} // namespace padezeta
