#pragma once

// Dense univariate polynomials over Q, coefficients in ascending degree order,
// plus Laurent polynomials (a polynomial body shifted by a valuation).

#include "padezeta/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace padezeta {

class Poly {
public:
    Poly() = default;
    explicit Poly(const BigRat& c0);
    Poly(std::initializer_list<BigRat> ascending);
    static Poly from_coeffs(std::vector<BigRat> ascending);
    static Poly monomial(const BigRat& c, size_t deg);

    // Zero polynomial has empty storage and degree -1.
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigRat& coeff(size_t i) const; // 0 beyond the stored range
    const std::vector<BigRat>& coeffs() const { return c_; }
    const BigRat& leading() const; // requires nonzero

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const BigRat& s) const;
    Poly derivative() const;
    Poly pow(unsigned long e) const;

    BigRat eval(const BigRat& x) const;

    // Composition with z -> z + a (Taylor shift).
    Poly shifted(const BigRat& a) const;
    // z^deg * p(1/z); zero maps to zero.
    Poly reversed() const;
    // p(c*z).
    Poly dilated(const BigRat& c) const;
    // p(z^k), k >= 1.
    Poly inflated(unsigned long k) const;

    // Largest absolute value among the coefficients (0 for the zero poly).
    BigRat height() const;

    // True when every exponent with a nonzero coefficient is a multiple of k.
    bool support_multiple_of(unsigned long k) const;
    // For support_multiple_of(k) polynomials: evaluate p via y = z^k at y = yk.
    BigRat eval_via_power(unsigned long k, const BigRat& yk) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

// Quotient/remainder with deg(r) < deg(b); b nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
// Exact division; throws DivisionFailure when the remainder is nonzero.
Poly divexact(const Poly& a, const Poly& b);
// Exact division by (1 - z); throws DivisionFailure when p(1) != 0.
Poly divexact_one_minus_z(const Poly& p);

// Monic gcd (primitive pseudo-remainder sequence over Z after clearing
// denominators); gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// lcm of the coefficient denominators (1 for the zero polynomial).
BigInt denominator_lcm(const Poly& p);

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long valuation, Poly body);
    static LaurentPoly from_poly(const Poly& p) { return LaurentPoly(0, p); }

    bool is_zero() const { return body_.is_zero(); }
    // Exponent of the lowest nonzero term; 0 for the zero element.
    long valuation() const { return body_.is_zero() ? 0 : val_; }
    long degree() const { return body_.is_zero() ? 0 : val_ + body_.degree(); }
    const Poly& body() const { return body_; }
    BigRat coeff(long e) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    BigRat eval(const BigRat& x) const; // x != 0 when valuation < 0

    std::string str(const std::string& var = "z") const;

private:
    void normalize();
    long val_ = 0;
    Poly body_;
};

} // namespace padezeta
