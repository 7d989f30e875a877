#pragma once

// Rational functions over Q in canonical form: numerator and monic denominator
// with gcd 1. Equality of canonical forms is structural equality.

#include "padezeta/poly.hpp"

#include <string>

namespace padezeta {

class RatFunc {
public:
    RatFunc() : num_(), den_(BigRat(1)) {}
    RatFunc(Poly num, Poly den); // reduces; den nonzero
    explicit RatFunc(const Poly& p) : num_(p), den_(BigRat(1)) {}
    explicit RatFunc(const BigRat& c) : num_(c), den_(BigRat(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // deg num - deg den; by convention 0 for the zero function.
    long degree() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    RatFunc derivative() const;

    // Throws PoleAtPoint when den(x) = 0.
    BigRat eval(const BigRat& x) const;
    bool has_pole_at(const BigRat& x) const { return den_.eval(x) == 0; }

    std::string str(const std::string& var = "z") const;

private:
    void reduce();
    Poly num_, den_;
};

} // namespace padezeta
