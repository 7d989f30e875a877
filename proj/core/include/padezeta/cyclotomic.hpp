#pragma once

// Exact scalars of the form coef * e^{2*pi*i*angle} with coef a positive
// rational and angle a rational in [0, 1) (zero is coef = 0, angle = 0).
// Closed under product, negation, conjugation, and integer powers -- the
// operations needed for character values and root-of-unity weights. Sums are
// not closed here; they are formed downstream in floating point.

#include "padezeta/rational.hpp"

#include <string>

namespace padezeta {

class CycScalar {
public:
    CycScalar() = default; // zero

    static CycScalar zero() { return CycScalar(); }
    static CycScalar one() { return from_rational(BigRat(1)); }
    static CycScalar from_rational(const BigRat& q);
    // e^{2*pi*i*num/den}; den != 0.
    static CycScalar root_of_unity(long num, long den);
    static CycScalar root_of_unity(const BigRat& turns);

    bool is_zero() const { return coef_ == 0; }
    // Magnitude (>= 0) and phase in turns (in [0, 1)).
    const BigRat& coef() const { return coef_; }
    const BigRat& angle() const { return angle_; }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    CycScalar operator-() const;
    friend bool operator==(const CycScalar& a, const CycScalar& b) = default;

    CycScalar conj() const;
    CycScalar pow(long e) const; // e < 0 requires nonzero

    // Real means phase 0 or 1/2 (or zero).
    bool is_real() const;
    BigRat as_rational() const; // requires is_real()

    std::string str() const;

private:
    CycScalar(BigRat coef, BigRat angle);
    void canonicalize();
    BigRat coef_ = BigRat(0);
    BigRat angle_ = BigRat(0);
};

} // namespace padezeta
