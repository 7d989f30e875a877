#include "padezeta/cyclotomic.hpp"

#include "padezeta/errors.hpp"

namespace padezeta {

namespace {

// Reduce q into [0, 1).
BigRat mod_one(const BigRat& q) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - BigRat(fl);
}

} // namespace

CycScalar::CycScalar(BigRat coef, BigRat angle)
    : coef_(std::move(coef)), angle_(std::move(angle)) {
    canonicalize();
}

void CycScalar::canonicalize() {
    if (coef_ == 0) {
        angle_ = 0;
        return;
    }
    if (coef_ < 0) {
        coef_ = -coef_;
        angle_ += make_rat(1, 2);
    }
    angle_ = mod_one(angle_);
}

CycScalar CycScalar::from_rational(const BigRat& q) { return CycScalar(q, BigRat(0)); }

CycScalar CycScalar::root_of_unity(long num, long den) {
    if (den == 0) throw InvalidParams("CycScalar::root_of_unity: zero denominator");
    return CycScalar(BigRat(1), make_rat(num, den));
}

CycScalar CycScalar::root_of_unity(const BigRat& turns) { return CycScalar(BigRat(1), turns); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    return CycScalar(a.coef_ * b.coef_, a.angle_ + b.angle_);
}

CycScalar CycScalar::operator-() const { return CycScalar(-coef_, angle_); }

CycScalar CycScalar::conj() const { return CycScalar(coef_, -angle_); }

CycScalar CycScalar::pow(long e) const {
    if (coef_ == 0) {
        if (e <= 0) throw InvalidParams("CycScalar::pow: zero base, nonpositive exponent");
        return CycScalar();
    }
    return CycScalar(pow_rat(coef_, e), angle_ * BigRat(e));
}

bool CycScalar::is_real() const {
    return coef_ == 0 || angle_ == 0 || angle_ == make_rat(1, 2);
}

BigRat CycScalar::as_rational() const {
    if (!is_real()) throw InvalidParams("CycScalar::as_rational: phase is not 0 or 1/2");
    return angle_ == 0 ? coef_ : -coef_;
}

std::string CycScalar::str() const {
    if (coef_ == 0) return "0";
    std::string s = to_string(coef_);
    if (angle_ != 0) s += " * e^(2*pi*i * " + to_string(angle_) + ")";
    return s;
}

} // namespace padezeta
