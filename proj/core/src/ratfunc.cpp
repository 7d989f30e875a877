#include "padezeta/ratfunc.hpp"

#include "padezeta/errors.hpp"

namespace padezeta {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidParams("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(BigRat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    const BigRat lc = den_.leading();
    if (lc != 1) {
        const BigRat inv = BigRat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

long RatFunc::degree() const {
    if (is_zero()) return 0;
    return num_.degree() - den_.degree();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-reduce before the big multiply to keep intermediate degrees down.
    RatFunc x(a.num_, b.den_), y(b.num_, a.den_);
    RatFunc r;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InvalidParams("RatFunc: division by zero");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::derivative() const {
    if (is_zero()) return RatFunc();
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRat RatFunc::eval(const BigRat& x) const {
    const BigRat d = den_.eval(x);
    if (d == 0) throw PoleAtPoint("RatFunc::eval: pole at " + to_string(x));
    return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

} // namespace padezeta
