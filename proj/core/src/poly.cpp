#include "padezeta/poly.hpp"

#include "padezeta/errors.hpp"

#include <algorithm>

namespace padezeta {

namespace {
const BigRat kZero(0);
}

Poly::Poly(const BigRat& c0) {
    if (c0 != 0) c_.push_back(c0);
}

Poly::Poly(std::initializer_list<BigRat> ascending) : c_(ascending) { trim(); }

Poly Poly::from_coeffs(std::vector<BigRat> ascending) {
    Poly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(const BigRat& c, size_t deg) {
    Poly p;
    if (c != 0) {
        p.c_.assign(deg + 1, BigRat(0));
        p.c_[deg] = c;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& Poly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigRat& Poly::leading() const {
    if (is_zero()) throw InvalidParams("Poly::leading on zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::scaled(const BigRat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    Poly r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(BigRat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::shifted(const BigRat& a) const {
    // Horner on p(u + a) in the polynomial ring: r <- r*(z + a) + c_i.
    Poly r;
    const Poly lin{a, BigRat(1)};
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

Poly Poly::dilated(const BigRat& c) const {
    Poly r = *this;
    BigRat f(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= f;
        f *= c;
    }
    r.trim();
    return r;
}

Poly Poly::inflated(unsigned long k) const {
    if (k == 0) throw InvalidParams("Poly::inflated: k must be >= 1");
    if (is_zero() || k == 1) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) * k + 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

BigRat Poly::height() const {
    BigRat h(0);
    for (const auto& x : c_) {
        BigRat a = abs(x);
        if (a > h) h = a;
    }
    return h;
}

bool Poly::support_multiple_of(unsigned long k) const {
    if (k == 0) throw InvalidParams("support_multiple_of: k must be >= 1");
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % k != 0) return false;
    return true;
}

BigRat Poly::eval_via_power(unsigned long k, const BigRat& yk) const {
    if (!support_multiple_of(k))
        throw InvalidParams("eval_via_power: support is not contained in multiples of " + std::to_string(k));
    BigRat r(0), f(1);
    for (size_t i = 0; i < c_.size(); i += k) {
        if (c_[i] != 0) r += c_[i] * f;
        f *= yk;
    }
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(c_[i]);
        if (i >= 1) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidParams("divrem: division by zero polynomial");
    Poly q, r = a;
    const long db = b.degree();
    const BigRat& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const long k = r.degree() - db;
        const BigRat c = r.leading() / lb;
        q += Poly::monomial(c, static_cast<size_t>(k));
        r -= b * Poly::monomial(c, static_cast<size_t>(k));
    }
    return {q, r};
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw DivisionFailure("divexact: nonzero remainder");
    return q;
}

Poly divexact_one_minus_z(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.eval(BigRat(1)) != 0)
        throw DivisionFailure("divexact_one_minus_z: polynomial does not vanish at z = 1");
    // p = (1 - z) q  =>  q_i = -(p_{i+1} + q_{i+1}), accumulated from the top.
    const size_t n = static_cast<size_t>(p.degree());
    std::vector<BigRat> q(n, BigRat(0));
    BigRat acc(0);
    for (size_t i = n; i-- > 0;) {
        acc += p.coeff(i + 1);
        q[i] = -acc;
    }
    return Poly::from_coeffs(std::move(q));
}

namespace {

using ZVec = std::vector<BigInt>;

ZVec to_int_primitive(const Poly& p) {
    BigInt l = denominator_lcm(p);
    ZVec v(p.coeffs().size());
    BigInt content(0);
    for (size_t i = 0; i < v.size(); ++i) {
        BigRat s = p.coeffs()[i] * BigRat(l);
        v[i] = s.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    return v;
}

void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZVec& v) {
    BigInt content(0);
    for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
ZVec prem(ZVec a, const ZVec& b) {
    const size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (a.size() > db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        const size_t shift = a.size() - 1 - db;
        const BigInt head = a.back();
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i <= db; ++i) a[shift + i] -= head * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& nz = a.is_zero() ? b : a;
        return nz.scaled(BigRat(1) / nz.leading());
    }
    ZVec u = to_int_primitive(a), v = to_int_primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZVec r = prem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<BigRat> q(u.size());
    for (size_t i = 0; i < u.size(); ++i) q[i] = BigRat(u[i]) / BigRat(u.back());
    return Poly::from_coeffs(std::move(q));
}

BigInt denominator_lcm(const Poly& p) {
    BigInt l(1);
    for (const auto& x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

LaurentPoly::LaurentPoly(long valuation, Poly body) : val_(valuation), body_(std::move(body)) {
    normalize();
}

void LaurentPoly::normalize() {
    if (body_.is_zero()) {
        val_ = 0;
        return;
    }
    size_t low = 0;
    while (body_.coeff(low) == 0) ++low;
    if (low > 0) {
        std::vector<BigRat> c(body_.coeffs().begin() + static_cast<long>(low), body_.coeffs().end());
        body_ = Poly::from_coeffs(std::move(c));
        val_ += static_cast<long>(low);
    }
}

BigRat LaurentPoly::coeff(long e) const {
    if (body_.is_zero() || e < val_) return BigRat(0);
    return body_.coeff(static_cast<size_t>(e - val_));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long v = std::min(a.val_, b.val_);
    const long top = std::max(a.degree(), b.degree());
    std::vector<BigRat> c(static_cast<size_t>(top - v + 1), BigRat(0));
    for (long e = v; e <= top; ++e) c[static_cast<size_t>(e - v)] = a.coeff(e) + b.coeff(e);
    return LaurentPoly(v, Poly::from_coeffs(std::move(c)));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    return LaurentPoly(a.val_ + b.val_, a.body_ * b.body_);
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(val_, -body_); }

BigRat LaurentPoly::eval(const BigRat& x) const {
    if (is_zero()) return BigRat(0);
    if (x == 0 && val_ < 0) throw PoleAtPoint("LaurentPoly::eval at 0 with negative valuation");
    return body_.eval(x) * pow_rat(x, val_);
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (val_ == 0) return body_.str(var);
    return "(" + body_.str(var) + ")*" + var + "^" + std::to_string(val_);
}

} // namespace padezeta
