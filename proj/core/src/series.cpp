#include "padezeta/series.hpp"

#include "padezeta/errors.hpp"

#include <algorithm>

namespace padezeta {

SeriesQ::SeriesQ(long val, std::vector<BigRat> c) : val_(val), c_(std::move(c)) {}

SeriesQ SeriesQ::zero_to(long order) {
    if (order < 0) throw InvalidParams("SeriesQ::zero_to: negative order");
    return SeriesQ(0, std::vector<BigRat>(static_cast<size_t>(order), BigRat(0)));
}

SeriesQ SeriesQ::one(long nterms) {
    SeriesQ s = zero_to(nterms);
    if (nterms > 0) s.c_[0] = 1;
    return s;
}

BigRat SeriesQ::coeff(long e) const {
    if (e < val_) return BigRat(0);
    if (e >= end()) throw InvalidParams("SeriesQ::coeff: exponent beyond known range");
    return c_[static_cast<size_t>(e - val_)];
}

bool SeriesQ::known_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRat& x) { return x == 0; });
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    const long val = std::min(a.val_, b.val_);
    const long e = std::min(a.end(), b.end());
    if (e <= val) return SeriesQ(val, {});
    std::vector<BigRat> c(static_cast<size_t>(e - val), BigRat(0));
    for (long i = val; i < e; ++i)
        c[static_cast<size_t>(i - val)] = (i < a.end() ? a.coeff(i) : BigRat(0)) + (i < b.end() ? b.coeff(i) : BigRat(0));
    return SeriesQ(val, std::move(c));
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) { return a + (-b); }

SeriesQ SeriesQ::operator-() const {
    SeriesQ r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    const long val = a.val_ + b.val_;
    const long e = std::min(a.val_ + b.end(), b.val_ + a.end());
    if (e <= val) return SeriesQ(val, {});
    std::vector<BigRat> c(static_cast<size_t>(e - val), BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        const size_t jmax = std::min(b.c_.size(), static_cast<size_t>(e - val) - i);
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return SeriesQ(val, std::move(c));
}

SeriesQ SeriesQ::scaled(const BigRat& s) const {
    SeriesQ r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

SeriesQ SeriesQ::shifted_exponents(long k) const { return SeriesQ(val_ + k, c_); }

SeriesQ SeriesQ::truncated(long new_end) const {
    if (new_end > end()) throw InvalidParams("SeriesQ::truncated: cannot extend knowledge");
    if (new_end <= val_) return SeriesQ(val_, {});
    return SeriesQ(val_, std::vector<BigRat>(c_.begin(), c_.begin() + static_cast<long>(new_end - val_)));
}

SeriesQ SeriesQ::derivative() const {
    std::vector<BigRat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * BigRat(val_ + static_cast<long>(i));
    SeriesQ r(val_ - 1, std::move(c));
    return r;
}

SeriesQ SeriesQ::inverse() const {
    if (c_.empty() || c_[0] == 0)
        throw InvalidParams("SeriesQ::inverse: lowest stored coefficient must be nonzero");
    const size_t n = c_.size();
    std::vector<BigRat> r(n, BigRat(0));
    const BigRat inv0 = BigRat(1) / c_[0];
    r[0] = inv0;
    for (size_t k = 1; k < n; ++k) {
        BigRat acc(0);
        for (size_t i = 1; i <= k; ++i) acc += c_[i] * r[k - i];
        r[k] = -acc * inv0;
    }
    return SeriesQ(-val_, std::move(r));
}

std::string SeriesQ::str(const std::string& var) const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(c_[i]) + "*" + var + "^" + std::to_string(val_ + static_cast<long>(i));
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(end()) + ")";
}

namespace {

// Splits p = u^k * q with q(0) != 0; returns k and q. p nonzero.
std::pair<long, Poly> strip_valuation(const Poly& p) {
    size_t k = 0;
    while (p.coeff(k) == 0) ++k;
    std::vector<BigRat> c(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
    return {static_cast<long>(k), Poly::from_coeffs(std::move(c))};
}

SeriesQ series_at_zero(const Poly& num, const Poly& den, long nterms) {
    if (num.is_zero()) return SeriesQ::zero_to(nterms);
    auto [vn, n2] = strip_valuation(num);
    auto [vd, d2] = strip_valuation(den);
    const long val = vn - vd;
    std::vector<BigRat> nc(static_cast<size_t>(nterms), BigRat(0));
    for (size_t i = 0; i < nc.size() && i <= static_cast<size_t>(n2.degree()); ++i) nc[i] = n2.coeff(i);
    std::vector<BigRat> dc(static_cast<size_t>(nterms), BigRat(0));
    for (size_t i = 0; i < dc.size() && i <= static_cast<size_t>(d2.degree()); ++i) dc[i] = d2.coeff(i);
    SeriesQ s = SeriesQ(0, std::move(nc)) * SeriesQ(0, std::move(dc)).inverse();
    return s.shifted_exponents(val).truncated(val + nterms);
}

} // namespace

SeriesQ series_at(const RatFunc& f, ExpansionCenter center, long nterms) {
    if (nterms < 0) throw InvalidParams("series_at: negative term count");
    switch (center) {
    case ExpansionCenter::Zero:
        return series_at_zero(f.num(), f.den(), nterms);
    case ExpansionCenter::One:
        return series_at_zero(f.num().shifted(BigRat(1)), f.den().shifted(BigRat(1)), nterms);
    case ExpansionCenter::Infinity: {
        if (f.is_zero()) return SeriesQ::zero_to(nterms);
        // f(1/u) = u^(deg den - deg num) * rev(num)(u)/rev(den)(u).
        const long shift = f.den().degree() - f.num().degree();
        SeriesQ s = series_at_zero(f.num().reversed(), f.den().reversed(), nterms);
        return s.shifted_exponents(shift);
    }
    }
    throw InvalidParams("series_at: unknown center");
}

SeriesQ log1p_series(long nterms) {
    SeriesQ s = SeriesQ::zero_to(nterms);
    std::vector<BigRat> c(static_cast<size_t>(nterms), BigRat(0));
    for (long m = 1; m < nterms; ++m) c[static_cast<size_t>(m)] = make_rat((m % 2 == 1) ? 1 : -1, m);
    return SeriesQ(0, std::move(c));
}

SeriesQ polylog_series(unsigned long j, long nterms) {
    std::vector<BigRat> c(static_cast<size_t>(nterms), BigRat(0));
    for (long t = 1; t < nterms; ++t)
        c[static_cast<size_t>(t)] = BigRat(1) / BigRat(pow_int(BigInt(t), j));
    return SeriesQ(0, std::move(c));
}

} // namespace padezeta
