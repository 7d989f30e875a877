#pragma once

// Truncated Laurent series over Q with exact coefficients: coefficients for
// exponents val .. val+len-1, everything above is unknown (truncated away).

#include "padezeta/poly.hpp"
#include "padezeta/ratfunc.hpp"

#include <string>
#include <vector>

namespace padezeta {

class SeriesQ {
public:
    SeriesQ() = default;
    // Coefficients for exponents val, val+1, ..., val+c.size()-1.
    SeriesQ(long val, std::vector<BigRat> c);

    static SeriesQ zero_to(long order); // zero series known through exponent order-1
    static SeriesQ one(long nterms);

    long valuation() const { return val_; }
    long end() const { return val_ + static_cast<long>(c_.size()); } // first unknown exponent
    BigRat coeff(long e) const;
    const std::vector<BigRat>& coeffs() const { return c_; }
    bool known_zero() const; // all stored coefficients vanish

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    SeriesQ operator-() const;

    SeriesQ scaled(const BigRat& s) const;
    SeriesQ shifted_exponents(long k) const; // multiply by u^k
    SeriesQ truncated(long new_end) const;
    SeriesQ derivative() const;

    // 1/this; requires the lowest stored coefficient to be nonzero.
    SeriesQ inverse() const;

    std::string str(const std::string& var = "u") const;

private:
    long val_ = 0;
    std::vector<BigRat> c_;
};

enum class ExpansionCenter { Zero, One, Infinity };

// Laurent expansion of f at the center, with nterms coefficients starting at
// the valuation. At One the variable is u = z - 1; at Infinity it is u = 1/z.
SeriesQ series_at(const RatFunc& f, ExpansionCenter center, long nterms);

// log(1+u) = u - u^2/2 + u^3/3 - ... truncated to exponents < nterms.
SeriesQ log1p_series(long nterms);

// Truncated polylogarithm sum_{t>=1} z^t / t^j through exponent nterms-1.
SeriesQ polylog_series(unsigned long j, long nterms);

} // namespace padezeta
