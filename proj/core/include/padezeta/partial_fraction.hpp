#pragma once

// Exact partial-fraction forms on the pole grid t = -N*h, h = 0..hmax, with
// pole orders up to max_order: sum_{j,h} p[j][h] / (t + N*h)^j.

#include "padezeta/poly.hpp"
#include "padezeta/ratfunc.hpp"

#include <vector>

namespace padezeta {

class PartialFractionForm {
public:
    PartialFractionForm() = default; // empty form: no grid, no terms

    // Zero form on the given grid.
    PartialFractionForm(long N, long max_order, long hmax);

    long grid_step() const { return N_; }
    long max_order() const { return maxj_; }
    long hmax() const { return hmax_; }

    const BigRat& coeff(long j, long h) const; // j in 1..max_order, h in 0..hmax
    void add_term(long j, long h, const BigRat& c);

    friend bool operator==(const PartialFractionForm& a, const PartialFractionForm& b) = default;

    // Reassembles sum p[j][h]/(t+N*h)^j into a canonical rational function.
    RatFunc reassemble() const;

    BigRat eval(const BigRat& t) const; // throws PoleAtPoint on the grid

    // Strips top orders whose coefficients are all zero.
    PartialFractionForm trimmed() const;

private:
    long N_ = 0, maxj_ = 0, hmax_ = -1;
    std::vector<std::vector<BigRat>> p_; // p_[j-1][h]
};

// Product of two forms on the same grid (same N, same hmax); the
// default-constructed empty form acts as the multiplicative unit. Cross terms
// are split with the two-pole reduction
//   1/((t+Nh)(t+Nh')^l) = 1/(N^l (h'-h)^l (t+Nh))
//                       - sum_{i=1..l} 1/(N^{l+1-i} (h'-h)^{l+1-i} (t+Nh')^i),
// applied recursively until every term sits on a single pole.
PartialFractionForm pf_multiply(const PartialFractionForm& f, const PartialFractionForm& g);

PartialFractionForm pf_pow(const PartialFractionForm& f, unsigned long e);

// Base factors for the main construction, all with simple poles on the full
// grid h = 0..n/N (closed binomial forms):
//   pf_f0:       (n/N)! / prod_h (t+Nh)
//   pf_g(i):     (t - i*n/N)_{n/N} / prod_h (t+Nh),      1 <= i <= r*N
//   pf_h(i):     (t + 1 + i*n/N)_{n/N} / prod_h (t+Nh),  N <= i <= (r+1)N - 1
PartialFractionForm pf_f0(long n, long N);
PartialFractionForm pf_g(long i, long n, long N);
PartialFractionForm pf_h(long i, long n, long N);

} // namespace padezeta
