#pragma once

// Derivative tower of the polylogarithm linear forms. Writing
//   S0^(k-1), Sinf^(k-1) in terms of Li_j, Li_j(1/z) again yields polynomial
// coefficient families P_{k,j}, U_k, V_k obeying first-order recurrences in k;
// the rescaled forms tildeX_k = z^(k-1) X_k stay polynomial of degree <= n for
// k <= d0 - 1. Evaluating at the unit-circle point z0 and clearing
// denominators with delta_n produces an integer table s[k][i], the
// coefficients of the linear forms delta_n * Lambda_k in the zeta-like values.

#include "padezeta/construction.hpp"
#include "padezeta/poly.hpp"

#include <vector>

namespace padezeta {

struct DerivedForms {
    Construction c;
    long K = 0;                          // rows 1..K
    std::vector<std::vector<Poly>> tP;   // tP[k-1][j-1] = z^(k-1) P_{k,j}, j = 1..a
    std::vector<Poly> tU, tV;            // tU[k-1] = z^(k-1) U_k, tV likewise
};

// Default row count: min(d0 - 1, a + N + 32).
long default_row_count(const Construction& c);

// Runs the recurrences
//   tP_{k,j} = z tP'_{k-1,j} - (k-2) tP_{k-1,j} - tP_{k-1,j+1}   (tP_{k-1,a+1} = 0)
//   Q_{k-1}  = tP_{k-1,1} / (1 - z)                               (exact)
//   tU_k     = z tU'_{k-1} - (k-2) tU_{k-1} - z Q_{k-1}
//   tV_k     = z tV'_{k-1} - (k-2) tV_{k-1} + Q_{k-1}
// for k = 2..K. Requires 1 <= K <= d0 - 1; the exact division is guaranteed
// there and throws DivisionFailure otherwise (an upstream bug if it fires).
DerivedForms derive(const Construction& c, long K = -1);

// The tP rows alone satisfy a division-free recurrence valid for every k >= 1.
std::vector<std::vector<Poly>> derive_p_only(const Construction& c, long K);

// Splits t(z) = sum_{lambda=0}^{N-1} z^lambda * out[lambda](z) with every
// out[lambda] supported on exponents in N*Z (the z^lambda factor is removed,
// the remaining exponents are kept, not compressed).
std::vector<Poly> residue_split(const Poly& t, long N);

// Max over j of the coefficient height of tP[0][j] (the k = 1 row).
BigRat base_height(const DerivedForms& df);
// Checks H(tP[k][j]) <= (n+1)_(k-1) * base_height for all computed rows.
bool check_height_bounds(const DerivedForms& df);

struct LinearFormTable {
    long a = 0, N = 0, K = 0, d0 = 0, i0 = 0;
    BigInt delta;                        // delta_n = (N d_n)^a N^(a n / N)
    std::vector<std::vector<BigInt>> s;  // s[k-1][i-1], i = 1..a+N
};

// delta_n for the given parameters (d_n = lcm(1..n)).
BigInt delta_n(const ProblemParams& pp);

// Integer linear-form table:
//   s[k][i]       = delta_n * tP_{k,i}(z0)                      (1 <= i <= a)
//   s[k][a+1+l]   = delta_n * (U_{k,l}(z0) + (-1)^p sigma_l V_{k,N-l}(z0)),
// where U_{k,l}, V_{k,l} are the residue splits of tU_k, tV_k, indices mod N,
// sigma_0 = 1 and sigma_l = z0^N for 1 <= l <= N-1. Every entry must come out
// an exact integer; IntegralityFailure otherwise.
LinearFormTable s_table(const DerivedForms& df);

} // namespace padezeta
