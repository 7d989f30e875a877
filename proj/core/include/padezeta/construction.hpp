#pragma once

// Well-poised rational kernels F(t) with poles on the arithmetic grid
// t = -N*h, their exact partial-fraction data, and the polynomial data
// (P_j, U, V) of the induced polylogarithm linear forms
//   S0(z)   = U(z) + sum_j P_j(z) (-1)^j Li_j(z)      = sum_{t>n} F(-t) z^t,
//   Sinf(z) = V(z) + sum_j P_j(z) Li_j(1/z)           = sum_{t>=1} F(t) z^-t.

#include "padezeta/cyclotomic.hpp"
#include "padezeta/partial_fraction.hpp"
#include "padezeta/poly.hpp"
#include "padezeta/ratfunc.hpp"

#include <vector>

namespace padezeta {

enum class Z0Kind { One, HalfRoot };

// Parameter pack for one kernel instance.
//   a : pole order (weight), a >= 2
//   r : well-poising depth, 1 <= r and 2*r*N < a (strict)
//   N : grid step / twist modulus, N >= 1
//   n : degree parameter, positive multiple of N
//   p : parity selector in {0, 1}
//   z0: evaluation point kind (1 or exp(i*pi/N))
//   f : N exact unit-circle weights f(1), ..., f(N), extended N-periodically
struct ProblemParams {
    long a = 0;
    long r = 0;
    long N = 0;
    long n = 0;
    int p = 0;
    Z0Kind z0 = Z0Kind::One;
    std::vector<CycScalar> f;

    // Throws InvalidParams unless every constraint above holds and f has
    // exactly N entries.
    void validate() const;

    long m() const { return n / N; }                    // n/N
    long d0() const { return a * (m() + 1) - 2 * r * n; } // minus the degree of F
    long i0() const { return z0 == Z0Kind::One ? 2 : 1; }

    // Period of t -> f(t) * z0^t: N when z0 = 1, 2N when z0 = exp(i*pi/N).
    long period() const { return z0 == Z0Kind::One ? N : 2 * N; }

    CycScalar z0_scalar() const;        // z0 as an exact unit-circle scalar
    BigRat z0_pow_N() const;            // z0^N = +1 or -1
    CycScalar f_at(long t) const;       // f(t), any integer t (period N)
    CycScalar c_at(long t) const;       // f(t) * z0^t (period period())
};

// Kernel plus all exact data derived from its partial fractions.
struct Construction {
    ProblemParams params;
    RatFunc F;                 // the kernel itself, reduced
    PartialFractionForm pjh;   // F = sum_{j,h} p[j][h]/(t+N*h)^j
    std::vector<Poly> P;       // P[j-1] = P_j(z) = sum_h p[j][h] z^(N*h), j = 1..a
    Poly U, V;                 // polynomial parts of S0 and Sinf
    long d0 = 0;               // = -deg F = a(n/N+1) - 2rn
    bool d0_below_n_plus_a = false; // saturation flag: d0 < n + a
};

// F(t) = (n/N)!^(a-2rN) (t-rn)_rn (t+n+1)_rn / prod_{h=0}^{n/N} (t+Nh)^a.
RatFunc build_F(const ProblemParams& pp);

// Exact partial fractions of F via the closed-form factor expansions
// (product of the a grid-pole base kernels, combined pairwise exactly).
PartialFractionForm expand_F(const ProblemParams& pp);

// Independent route: p[j][h] = (d/dt)^(a-j) [F(t)(t+Nh)^a] / (a-j)! at t = -Nh.
PartialFractionForm expand_F_oracle(const RatFunc& F, const ProblemParams& pp);

std::vector<Poly> build_P(const PartialFractionForm& pf, const ProblemParams& pp);
Poly build_U(const PartialFractionForm& pf, const ProblemParams& pp);
Poly build_V(const PartialFractionForm& pf, const ProblemParams& pp);

// Full pipeline: validate, build F, expand (and cross-check the reassembly),
// build P/U/V, record d0 and the saturation flag.
Construction build_construction(const ProblemParams& pp);

// Taylor coefficient of z^t in S0(z) = sum_{t>n} F(-t) z^t; requires t >= n+1.
BigRat s0_coefficient(const Construction& c, long t);
// Coefficient of z^-t in Sinf(z) = sum_{t>=1} F(t) z^-t; requires t >= 1.
BigRat sinf_coefficient(const Construction& c, long t);

// Expands sum_j P_j(z) (-1)^(j-1) log(z)^(j-1) / (j-1)! around z = 1 and
// checks that the coefficients of (z-1)^0 .. (z-1)^(depth-1) all vanish.
// depth = 0 is an empty check and returns true.
bool verify_pade_at_one(const Construction& c, long depth);

// Formal power-series checks of the two linear-form identities, compared
// coefficient-by-coefficient through z^terms (resp. z^-terms).
bool check_s0_series_identity(const Construction& c, long terms);
bool check_sinf_series_identity(const Construction& c, long terms);

// Certified tail constant: |F(t)| <= (2n+1) * An * (2n/|t|)^d0 for |t| >= 2n+1,
// with An = max(1, (1/2) sum_{j,h} |p[j][h]| n^-j).
BigRat tail_constant_An(const PartialFractionForm& pf, long n);

} // namespace padezeta
