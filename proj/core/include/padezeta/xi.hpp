#pragma once

// The target numbers of the linear forms: xi_j = sum_{t>=1} f(t) z0^t / t^j,
// assembled from Hurwitz zeta values over residue classes mod the period of
// t -> f(t) z0^t, plus the primed combination that the integer table multiplies:
//   xi'_j       = 2 (-1)^p xi_j  when j = p (mod 2), else 0   (1 <= j <= a)
//   xi'_(a+1+l) = z0^l f(l)                                   (0 <= l <= N-1).

#include "padezeta/construction.hpp"
#include "padezeta/mpfloat.hpp"

#include <vector>

namespace padezeta {

struct XiVector {
    long a = 0, N = 0, period = 0, i0 = 0;
    std::vector<CertComplex> xi;       // xi[j-1], j = 1..a; xi[0] fixed to 0 when z0 = 1
    std::vector<CertComplex> xi_prime; // xi_prime[i-1], i = 1..a+N
};

// Inversion weights mu_l = (1/N) sum_{la=1}^N f(la) w^(-l*la), w = e^(2 pi i/N),
// l = 1..N; they satisfy sum_l mu_l w^(n l) = f(n).
std::vector<MPComplex> mu_weights(const ProblemParams& pp, long prec);

// xi_1 = -(1/P) sum_{rho=1}^P c_rho psi(rho/P); only defined when the period-P
// weights c_rho = f(rho) z0^rho sum to zero, which is structural for
// z0 = exp(i pi/N); throws DivergentXi1 for z0 = 1.
CertComplex xi1_value(const ProblemParams& pp, long prec);

// Full vector; xi_j for j >= 2 via Hurwitz zeta, xi_1 as above (or pinned to
// zero for z0 = 1, where index 1 is excluded from the linear forms anyway).
XiVector xi_values(const ProblemParams& pp, long prec);

} // namespace padezeta
