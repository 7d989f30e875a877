#pragma once

// Quantitative side: the growth rates alpha (linear forms) and beta
// (coefficients), exact column selection certificates for the integer table,
// the finite-instance check of the linear-independence criterion's
// hypotheses, and measured growth slopes on concrete instances.

#include "padezeta/derivation.hpp"
#include "padezeta/mpfloat.hpp"

#include <string>
#include <vector>

namespace padezeta {

struct GrowthRates {
    MpFloat alpha; // |Lambda_1| ~ alpha^n
    MpFloat beta;  // max |s[k][i]| ~ beta^n
    MpFloat tau;   // -log(alpha)/log(beta)
};

GrowthRates alpha_beta(long a, long r, long N, long prec);

// Greedy exact-rank selection: scans k = 1..K and keeps the columns that
// enlarge the rank of the rows i0..a+N until it reaches a+N+1-i0; returns the
// kept k's (1-based). RankDeficient when the table runs out first.
std::vector<long> select_invertible_columns(const LinearFormTable& tab);

// Exact determinant of the square minor on rows i0..a+N and the given columns.
BigInt selected_minor_det(const LinearFormTable& tab, const std::vector<long>& ks);

struct SiegelInstance {
    long n = 0;
    std::vector<std::vector<BigInt>> mat; // square integer coefficient matrix
    MpFloat Qn;                            // growth scale, e.g. beta^n
    MpFloat residual;                      // max_j |sum_i l_ij theta_i|
};

struct SiegelCertificate {
    MpFloat tau;
    long dimension_bound = 0; // ceil(tau) + 1
    bool asymptotic = true;   // finite instances checked; the conclusion is a
                              // statement about the n -> infinity regime
    bool real_coefficients_only = true; // the criterion is stated over R
    std::string notes;
};

// Checks, for every instance: det(mat) != 0 exactly, max|entry| <= Qn^(1+eps),
// residual <= Qn^(-tau+eps). Throws HypothesisViolated on the first failure.
SiegelCertificate siegel_bound(const std::vector<SiegelInstance>& instances, const MpFloat& tau,
                               double eps);

struct RateMeasurement {
    long n = 0;
    double slope_s = 0;      // (1/n) ln max_k,i |s[k][i]|
    double slope_lambda = 0; // (1/n) ln |delta_n Lambda_1|
};

// Builds the instance, derives rows to min(d0-1, kcap), and measures both
// growth slopes (natural logarithm).
RateMeasurement measure_rates(const ProblemParams& pp, long kcap, long prec);

} // namespace padezeta
