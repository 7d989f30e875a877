#include "padezeta/criterion.hpp"

#include "padezeta/diffsys.hpp"
#include "padezeta/errors.hpp"
#include "padezeta/lambda.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

namespace padezeta {

namespace {

// ln of a positive rational a/b evaluated in MPFR.
MpFloat ln_of_long(long v, long prec) {
    if (v <= 0) throw InvalidParams("ln_of_long: argument must be positive");
    return MpFloat::from_long(v, prec).log();
}

// Exact determinant of a square BigRat matrix (Gaussian elimination, pivot
// swaps tracked by sign).
BigRat det_exact(std::vector<std::vector<BigRat>> m) {
    const std::size_t dim = m.size();
    BigRat det(1);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = dim;
        for (std::size_t row = col; row < dim; ++row) {
            if (m[row][col] != 0) {
                piv = row;
                break;
            }
        }
        if (piv == dim) return BigRat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const BigRat inv = BigRat(1) / m[col][col];
        for (std::size_t row = col + 1; row < dim; ++row) {
            if (m[row][col] == 0) continue;
            const BigRat f = m[row][col] * inv;
            for (std::size_t j = col; j < dim; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

std::vector<std::vector<BigRat>> column_submatrix(const LinearFormTable& tab,
                                                  const std::vector<long>& ks) {
    const long rows = tab.a + tab.N + 1 - tab.i0;
    std::vector<std::vector<BigRat>> m(static_cast<std::size_t>(rows));
    for (long ri = 0; ri < rows; ++ri) {
        const long i = tab.i0 + ri;
        auto& row = m[static_cast<std::size_t>(ri)];
        row.reserve(ks.size());
        for (long k : ks) {
            row.emplace_back(tab.s[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)]);
        }
    }
    return m;
}

} // namespace

GrowthRates alpha_beta(long a, long r, long N, long prec) {
    if (a < 2 || r < 1 || N < 1) throw InvalidParams("alpha_beta: need a >= 2, r >= 1, N >= 1");
    const long wp = prec + 32;
    const MpFloat aN = MpFloat::from_long(a, wp) / MpFloat::from_long(N, wp);
    const MpFloat rr = MpFloat::from_long(r, wp);
    const MpFloat ln2 = MpFloat::log2_const(wp);
    const MpFloat ln4 = ln2 + ln2;

    // ln(alpha) = a + (a/N - r) ln 4 + (2r+2) ln(N+1) + (-a/N + 4r + 2) ln r
    MpFloat ln_alpha = MpFloat::from_long(a, wp);
    ln_alpha = ln_alpha + (aN - rr) * ln4;
    ln_alpha = ln_alpha + MpFloat::from_long(2 * r + 2, wp) * ln_of_long(N + 1, wp);
    ln_alpha = ln_alpha + (MpFloat::from_long(4 * r + 2, wp) - aN) * ln_of_long(r, wp);

    // ln(beta) = (a/N)(ln 2 + N) + (2r+2) ln(rN+1)
    MpFloat ln_beta = aN * (ln2 + MpFloat::from_long(N, wp));
    ln_beta = ln_beta + MpFloat::from_long(2 * r + 2, wp) * ln_of_long(r * N + 1, wp);

    GrowthRates g{ln_alpha.exp(), ln_beta.exp(), -(ln_alpha / ln_beta)};
    return g;
}

std::vector<long> select_invertible_columns(const LinearFormTable& tab) {
    const long target = tab.a + tab.N + 1 - tab.i0;
    std::vector<long> kept;
    long rank = 0;
    for (long k = 1; k <= tab.K && rank < target; ++k) {
        std::vector<long> trial = kept;
        trial.push_back(k);
        const long r2 = rank_of(column_submatrix(tab, trial));
        if (r2 > rank) {
            kept = std::move(trial);
            rank = r2;
        }
    }
    if (rank < target) {
        std::ostringstream os;
        os << "select_invertible_columns: rank " << rank << " < " << target << " using k <= "
           << tab.K;
        throw RankDeficient(os.str());
    }
    return kept;
}

BigInt selected_minor_det(const LinearFormTable& tab, const std::vector<long>& ks) {
    const long rows = tab.a + tab.N + 1 - tab.i0;
    if (static_cast<long>(ks.size()) != rows) {
        throw InvalidParams("selected_minor_det: need exactly a+N+1-i0 columns");
    }
    const BigRat d = det_exact(column_submatrix(tab, ks));
    if (!is_integer(d)) throw IntegralityFailure("selected_minor_det: non-integer determinant");
    return to_integer(d);
}

SiegelCertificate siegel_bound(const std::vector<SiegelInstance>& instances, const MpFloat& tau,
                               double eps) {
    if (instances.empty()) throw InvalidParams("siegel_bound: no instances");
    const long prec = tau.precision();
    for (const auto& inst : instances) {
        if (inst.mat.empty()) throw InvalidParams("siegel_bound: empty matrix");
        const std::size_t dim = inst.mat.size();
        std::vector<std::vector<BigRat>> m(dim);
        BigInt maxabs(0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (inst.mat[i].size() != dim) throw InvalidParams("siegel_bound: matrix not square");
            m[i].reserve(dim);
            for (const BigInt& v : inst.mat[i]) {
                m[i].emplace_back(v);
                BigInt av = abs(v);
                if (av > maxabs) maxabs = av;
            }
        }
        if (det_exact(m) == 0) {
            std::ostringstream os;
            os << "siegel_bound: singular coefficient matrix at n=" << inst.n;
            throw HypothesisViolated(os.str());
        }
        if (inst.Qn.cmp(MpFloat::from_long(2, prec)) < 0) {
            std::ostringstream os;
            os << "siegel_bound: Qn < 2 at n=" << inst.n;
            throw HypothesisViolated(os.str());
        }
        const MpFloat ln_qn = inst.Qn.log();
        // max |entry| <= Qn^(1+eps)  <=>  ln max|entry| <= (1+eps) ln Qn
        if (maxabs > 1) {
            const MpFloat ln_max = MpFloat::from_bigint(maxabs, prec).log();
            const MpFloat bound = ln_qn * (MpFloat::from_long(1, prec) +
                                           MpFloat::from_double(eps, prec));
            if (ln_max.cmp(bound) > 0) {
                std::ostringstream os;
                os << "siegel_bound: entry size exceeds Qn^(1+eps) at n=" << inst.n;
                throw HypothesisViolated(os.str());
            }
        }
        // residual <= Qn^(-tau+eps)
        if (!inst.residual.is_zero()) {
            if (inst.residual.cmp(MpFloat::from_long(0, prec)) < 0) {
                throw InvalidParams("siegel_bound: residual must be >= 0");
            }
            const MpFloat ln_res = inst.residual.log();
            const MpFloat bound = ln_qn * (MpFloat::from_double(eps, prec) - tau);
            if (ln_res.cmp(bound) > 0) {
                std::ostringstream os;
                os << "siegel_bound: residual exceeds Qn^(-tau+eps) at n=" << inst.n;
                throw HypothesisViolated(os.str());
            }
        }
    }

    SiegelCertificate cert;
    cert.tau = tau;
    cert.dimension_bound = tau.ceil_long() + 1;
    cert.asymptotic = true;
    cert.real_coefficients_only = true;
    std::ostringstream os;
    os << "checked " << instances.size()
       << " finite instance(s); hypotheses hold with eps=" << eps
       << "; the dimension conclusion is asymptotic and stated for real coefficient vectors";
    cert.notes = os.str();
    return cert;
}

RateMeasurement measure_rates(const ProblemParams& pp, long kcap, long prec) {
    const Construction c = build_construction(pp);
    long kmax = c.d0 - 1;
    if (kcap >= 1 && kcap < kmax) kmax = kcap;
    if (kmax < 1) throw InvalidParams("measure_rates: d0 too small");
    const DerivedForms df = derive(c, kmax);
    const LinearFormTable tab = s_table(df);

    BigInt maxabs(0);
    for (const auto& row : tab.s) {
        for (const BigInt& v : row) {
            BigInt av = abs(v);
            if (av > maxabs) maxabs = av;
        }
    }
    RateMeasurement rm;
    rm.n = pp.n;
    const double ln2 = std::log(2.0);
    rm.slope_s = maxabs == 0
                     ? -1e300
                     : MpFloat::from_bigint(maxabs, prec).log2_abs() * ln2 / static_cast<double>(pp.n);

    const CertComplex lam = lambda_direct(c, 1, prec);
    const MpFloat mag = lam.v.abs() * MpFloat::from_bigint(tab.delta, prec);
    rm.slope_lambda =
        mag.is_zero() ? -1e300 : mag.log2_abs() * ln2 / static_cast<double>(pp.n);
    return rm;
}

} // namespace padezeta
