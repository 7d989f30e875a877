// Acceptance battery for the linear-forms engine. Eleven behaviors, each
// printed as exactly one PASS/FAIL line with its runtime; the process exits
// nonzero if any line fails. Tolerances are pinned here in code: exact checks
// use integer/rational equality, numeric identities use 2^-64 relative to the
// scaled form at 256-bit working precision.

#include "padezeta/cache.hpp"
#include "padezeta/characters.hpp"
#include "padezeta/construction.hpp"
#include "padezeta/criterion.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/diffsys.hpp"
#include "padezeta/errors.hpp"
#include "padezeta/io.hpp"
#include "padezeta/lambda.hpp"
#include "padezeta/mpfloat.hpp"
#include "padezeta/xi.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace padezeta;

namespace {

ProblemParams plain(long a, long r, long N, long n) {
    ProblemParams pp;
    pp.a = a;
    pp.r = r;
    pp.N = N;
    pp.n = n;
    pp.p = 1;
    pp.z0 = Z0Kind::One;
    pp.f.assign(static_cast<size_t>(N), CycScalar::one());
    pp.validate();
    return pp;
}

ProblemParams catalan_instance(long n) {
    for (const auto& chi : enumerate_characters(4))
        if (!chi.is_principal()) return halfroot_reduction(chi, 5, 1, n, 0);
    throw std::runtime_error("no non-principal character mod 4");
}

std::vector<ProblemParams> main_grid() {
    std::vector<ProblemParams> grid;
    for (long n = 1; n <= 10; ++n) grid.push_back(plain(3, 1, 1, n));
    grid.push_back(plain(5, 1, 1, 8));
    grid.push_back(plain(5, 2, 1, 8));
    grid.push_back(plain(5, 1, 2, 8));
    return grid;
}

// 1. Every table entry on the grid is an exact integer; the polynomial block
// is recomputed independently from the derivative tower and compared.
bool table_integrality() {
    for (const ProblemParams& pp : main_grid()) {
        const Construction c = build_construction(pp);
        const long kmax = std::min(c.d0 - 1, 12L);
        if (kmax < 1) continue;
        const DerivedForms df = derive(c, kmax);
        const LinearFormTable tab = s_table(df); // throws on any non-integer
        if (tab.K != kmax) return false;
        const BigInt delta = delta_n(pp);
        const BigRat zN = pp.z0_pow_N();
        for (long k = 1; k <= kmax; ++k) {
            for (long i = 1; i <= pp.a; ++i) {
                const BigRat v = BigRat(delta) *
                    df.tP[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)]
                        .eval_via_power(pp.N, zN);
                if (!is_integer(v)) return false;
                if (to_integer(v) !=
                    tab.s[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)])
                    return false;
            }
        }
    }
    return true;
}

// 2. The closed-form expansion of the kernel equals the series-extraction
// oracle, coefficient by coefficient.
bool expansion_oracle_equivalence() {
    for (const auto& [a, r, N, n] :
         std::vector<std::tuple<long, long, long, long>>{{3, 1, 1, 1}, {3, 1, 1, 2}, {4, 1, 1, 2}}) {
        const ProblemParams pp = plain(a, r, N, n);
        const RatFunc F = build_F(pp);
        if (!(expand_F(pp) == expand_F_oracle(F, pp))) return false;
    }
    return true;
}

// 3. Vanishing orders at 0 and infinity, kernel zeros, and the order of
// contact at the point 1 -- all exact, across the grid.
bool vanishing_orders() {
    for (const ProblemParams& pp : main_grid()) {
        const Construction c = build_construction(pp);
        for (long t = pp.n + 1; t <= (pp.r + 1) * pp.n; ++t)
            if (s0_coefficient(c, t) != 0) return false;
        for (long t = 1; t <= pp.r * pp.n; ++t)
            if (c.F.eval(BigRat(t)) != 0) return false;
        const long depth = std::min(c.d0 - 1, 20L);
        if (depth >= 1 && !verify_pade_at_one(c, depth)) return false;
    }
    return true;
}

// 4. The derivative tower reaches k = d0-1 with every division exact and the
// first tower polynomial vanishing at 1 at every level.
bool tower_regular_at_one() {
    for (const ProblemParams& pp : main_grid()) {
        const Construction c = build_construction(pp);
        if (c.d0 - 1 < 1) continue;
        DerivedForms df;
        try {
            df = derive(c, c.d0 - 1);
        } catch (const DivisionFailure&) {
            return false;
        }
        for (const auto& row : df.tP)
            if (row[0].eval(BigRat(1)) != 0) return false;
    }
    return true;
}

// 5. The recurrence tower and the adjoint iterates of the system matrix agree
// exactly (P block to k = 8, the U/V block as far as the tower reaches).
bool tower_matches_adjoint() {
    for (const long n : {4L, 6L}) {
        const Construction c = build_construction(plain(3, 1, 1, n));
        const long kfull = std::min<long>(8, c.d0 - 1);
        const auto its = apply_adjoint(build_A_br(3), initial_vector(c), 8);
        const DerivedForms df = derive(c, kfull);
        const auto tp = derive_p_only(c, 8);
        for (long k = 1; k <= 8; ++k) {
            const RatFunc zk(Poly::monomial(BigRat(1), static_cast<size_t>(k - 1)));
            const auto& col = its[static_cast<size_t>(k - 1)];
            for (long j = 1; j <= 3; ++j)
                if (!(col[static_cast<size_t>(j - 1)] * zk ==
                      RatFunc(tp[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)])))
                    return false;
            if (k <= kfull) {
                if (!(col[3] * zk == RatFunc(df.tU[static_cast<size_t>(k - 1)]))) return false;
                if (!(col[4] * zk == RatFunc(df.tV[static_cast<size_t>(k - 1)]))) return false;
            }
        }
    }
    return true;
}

// 6. The iterate matrix is nonsingular as a matrix over Q(z), and at the
// point 1 its rank is exactly a+1 with an identically zero first row.
bool system_rank_certificates() {
    const Construction c = build_construction(plain(3, 1, 1, 4));
    if (!det_M_nonzero(c)) return false;
    const long kmax = c.d0 - 1;
    const auto m = iterate_matrix_at(c, BigRat(1), kmax);
    for (const BigRat& v : m[0])
        if (v != 0) return false;
    return rank_of(m) == 4 && rank_at_point(c, BigRat(1), kmax) == 4;
}

// 7. The scaled linear form evaluated directly (certified complex summation)
// equals the integer-table contraction against the target values, within
// 2^-64 of the scaled magnitude, at 256 bits.
bool dual_route_identity() {
    const long prec = 256;
    auto check = [&](const ProblemParams& pp, long kmax) {
        const Construction c = build_construction(pp);
        const LinearFormTable tab = s_table(derive(c));
        const XiVector xv = xi_values(pp, prec);
        for (long k = 1; k <= kmax; ++k) {
            const LambdaComparison cmp = lambda_k(c, tab, xv, k, prec);
            if (!(cmp.residual_scaled < cmp.scale.mul_2si(-64))) return false;
        }
        return true;
    };
    for (const long n : {4L, 8L})
        if (!check(plain(3, 1, 1, n), 5)) return false;
    for (const long n : {4L, 8L})
        if (!check(catalan_instance(n), 3)) return false;
    return true;
}

// 8. Greedy column selection reaches full rank within the available rows and
// its square minor has nonzero determinant, re-verified by exact elimination.
bool column_selection() {
    for (const ProblemParams& pp :
         std::vector<ProblemParams>{plain(3, 1, 1, 8), catalan_instance(8)}) {
        const Construction c = build_construction(pp);
        const LinearFormTable tab = s_table(derive(c));
        std::vector<long> ks;
        try {
            ks = select_invertible_columns(tab);
        } catch (const RankDeficient&) {
            return false;
        }
        if (static_cast<long>(ks.size()) != tab.a + tab.N + 1 - tab.i0) return false;
        if (ks.back() > c.d0 - 1) return false;
        if (selected_minor_det(tab, ks) == 0) return false;
    }
    return true;
}

// 9. Measured growth slopes stay inside the predicted envelopes
// ln(beta) + 0.5 and ln(alpha) + 0.5 for n = 20, 30, 40.
bool growth_envelopes() {
    const long prec = 192;
    const GrowthRates g = alpha_beta(3, 1, 1, prec);
    const double ln2 = std::log(2.0);
    const double ln_alpha = g.alpha.log2_abs() * ln2;
    const double ln_beta = g.beta.log2_abs() * ln2;
    for (const long n : {20L, 30L, 40L}) {
        const RateMeasurement rm = measure_rates(plain(3, 1, 1, n), 12, prec);
        if (!(rm.slope_s <= ln_beta + 0.5)) return false;
        if (!(rm.slope_lambda <= ln_alpha + 0.5)) return false;
    }
    return true;
}

// Exact-rational accelerated evaluation of the alternating series
// sum (-1)^k / (2k+1)^2 after nsteps acceleration steps; the error is below
// (3+sqrt(8))^-nsteps, about 2^-244 for nsteps = 96.
BigRat accelerated_alternating_catalan(long nsteps) {
    BigInt a_prev(2), a_cur(6); // (3+sqrt8)^k + (3-sqrt8)^k
    for (long k = 2; k <= nsteps; ++k) {
        const BigInt nxt = 6 * a_cur - a_prev;
        a_prev = a_cur;
        a_cur = nxt;
    }
    const BigRat d = BigRat(a_cur) / BigRat(2);
    BigRat b(-1), cterm = -d, s(0);
    for (long k = 0; k < nsteps; ++k) {
        cterm = b - cterm;
        s += cterm / BigRat((2 * k + 1) * (2 * k + 1));
        b *= make_rat(2 * (k + nsteps) * (k - nsteps), (2 * k + 1) * (k + 1));
    }
    return s / d;
}

// 10. Character arithmetic end to end: conductors, idempotent primitive
// parts, the half-period identity, the Euler-factor relation at s = 3, and
// the weight-2 L-value against an independent accelerated series, all within
// 2^-64 where numeric.
bool character_suite() {
    std::vector<long> conds;
    for (const auto& chi : enumerate_characters(12)) {
        conds.push_back(conductor(chi));
        const DirichletCharacter prim = primitive_part(chi);
        if (!(primitive_part(prim) == prim)) return false;
        if (conductor(prim) != conductor(chi)) return false;
    }
    std::sort(conds.begin(), conds.end());
    if (conds != std::vector<long>{1, 3, 4, 12}) return false;

    for (const long e : {4L, 8L, 12L})
        for (const auto& chi : enumerate_characters(e))
            if (is_primitive(chi) && !halfperiod_antisymmetry(chi)) return false;

    const long prec = 256;
    const MpFloat tol = MpFloat::from_long(1, prec).mul_2si(-64);
    for (const auto& chi : enumerate_characters(12)) {
        const DirichletCharacter prim = primitive_part(chi);
        MPComplex factor = MPComplex::from_bigrat(BigRat(1), prec);
        for (const long p : prime_divisors(12)) {
            if (conductor(chi) % p == 0) continue;
            factor = factor *
                     (MPComplex::from_bigrat(BigRat(1), prec) -
                      MPComplex::from_cyc(prim.value(p) * CycScalar::from_rational(
                                                              pow_rat(BigRat(p), -3)),
                                          prec));
        }
        const MPComplex diff = l_value(chi, 3, prec).v - l_value(prim, 3, prec).v * factor;
        if (!(diff.abs() < tol)) return false;
    }

    const BigRat oracle = accelerated_alternating_catalan(96);
    for (const auto& chi : enumerate_characters(4)) {
        if (chi.is_principal()) continue;
        const MpFloat got = l_value(chi, 2, prec).v.re;
        const MpFloat want = MpFloat::from_bigrat(oracle, prec + 64);
        if (!((got - want).abs() < tol)) return false;
    }
    return true;
}

// 11. Two cold verification runs of the command-line tool produce
// byte-identical documents.
bool deterministic_verify() {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("padezeta_gate_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto run = [&](const fs::path& out) {
        const std::string cmd = "env -u PADEZETA_CACHE '" + std::string(PADEZETA_CLI_PATH) +
                                "' verify --a 3 --r 1 --N 1 --n 4 > '" + out.string() +
                                "' 2> /dev/null";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const fs::path f1 = dir / "run1.json", f2 = dir / "run2.json";
    const bool ok1 = run(f1), ok2 = run(f2);
    const std::string d1 = slurp(f1), d2 = slurp(f2);
    fs::remove_all(dir);
    return ok1 && ok2 && !d1.empty() && d1 == d2;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Entry> battery = {
        {"integer linear-form tables across the instance grid", table_integrality},
        {"kernel expansion equals the series-extraction oracle", expansion_oracle_equivalence},
        {"vanishing orders and order of contact at one", vanishing_orders},
        {"derivative tower exact and regular at one", tower_regular_at_one},
        {"derivative tower equals adjoint iterates", tower_matches_adjoint},
        {"system determinant nonzero, rank a+1 at one", system_rank_certificates},
        {"direct and table evaluations agree to 2^-64", dual_route_identity},
        {"invertible column selection with exact minor", column_selection},
        {"growth slopes within predicted envelopes", growth_envelopes},
        {"character suite with independent series oracle", character_suite},
        {"byte-identical cold verification runs", deterministic_verify},
    };

    long passed = 0;
    for (size_t i = 0; i < battery.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = battery[i].fn();
        } catch (const Error& e) {
            note = std::string(" [") + e.code() + ": " + e.what() + "]";
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2zu/11] %-52s %s (%.2fs)%s\n", i + 1, battery[i].name,
                    ok ? "PASS" : "FAIL", secs, note.c_str());
        std::fflush(stdout);
        if (ok) ++passed;
    }
    std::printf("ACCEPTANCE: %ld/11\n", passed);
    return passed == 11 ? 0 : 1;
}
