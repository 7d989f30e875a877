#include "padezeta/derivation.hpp"

#include "padezeta/errors.hpp"

#include <algorithm>

namespace padezeta {

namespace {

const Poly& poly_z() {
    static const Poly z = Poly::monomial(BigRat(1), 1);
    return z;
}

// z * t'(z) - (k-2) * t(z); the common head of all three recurrences.
Poly step_head(const Poly& t, long k) {
    return poly_z() * t.derivative() - t.scaled(BigRat(k - 2));
}

std::vector<Poly> next_p_row(const std::vector<Poly>& row, long k) {
    const size_t a = row.size();
    std::vector<Poly> nxt(a);
    for (size_t j = 0; j < a; ++j) {
        nxt[j] = step_head(row[j], k);
        if (j + 1 < a) nxt[j] -= row[j + 1];
    }
    return nxt;
}

} // namespace

long default_row_count(const Construction& c) {
    return std::min(c.d0 - 1, c.params.a + c.params.N + 32);
}

DerivedForms derive(const Construction& c, long K) {
    if (K < 0) K = default_row_count(c);
    if (K < 1 || K > c.d0 - 1)
        throw InvalidParams("row count K must satisfy 1 <= K <= d0 - 1");
    DerivedForms df;
    df.c = c;
    df.K = K;
    df.tP.reserve(static_cast<size_t>(K));
    df.tP.push_back(c.P);
    df.tU.push_back(c.U);
    df.tV.push_back(c.V);
    for (long k = 2; k <= K; ++k) {
        const std::vector<Poly>& prev = df.tP.back();
        const Poly q = divexact_one_minus_z(prev[0]); // tP_{k-1,1} / (1 - z)
        df.tP.push_back(next_p_row(prev, k));
        df.tU.push_back(step_head(df.tU.back(), k) - poly_z() * q);
        df.tV.push_back(step_head(df.tV.back(), k) + q);
    }
    return df;
}

std::vector<std::vector<Poly>> derive_p_only(const Construction& c, long K) {
    if (K < 1) throw InvalidParams("row count K must be positive");
    std::vector<std::vector<Poly>> rows;
    rows.reserve(static_cast<size_t>(K));
    rows.push_back(c.P);
    for (long k = 2; k <= K; ++k) rows.push_back(next_p_row(rows.back(), k));
    return rows;
}

std::vector<Poly> residue_split(const Poly& t, long N) {
    if (N < 1) throw InvalidParams("residue split needs N >= 1");
    std::vector<std::vector<BigRat>> parts(static_cast<size_t>(N));
    const auto& c = t.coeffs();
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        const size_t lam = e % static_cast<size_t>(N);
        auto& dst = parts[lam];
        if (dst.size() < e - lam + 1) dst.resize(e - lam + 1, BigRat(0));
        dst[e - lam] = c[e];
    }
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(N));
    for (auto& v : parts) out.push_back(Poly::from_coeffs(std::move(v)));
    return out;
}

BigRat base_height(const DerivedForms& df) {
    BigRat h(0);
    for (const Poly& p : df.tP.front()) h = std::max(h, p.height());
    return h;
}

bool check_height_bounds(const DerivedForms& df) {
    const BigRat h1 = base_height(df);
    BigRat bound = h1;
    for (size_t k = 1; k <= df.tP.size(); ++k) {
        if (k >= 2) bound *= df.c.params.n + static_cast<long>(k) - 1; // (n+1)_(k-1) step
        for (const Poly& p : df.tP[k - 1])
            if (p.height() > bound) return false;
    }
    return true;
}

BigInt delta_n(const ProblemParams& pp) {
    return pow_int(BigInt(pp.N) * lcm_upto(static_cast<unsigned long>(pp.n)),
                   static_cast<unsigned long>(pp.a)) *
           pow_int(BigInt(pp.N), static_cast<unsigned long>(pp.a * pp.m()));
}

LinearFormTable s_table(const DerivedForms& df) {
    const ProblemParams& pp = df.c.params;
    LinearFormTable tab;
    tab.a = pp.a;
    tab.N = pp.N;
    tab.K = df.K;
    tab.d0 = df.c.d0;
    tab.i0 = pp.i0();
    tab.delta = delta_n(pp);
    const BigRat delta(tab.delta);
    const BigRat y0 = pp.z0_pow_N();
    const unsigned long uN = static_cast<unsigned long>(pp.N);
    const BigRat vsign = pp.p == 0 ? BigRat(1) : BigRat(-1); // (-1)^p

    auto as_integer = [&](const BigRat& v, long k, long i) {
        if (!is_integer(v))
            throw IntegralityFailure("table entry at row " + std::to_string(k) +
                                     ", column " + std::to_string(i) +
                                     " is not an integer: " + to_string(v));
        return to_integer(v);
    };

    tab.s.resize(static_cast<size_t>(df.K));
    for (long k = 1; k <= df.K; ++k) {
        auto& row = tab.s[static_cast<size_t>(k - 1)];
        row.resize(static_cast<size_t>(pp.a + pp.N));
        for (long i = 1; i <= pp.a; ++i) {
            const Poly& tp = df.tP[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)];
            if (!tp.support_multiple_of(uN))
                throw PreconditionViolated("tP row is not supported on N*Z");
            row[static_cast<size_t>(i - 1)] = as_integer(delta * tp.eval_via_power(uN, y0), k, i);
        }
        const std::vector<Poly> su = residue_split(df.tU[static_cast<size_t>(k - 1)], pp.N);
        const std::vector<Poly> sv = residue_split(df.tV[static_cast<size_t>(k - 1)], pp.N);
        for (long lam = 0; lam < pp.N; ++lam) {
            const BigRat uval = su[static_cast<size_t>(lam)].eval_via_power(uN, y0);
            const BigRat vval =
                sv[static_cast<size_t>(lam == 0 ? 0 : pp.N - lam)].eval_via_power(uN, y0);
            const BigRat sigma = lam == 0 ? BigRat(1) : y0;
            row[static_cast<size_t>(pp.a + lam)] =
                as_integer(delta * (uval + vsign * sigma * vval), k, pp.a + 1 + lam);
        }
    }
    return tab;
}

} // namespace padezeta
