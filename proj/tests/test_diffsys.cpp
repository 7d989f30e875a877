#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padezeta/construction.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/diffsys.hpp"
#include "padezeta/errors.hpp"
#include "padezeta/series.hpp"

#include "helpers.hpp"

#include <vector>

using namespace padezeta;
using pztest::untwisted;

namespace {

long count_nonzero(const RatFuncMat& m) {
    long c = 0;
    for (const auto& row : m)
        for (const RatFunc& e : row)
            if (!e.is_zero()) ++c;
    return c;
}

RatFunc rf(const Poly& p) { return RatFunc(p); }

} // namespace

TEST_CASE("system matrix: shape, sparsity pattern, trace") {
    for (const long a : {2L, 3L, 5L}) {
        const RatFuncMat A = build_A_br(a);
        REQUIRE(A.size() == static_cast<size_t>(a + 2));
        for (const auto& row : A) CHECK(row.size() == static_cast<size_t>(a + 2));
        CHECK(count_nonzero(A) == a + 1);

        // Zero trace: no diagonal entries at all.
        for (long i = 0; i < a + 2; ++i) CHECK(A[static_cast<size_t>(i)][static_cast<size_t>(i)].is_zero());

        // First row carries the two pole entries; the last column of row 1 is
        // 1/(z(1-z)), the one before is 1/(z-1).
        const RatFunc z_minus_1(Poly(BigRat(1)), Poly{BigRat(-1), BigRat(1)});
        CHECK(A[0][static_cast<size_t>(a)] == z_minus_1);
        const RatFunc zz(Poly(BigRat(1)), Poly{BigRat(0), BigRat(1)} * Poly{BigRat(1), BigRat(-1)});
        CHECK(A[0][static_cast<size_t>(a + 1)] == zz);

        // Column a+1 (1-indexed) has its single nonzero entry in row 1.
        for (long i = 1; i < a + 2; ++i) CHECK(A[static_cast<size_t>(i)][static_cast<size_t>(a)].is_zero());

        // Subdiagonal -1/z in rows 2..a.
        const RatFunc minus_inv_z(Poly(BigRat(-1)), Poly{BigRat(0), BigRat(1)});
        for (long i = 2; i <= a; ++i)
            CHECK(A[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 2)] == minus_inv_z);
    }
}

TEST_CASE("adjoint iteration: identity at k = 1, plain derivatives for A = 0") {
    const RatFuncMat zero1(1, RatFuncVec(1));  // 1x1 zero matrix
    const RatFuncVec v = {rf(Poly{BigRat(0), BigRat(0), BigRat(1)})};  // (z^2)
    const auto its = apply_adjoint(zero1, v, 3);
    REQUIRE(its.size() == 3);
    CHECK(its[0][0] == v[0]);
    CHECK(its[1][0] == rf(Poly{BigRat(0), BigRat(2)}));
    CHECK(its[2][0] == rf(Poly(BigRat(2))));
}

TEST_CASE("adjoint tower reproduces the recurrence tower exactly") {
    for (const long n : {4L, 6L}) {
        const Construction c = build_construction(untwisted(3, 1, 1, n));
        const long kfull = std::min<long>(8, c.d0 - 1);
        const auto its = apply_adjoint(build_A_br(3), initial_vector(c), 8);
        const DerivedForms df = derive(c, kfull);
        const auto tp = derive_p_only(c, 8);
        for (long k = 1; k <= 8; ++k) {
            // z^(k-1) X_k is the rescaled tower entry.
            const RatFunc zk(Poly::monomial(BigRat(1), static_cast<size_t>(k - 1)));
            const auto& col = its[static_cast<size_t>(k - 1)];
            for (long j = 1; j <= 3; ++j)
                CHECK(col[static_cast<size_t>(j - 1)] * zk ==
                      rf(tp[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)]));
            if (k <= kfull) {
                CHECK(col[3] * zk == rf(df.tU[static_cast<size_t>(k - 1)]));
                CHECK(col[4] * zk == rf(df.tV[static_cast<size_t>(k - 1)]));
            }
        }
    }
}

TEST_CASE("columns contracted with the solution series telescope to derivatives") {
    // Y = ((-1)^j Li_j(z) for j <= a, 1, 0) solves Y' = AY; contracting the
    // k-th adjoint iterate with Y must give the (k-1)-th derivative of the
    // k = 1 contraction, and the k = 1 contraction is the 0-branch series.
    const Construction c = build_construction(untwisted(3, 1, 1, 4));
    const long T = 40;
    std::vector<SeriesQ> y;
    for (long j = 1; j <= 3; ++j) {
        SeriesQ lj = polylog_series(static_cast<unsigned long>(j), T);
        y.push_back(j % 2 == 1 ? -lj : lj);
    }
    y.push_back(SeriesQ::one(T));
    y.push_back(SeriesQ::zero_to(T));

    const auto its = apply_adjoint(build_A_br(3), initial_vector(c), 4);
    auto contract = [&](const RatFuncVec& col) {
        SeriesQ acc = SeriesQ::zero_to(T);
        for (size_t i = 0; i < col.size(); ++i)
            acc = acc + series_at(col[i], ExpansionCenter::Zero, T) * y[i];
        return acc;
    };

    SeriesQ prev = contract(its[0]);
    // k = 1: the contraction is sum_{t>n} F(-t) z^t.
    for (long t = 0; t <= 30; ++t) {
        const BigRat expect = t <= c.params.n ? BigRat(0) : s0_coefficient(c, t);
        CHECK(prev.coeff(t) == expect);
    }
    for (size_t k = 1; k < 4; ++k) {
        const SeriesQ cur = contract(its[k]);
        const SeriesQ diff = cur - prev.derivative();
        CHECK(diff.known_zero());
        CHECK(diff.end() >= 20);
        prev = cur;
    }
}

TEST_CASE("exact determinants over the rational-function field") {
    // 1x1: det [z] = z.
    CHECK(matrix_det({{rf(Poly{BigRat(0), BigRat(1)})}}) == rf(Poly{BigRat(0), BigRat(1)}));
    // A repeated column collapses the determinant.
    const RatFunc z = rf(Poly{BigRat(0), BigRat(1)});
    CHECK(matrix_det({{z, z}, {z, z}}).is_zero());
    // 2x2 with a zero column.
    CHECK(matrix_det({{z, RatFunc()}, {z * z, RatFunc()}}).is_zero());
    // 2x2 reference value: det [[z, 1], [1, z]] = z^2 - 1.
    const RatFunc one_rf(Poly(BigRat(1)));
    CHECK(matrix_det({{z, one_rf}, {one_rf, z}}) == rf(Poly{BigRat(-1), BigRat(0), BigRat(1)}));
}

TEST_CASE("fundamental matrix of the instance is nonsingular") {
    const Construction c = build_construction(untwisted(3, 1, 1, 4));
    CHECK(det_M_nonzero(c));

    // The determinant's poles sit only at the poles of the system matrix.
    const RatFunc det = matrix_det(build_M(c));
    CHECK(!det.is_zero());
    Poly den = det.den();
    while (den.eval(BigRat(0)) == 0) den = divexact(den, Poly{BigRat(0), BigRat(1)});
    while (den.eval(BigRat(1)) == 0) den = divexact(den, Poly{BigRat(-1), BigRat(1)});
    CHECK(den.degree() == 0);
}

TEST_CASE("evaluation rank at one: full block rank with a zero first row") {
    const Construction c = build_construction(untwisted(3, 1, 1, 4));
    const long kmax = c.d0 - 1;
    CHECK(rank_at_point(c, BigRat(1), kmax) == 4);

    const auto m = iterate_matrix_at(c, BigRat(1), kmax);
    REQUIRE(m.size() == 5);
    for (const BigRat& v : m[0]) CHECK(v == BigRat(0));

    CHECK(rank_at_point(c, BigRat(1), 1) >= 1);
}

TEST_CASE("evaluation refuses points where the tower has poles") {
    const Construction c = build_construction(untwisted(3, 1, 1, 4));
    CHECK_THROWS_AS(iterate_matrix_at(c, BigRat(0), 3), PoleAtPoint);
}

TEST_CASE("exact rank of rational matrices") {
    CHECK(rank_of({{BigRat(1), BigRat(2)}, {BigRat(2), BigRat(4)}}) == 1);
    CHECK(rank_of({{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}}) == 2);
    CHECK(rank_of({{BigRat(0), BigRat(0)}}) == 0);
    CHECK(rank_of({{make_rat(1, 3), make_rat(1, 6)}, {BigRat(2), BigRat(1)}}) == 1);
}
