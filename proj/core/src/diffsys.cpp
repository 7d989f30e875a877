#include "padezeta/diffsys.hpp"

#include "padezeta/errors.hpp"

#include <utility>

namespace padezeta {

namespace {

RatFunc rf_zero() { return RatFunc(); }

} // namespace

RatFuncMat build_A_br(long a) {
    if (a < 2) throw InvalidParams("system matrix needs a >= 2");
    const size_t q = static_cast<size_t>(a + 2);
    RatFuncMat A(q, RatFuncVec(q, rf_zero()));
    const Poly z = Poly::monomial(BigRat(1), 1);
    const Poly one{BigRat(1)};
    A[0][static_cast<size_t>(a)] = RatFunc(one, z - one);          // 1/(z-1)
    A[0][static_cast<size_t>(a + 1)] = RatFunc(one, z - z * z);    // 1/(z(1-z))
    for (long i = 2; i <= a; ++i)
        A[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 2)] = RatFunc(-one, z); // -1/z
    return A;
}

RatFuncVec adjoint_step(const RatFuncMat& A, const RatFuncVec& v) {
    const size_t q = v.size();
    if (A.size() != q) throw InvalidParams("matrix/vector size mismatch");
    RatFuncVec out(q, rf_zero());
    for (size_t i = 0; i < q; ++i) {
        RatFunc acc = v[i].derivative();
        for (size_t j = 0; j < q; ++j) {
            if (A[j][i].is_zero()) continue;
            acc += A[j][i] * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

std::vector<RatFuncVec> apply_adjoint(const RatFuncMat& A, const RatFuncVec& v, long kmax) {
    if (kmax < 1) throw InvalidParams("iterate count must be positive");
    std::vector<RatFuncVec> its;
    its.reserve(static_cast<size_t>(kmax));
    its.push_back(v);
    for (long k = 2; k <= kmax; ++k) its.push_back(adjoint_step(A, its.back()));
    return its;
}

RatFuncVec initial_vector(const Construction& c) {
    if (c.params.N != 1)
        throw InvalidParams("the differential system is set up for N = 1");
    RatFuncVec v;
    v.reserve(static_cast<size_t>(c.params.a + 2));
    for (const Poly& p : c.P) v.push_back(RatFunc(p));
    v.push_back(RatFunc(c.U));
    v.push_back(RatFunc(c.V));
    return v;
}

RatFuncMat build_M(const Construction& c) {
    const long q = c.params.a + 2;
    const auto its = apply_adjoint(build_A_br(c.params.a), initial_vector(c), q);
    RatFuncMat M(static_cast<size_t>(q), RatFuncVec(static_cast<size_t>(q), rf_zero()));
    for (size_t k = 0; k < static_cast<size_t>(q); ++k)
        for (size_t i = 0; i < static_cast<size_t>(q); ++i) M[i][k] = its[k][i];
    return M;
}

RatFunc matrix_det(const RatFuncMat& M) {
    const size_t q = M.size();
    for (const auto& row : M)
        if (row.size() != q) throw InvalidParams("determinant needs a square matrix");
    RatFuncMat w = M;
    RatFunc det(Poly{BigRat(1)});
    for (size_t col = 0; col < q; ++col) {
        size_t piv = col;
        while (piv < q && w[piv][col].is_zero()) ++piv;
        if (piv == q) return rf_zero();
        if (piv != col) {
            std::swap(w[piv], w[col]);
            det = -det;
        }
        det *= w[col][col];
        const RatFunc inv = RatFunc(Poly{BigRat(1)}) / w[col][col];
        for (size_t i = col + 1; i < q; ++i) {
            if (w[i][col].is_zero()) continue;
            const RatFunc factor = w[i][col] * inv;
            for (size_t j = col; j < q; ++j) w[i][j] -= factor * w[col][j];
        }
    }
    return det;
}

bool det_M_nonzero(const Construction& c) { return !matrix_det(build_M(c)).is_zero(); }

std::vector<std::vector<BigRat>> iterate_matrix_at(const Construction& c, const BigRat& z,
                                                   long kmax) {
    const long q = c.params.a + 2;
    const auto its = apply_adjoint(build_A_br(c.params.a), initial_vector(c), kmax);
    std::vector<std::vector<BigRat>> m(static_cast<size_t>(q),
                                       std::vector<BigRat>(static_cast<size_t>(kmax), BigRat(0)));
    for (size_t k = 0; k < static_cast<size_t>(kmax); ++k)
        for (size_t i = 0; i < static_cast<size_t>(q); ++i) m[i][k] = its[k][i].eval(z);
    return m;
}

long rank_of(std::vector<std::vector<BigRat>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const BigRat f = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

long rank_at_point(const Construction& c, const BigRat& z, long kmax) {
    return rank_of(iterate_matrix_at(c, z, kmax));
}

} // namespace padezeta
