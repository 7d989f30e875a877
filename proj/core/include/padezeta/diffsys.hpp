#pragma once

// First-order differential system behind the N = 1 linear forms: the vector
// of coefficient polynomials (P_1..P_a, U, V) is propagated by the adjoint
// operator d/dz + tA of a fixed (a+2) x (a+2) rational-function matrix A.
// Iterating it reproduces the derivative tower of the derivation module and
// supports exact determinant / rank certificates for the coefficient matrix.

#include "padezeta/construction.hpp"
#include "padezeta/ratfunc.hpp"

#include <vector>

namespace padezeta {

using RatFuncVec = std::vector<RatFunc>;
using RatFuncMat = std::vector<std::vector<RatFunc>>; // row-major, 0-indexed

// The (a+2) x (a+2) system matrix: A[1][a+1] = 1/(z-1), A[1][a+2] = 1/(z(1-z)),
// A[i][i-1] = -1/z for i = 2..a (1-indexed); everything else zero. Its only
// nonzero rows are the first a, so exactly a+1 entries are nonzero.
RatFuncMat build_A_br(long a);

// One application of d/dz + tA: out_i = v_i' + sum_j A[j][i] v_j.
RatFuncVec adjoint_step(const RatFuncMat& A, const RatFuncVec& v);

// Iterates k = 1..kmax (the k = 1 entry is v itself).
std::vector<RatFuncVec> apply_adjoint(const RatFuncMat& A, const RatFuncVec& v, long kmax);

// (P_1, ..., P_a, U, V) as rational functions; requires N = 1.
RatFuncVec initial_vector(const Construction& c);

// (a+2) x (a+2) matrix whose k-th column is the k-th adjoint iterate.
RatFuncMat build_M(const Construction& c);

// Exact determinant over Q(z) (Gaussian elimination with reducing arithmetic).
RatFunc matrix_det(const RatFuncMat& M);

bool det_M_nonzero(const Construction& c);

// Rows i = 1..a+2, columns k = 1..kmax, entry = i-th component of the k-th
// adjoint iterate evaluated at z. Throws PoleAtPoint when an entry has a pole.
std::vector<std::vector<BigRat>> iterate_matrix_at(const Construction& c, const BigRat& z,
                                                   long kmax);

// Exact rank of a rational matrix.
long rank_of(std::vector<std::vector<BigRat>> m);

// rank_of(iterate_matrix_at(c, z, kmax)).
long rank_at_point(const Construction& c, const BigRat& z, long kmax);

} // namespace padezeta
