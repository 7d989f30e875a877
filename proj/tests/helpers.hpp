#pragma once

// Shared fixtures for the test binaries: canonical parameter packs, the
// mod-4 twist configuration, and absolute-tolerance comparisons for
// arbitrary-precision values.

#include "padezeta/characters.hpp"
#include "padezeta/construction.hpp"
#include "padezeta/mpfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pztest {

using namespace padezeta;

// z0 = 1 instance with trivial unit weights f == 1.
inline ProblemParams untwisted(long a, long r, long N, long n, int p = 1) {
    ProblemParams pp;
    pp.a = a;
    pp.r = r;
    pp.N = N;
    pp.n = n;
    pp.p = p;
    pp.z0 = Z0Kind::One;
    pp.f.assign(static_cast<size_t>(N), CycScalar::one());
    return pp;
}

// N = 1 instance evaluated at z0 = -1 (alternating weights).
inline ProblemParams alternating(long a, long r, long n, int p = 1) {
    ProblemParams pp = untwisted(a, r, 1, n, p);
    pp.z0 = Z0Kind::HalfRoot;
    return pp;
}

inline DirichletCharacter nonprincipal_mod4() {
    for (const DirichletCharacter& chi : enumerate_characters(4))
        if (!chi.is_principal()) return chi;
    throw std::logic_error("no non-principal character mod 4");
}

// The mod-4 twist pushed through the half-period reduction: N = 2,
// z0 = e^{i pi/2}, and the weight-2 target value is Catalan's constant.
inline ProblemParams catalan_params(long n) {
    return halfroot_reduction(nonprincipal_mod4(), /*a=*/5, /*r=*/1, n, /*p=*/0);
}

inline MpFloat pow2(long e, long prec = 64) {
    return MpFloat::from_long(1, prec).mul_2si(e);
}

inline bool within_2pow(const MpFloat& x, const MpFloat& y, long log2tol) {
    const long prec = std::max(x.precision(), y.precision());
    return (x - y).abs() < pow2(log2tol, prec);
}

inline bool within_2pow(const MPComplex& x, const MPComplex& y, long log2tol) {
    return (x - y).abs() < pow2(log2tol, x.precision());
}

} // namespace pztest
