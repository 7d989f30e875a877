#pragma once

// Dirichlet characters mod d with exact root-of-unity values, stored as an
// exponent table: chi(u) = e^(2 pi i expo[u] / order) on units, 0 elsewhere.
// Characters are kept canonical (order = the multiplicative order of chi), so
// structural equality is character equality across moduli operations.

#include "padezeta/construction.hpp"
#include "padezeta/cyclotomic.hpp"
#include "padezeta/mpfloat.hpp"

#include <vector>

namespace padezeta {

struct DirichletCharacter {
    long modulus = 1;
    long order = 1;
    std::vector<long> expo; // index n = 0..modulus-1; -1 marks non-units

    CycScalar value(long n) const;
    bool is_principal() const { return order == 1; }

    friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) = default;
};

// All phi(d) characters mod d in a deterministic order (exponent tuples over
// the unit-group cyclic factors, factors of 2 first, then odd primes
// ascending, tuples in lexicographic order).
std::vector<DirichletCharacter> enumerate_characters(long d);

// Smallest divisor e of the modulus such that chi is trivial on units
// congruent to 1 mod e.
long conductor(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

// The primitive character of modulus conductor(chi) inducing chi; idempotent.
DirichletCharacter primitive_part(const DirichletCharacter& chi);

// chi(n + d/2) = -chi(n) for all n. Requires chi primitive with 4 | modulus
// (PreconditionViolated otherwise); the check itself is exhaustive and exact.
bool halfperiod_antisymmetry(const DirichletCharacter& chi);

// All distinct prime divisors of d, ascending.
std::vector<long> prime_divisors(long d);

// Kernel parameters targeting L(chi, -) at z0 = 1: N = modulus, f = chi.
// Requires chi primitive.
ProblemParams untwisted_reduction(const DirichletCharacter& chi, long a, long r, long n, int p);

// Kernel parameters targeting L(chi, -) through the half-period point:
// N = modulus/2, z0 = e^(i pi / N), f(la) = chi(la) z0^-la. Requires chi
// primitive with 4 | modulus.
ProblemParams halfroot_reduction(const DirichletCharacter& chi, long a, long r, long n, int p);

// L(chi, s) = d^-s sum_{r=1}^d chi(r) zeta(s, r/d), s integer >= 2, certified.
CertComplex l_value(const DirichletCharacter& chi, long s, long prec);

} // namespace padezeta
