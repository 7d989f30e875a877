#pragma once

// Exact integer/rational scalars (GMP-backed) plus the small combinatorial
// helpers used throughout: factorials, binomials, Pochhammer symbols, lcm(1..n).

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace padezeta {

using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den as a canonical rational; den must be nonzero.
BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den);

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// Requires is_integer(q).
BigInt to_integer(const BigRat& q);

BigInt factorial(unsigned long n);
BigInt binomial(const BigInt& n, unsigned long k);
BigInt binomial_ui(unsigned long n, unsigned long k);

// Rising factorial (x)_m = x (x+1) ... (x+m-1); empty product for m = 0.
BigRat pochhammer(const BigRat& x, unsigned long m);
BigInt pochhammer_int(const BigInt& x, unsigned long m);

// lcm(1, 2, ..., n); lcm of the empty range (n = 0) is 1.
BigInt lcm_upto(unsigned long n);

BigInt pow_int(const BigInt& base, unsigned long e);
BigRat pow_rat(const BigRat& base, long e); // negative e inverts; base != 0 then

// Decimal-string round trips used by the JSON layer.
std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);
BigInt bigint_from_string(const std::string& s);
BigRat bigrat_from_string(const std::string& s); // "num" or "num/den"

// floor(log2(|v|)) + 1, i.e. bit length; 0 for v = 0.
unsigned long bit_length(const BigInt& v);

} // namespace padezeta
