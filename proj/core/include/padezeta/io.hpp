#pragma once

// Canonical, byte-deterministic JSON rendering of the core value types.
// Integers and rationals render as decimal strings (never JSON numbers, so
// they cannot overflow or lose digits); floats render as fixed-point decimals
// with a digit count pinned by their binary precision. Object keys are
// emitted in a fixed order. Each json_of returns one complete JSON value as
// text; canonical_document() re-indents a fragment into a final document.

#include "padezeta/construction.hpp"
#include "padezeta/cyclotomic.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/mpfloat.hpp"
#include "padezeta/xi.hpp"

#include <string>

namespace padezeta {

// Fractional decimal digits that faithfully carry prec_bits of binary
// precision: ceil(prec_bits * log10(2)) + 2.
long decimal_digits_for(long prec_bits);

std::string json_of(const BigInt& v);
std::string json_of(const BigRat& v);
std::string json_of(const Poly& p);
std::string json_of(const CycScalar& c);
std::string json_of(const MpFloat& x);
std::string json_of(const CertComplex& c);
std::string json_of(const ProblemParams& pp);
std::string json_of(const RatFunc& f);
std::string json_of(const PartialFractionForm& pf);
std::string json_of(const Construction& c);
std::string json_of(const LinearFormTable& t);
std::string json_of(const XiVector& xv);

// Inverse of json_of(LinearFormTable); throws CacheError on malformed input.
LinearFormTable table_from_json(const std::string& text);

// Flat CSV: header "k,i,s" then one row per table entry.
std::string csv_of_table(const LinearFormTable& t);

// {"error":{"code":...,"message":...}} for machine-readable stderr.
std::string error_json(const std::string& code, const std::string& message);

// Re-indents a JSON fragment into the final two-space document form with a
// trailing newline, preserving key order.
std::string canonical_document(const std::string& fragment);

} // namespace padezeta
