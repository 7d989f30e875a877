#include "padezeta/rational.hpp"

#include "padezeta/errors.hpp"

namespace padezeta {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParams("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

BigInt to_integer(const BigRat& q) {
    if (!is_integer(q)) throw InvalidParams("to_integer: " + to_string(q) + " is not an integer");
    return q.get_num();
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

BigInt binomial_ui(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigRat pochhammer(const BigRat& x, unsigned long m) {
    BigRat r(1);
    BigRat f = x;
    for (unsigned long i = 0; i < m; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

BigInt pochhammer_int(const BigInt& x, unsigned long m) {
    BigInt r(1);
    BigInt f = x;
    for (unsigned long i = 0; i < m; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

BigInt lcm_upto(unsigned long n) {
    BigInt r(1);
    for (unsigned long k = 2; k <= n; ++k) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRat pow_rat(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (base == 0 && e < 0) throw InvalidParams("pow_rat: zero base with negative exponent");
    const unsigned long ae = (e < 0) ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ae);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ae);
    if (e < 0) {
        BigRat inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

BigInt bigint_from_string(const std::string& s) {
    BigInt v;
    if (v.set_str(s, 10) != 0) throw InvalidParams("bigint_from_string: bad integer '" + s + "'");
    return v;
}

BigRat bigrat_from_string(const std::string& s) {
    BigRat v;
    if (v.set_str(s, 10) != 0) throw InvalidParams("bigrat_from_string: bad rational '" + s + "'");
    if (v.get_den() == 0) throw InvalidParams("bigrat_from_string: zero denominator in '" + s + "'");
    v.canonicalize();
    return v;
}

unsigned long bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

} // namespace padezeta
