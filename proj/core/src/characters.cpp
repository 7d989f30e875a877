#include "padezeta/characters.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/euler_maclaurin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace padezeta {

namespace {

long gcd_l(long x, long y) { return std::gcd(x, y); }

long pow_mod(long b, long e, long mod) {
    long acc = 1 % mod;
    b %= mod;
    if (b < 0) b += mod;
    while (e > 0) {
        if (e & 1L) acc = (acc * b) % mod;
        b = (b * b) % mod;
        e >>= 1L;
    }
    return acc;
}

long euler_phi(long d) {
    long phi = d;
    for (long q : prime_divisors(d)) phi = phi / q * (q - 1);
    return phi;
}

// Multiplicative order of g mod q (g a unit).
long order_mod(long g, long q) {
    const long phi = euler_phi(q);
    long ord = phi;
    for (long p : prime_divisors(phi))
        while (ord % p == 0 && pow_mod(g, ord / p, q) == 1) ord /= p;
    return ord;
}

// Smallest primitive root mod an odd prime power.
long primitive_root(long q) {
    const long phi = euler_phi(q);
    for (long g = 2; g < q; ++g) {
        if (gcd_l(g, q) != 1) continue;
        if (order_mod(g, q) == phi) return g;
    }
    throw PreconditionViolated("no primitive root found");
}

struct CyclicFactor {
    long prime_power = 1; // modulus piece this factor lives in
    long gen = 1;         // generator (as a residue mod prime_power)
    long size = 1;        // order of the factor
};

// Cyclic decomposition of the unit group mod d: 2-part factors first
// (<-1>, <5> for 2^e with e >= 3; <3> for 4), then odd prime powers.
std::vector<CyclicFactor> unit_group_factors(long d) {
    std::vector<CyclicFactor> fs;
    long rem = d;
    long e2 = 0;
    while (rem % 2 == 0) {
        rem /= 2;
        ++e2;
    }
    const long q2 = d / rem; // 2^e2
    if (e2 == 2) fs.push_back({q2, 3, 2});
    if (e2 >= 3) {
        fs.push_back({q2, q2 - 1, 2});                 // -1
        fs.push_back({q2, 5, q2 / 4});                 // 5, order 2^(e2-2)
    }
    for (long q : prime_divisors(rem)) {
        long qp = 1;
        long t = rem;
        while (t % q == 0) {
            t /= q;
            qp *= q;
        }
        fs.push_back({qp, primitive_root(qp), euler_phi(qp)});
    }
    return fs;
}

// Discrete log of u within one cyclic factor (u in the subgroup); brute force.
long dlog_in_factor(long u, const CyclicFactor& f) {
    long cur = 1 % f.prime_power;
    const long target = ((u % f.prime_power) + f.prime_power) % f.prime_power;
    for (long k = 0; k < f.size; ++k) {
        if (cur == target) return k;
        cur = (cur * f.gen) % f.prime_power;
    }
    throw PreconditionViolated("residue is outside its cyclic factor");
}

// Coordinates of a unit u mod d w.r.t. the factors: u = prod gen_i^(x_i)
// componentwise via CRT.
std::vector<long> unit_coordinates(long u, long d, const std::vector<CyclicFactor>& fs) {
    std::vector<long> x;
    x.reserve(fs.size());
    long e2 = 0;
    long q2 = 1;
    while ((d / q2) % 2 == 0) {
        q2 *= 2;
        ++e2;
    }
    size_t idx = 0;
    if (e2 >= 2) {
        const long um = ((u % q2) + q2) % q2;
        if (e2 == 2) {
            x.push_back(um == 3 ? 1 : 0);
            idx = 1;
        } else {
            // um = (-1)^s 5^t mod 2^e2
            const CyclicFactor& f5 = fs[1];
            long t = -1;
            long cur = 1;
            for (long k = 0; k < f5.size; ++k) {
                if (cur == um) {
                    t = k;
                    break;
                }
                cur = (cur * 5) % q2;
            }
            if (t >= 0) {
                x.push_back(0);
                x.push_back(t);
            } else {
                const long neg = ((-um) % q2 + q2) % q2;
                cur = 1;
                for (long k = 0; k < f5.size; ++k) {
                    if (cur == neg) {
                        t = k;
                        break;
                    }
                    cur = (cur * 5) % q2;
                }
                if (t < 0) throw PreconditionViolated("2-part discrete log failed");
                x.push_back(1);
                x.push_back(t);
            }
            idx = 2;
        }
    }
    for (; idx < fs.size(); ++idx) x.push_back(dlog_in_factor(u, fs[idx]));
    return x;
}

DirichletCharacter canonicalize(DirichletCharacter chi) {
    long g = chi.order;
    for (long v : chi.expo)
        if (v > 0) g = gcd_l(g, v);
    if (g > 1) {
        chi.order /= g;
        for (long& v : chi.expo)
            if (v > 0) v /= g;
    }
    return chi;
}

} // namespace

std::vector<long> prime_divisors(long d) {
    if (d < 1) throw InvalidParams("prime divisors of a nonpositive number");
    std::vector<long> ps;
    long rem = d;
    for (long q = 2; q * q <= rem; ++q) {
        if (rem % q != 0) continue;
        ps.push_back(q);
        while (rem % q == 0) rem /= q;
    }
    if (rem > 1) ps.push_back(rem);
    return ps;
}

CycScalar DirichletCharacter::value(long n) const {
    long idx = n % modulus;
    if (idx < 0) idx += modulus;
    const long e = expo[static_cast<size_t>(idx)];
    if (e < 0) return CycScalar::zero();
    return CycScalar::root_of_unity(e, order);
}

std::vector<DirichletCharacter> enumerate_characters(long d) {
    if (d < 1) throw InvalidParams("modulus must be positive");
    const auto fs = unit_group_factors(d);
    // Exponent table template: coordinates for every unit.
    std::vector<std::vector<long>> coords(static_cast<size_t>(d));
    std::vector<bool> unit(static_cast<size_t>(d), false);
    for (long u = 0; u < d; ++u) {
        if (gcd_l(u, d) != 1) continue;
        unit[static_cast<size_t>(u)] = true;
        coords[static_cast<size_t>(u)] = unit_coordinates(u, d, fs);
    }
    long m = 1;
    for (const auto& f : fs) m = std::lcm(m, f.size);
    if (d == 1) m = 1;

    std::vector<DirichletCharacter> out;
    std::vector<long> eps(fs.size(), 0);
    for (;;) {
        DirichletCharacter chi;
        chi.modulus = d;
        chi.order = m;
        chi.expo.assign(static_cast<size_t>(d), -1);
        if (d == 1) {
            chi.modulus = 1;
            chi.expo = {0};
        } else {
            for (long u = 0; u < d; ++u) {
                if (!unit[static_cast<size_t>(u)]) continue;
                long e = 0;
                for (size_t i = 0; i < fs.size(); ++i)
                    e = (e + eps[i] * (m / fs[i].size) % m * coords[static_cast<size_t>(u)][i]) % m;
                chi.expo[static_cast<size_t>(u)] = e;
            }
        }
        out.push_back(canonicalize(std::move(chi)));
        // next exponent tuple, lexicographic
        size_t pos = fs.size();
        while (pos > 0) {
            --pos;
            if (++eps[pos] < fs[pos].size) break;
            eps[pos] = 0;
            if (pos == 0) return out;
        }
        if (fs.empty()) return out;
    }
}

long conductor(const DirichletCharacter& chi) {
    const long d = chi.modulus;
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        bool ok = true;
        for (long u = 1; u < d && ok; ++u) {
            if (u % e != 1 % e) continue;
            if (gcd_l(u, d) != 1) continue;
            if (chi.expo[static_cast<size_t>(u)] != 0) ok = false;
        }
        if (ok) return e;
    }
    return d;
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus; }

DirichletCharacter primitive_part(const DirichletCharacter& chi) {
    const long d = chi.modulus;
    const long e = conductor(chi);
    DirichletCharacter out;
    out.modulus = e;
    out.order = chi.order;
    out.expo.assign(static_cast<size_t>(e), -1);
    for (long v = 0; v < e; ++v) {
        if (gcd_l(v, e) != 1) continue;
        long u = v;
        while (gcd_l(u, d) != 1) u += e;
        out.expo[static_cast<size_t>(v)] = chi.expo[static_cast<size_t>(u % d == 0 ? 0 : u % d)];
    }
    if (e == 1) out.expo = {0};
    return canonicalize(std::move(out));
}

bool halfperiod_antisymmetry(const DirichletCharacter& chi) {
    if (!is_primitive(chi) || chi.modulus % 4 != 0)
        throw PreconditionViolated("half-period antisymmetry needs a primitive character "
                                   "with modulus divisible by 4");
    const long d = chi.modulus;
    for (long nn = 0; nn < d; ++nn)
        if (!(chi.value(nn + d / 2) == -chi.value(nn))) return false;
    return true;
}

ProblemParams untwisted_reduction(const DirichletCharacter& chi, long a, long r, long n, int p) {
    if (!is_primitive(chi)) throw PreconditionViolated("reduction needs a primitive character");
    ProblemParams pp;
    pp.a = a;
    pp.r = r;
    pp.N = chi.modulus;
    pp.n = n;
    pp.p = p;
    pp.z0 = Z0Kind::One;
    for (long la = 1; la <= pp.N; ++la) pp.f.push_back(chi.value(la));
    pp.validate();
    return pp;
}

ProblemParams halfroot_reduction(const DirichletCharacter& chi, long a, long r, long n, int p) {
    if (!is_primitive(chi) || chi.modulus % 4 != 0)
        throw PreconditionViolated(
            "half-period reduction needs a primitive character with 4 | modulus");
    ProblemParams pp;
    pp.a = a;
    pp.r = r;
    pp.N = chi.modulus / 2;
    pp.n = n;
    pp.p = p;
    pp.z0 = Z0Kind::HalfRoot;
    const CycScalar z0 = CycScalar::root_of_unity(1, 2 * pp.N);
    for (long la = 1; la <= pp.N; ++la) pp.f.push_back(chi.value(la) * z0.pow(-la));
    pp.validate();
    return pp;
}

CertComplex l_value(const DirichletCharacter& chi, long s, long prec) {
    if (s < 2) throw InvalidParams("L-values here need integer s >= 2");
    const long wp = prec + 32;
    const long d = chi.modulus;
    MPComplex acc(wp);
    double err = -std::numeric_limits<double>::infinity();
    for (long rr = 1; rr <= d; ++rr) {
        const CycScalar cv = chi.value(rr);
        if (cv.is_zero()) continue;
        const MPComplex cx = MPComplex::from_cyc(cv, wp);
        const CertReal hz = hurwitz_zeta(s, make_rat(rr, d), wp);
        acc += cx.scaled(hz.v);
        err = log2_add(err, hz.log2err); // |chi| = 1
    }
    acc = acc.scaled(MpFloat::from_bigrat(pow_rat(BigRat(d), -s), wp));
    err += -static_cast<double>(s) * std::log2(static_cast<double>(d));
    err = log2_add(err, rounding_allowance(wp, acc.log2_abs(), 8 * d));
    return CertComplex{acc, err};
}

} // namespace padezeta
