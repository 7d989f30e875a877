#include "padezeta/io.hpp"

#include "padezeta/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace padezeta {

namespace {

using ojson = nlohmann::ordered_json;

std::string fixed3(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

ojson j_int(const BigInt& v) { return ojson(to_string(v)); }

ojson j_rat(const BigRat& v) {
    ojson o = ojson::object();
    o["num"] = to_string(BigInt(v.get_num()));
    o["den"] = to_string(BigInt(v.get_den()));
    return o;
}

ojson j_poly(const Poly& p) {
    ojson arr = ojson::array();
    for (const BigRat& c : p.coeffs()) arr.push_back(j_rat(c));
    return arr;
}

ojson j_cyc(const CycScalar& c) {
    ojson o = ojson::object();
    o["coef"] = j_rat(c.coef());
    o["angle_turns"] = j_rat(c.angle());
    return o;
}

ojson j_mpfloat(const MpFloat& x) {
    ojson o = ojson::object();
    o["dec"] = x.decimal(decimal_digits_for(x.precision()));
    o["prec_bits"] = x.precision();
    return o;
}

ojson j_certcomplex(const CertComplex& c) {
    const long digits = decimal_digits_for(c.v.precision());
    ojson o = ojson::object();
    o["re"] = c.v.re.decimal(digits);
    o["im"] = c.v.im.decimal(digits);
    o["prec_bits"] = c.v.precision();
    o["log2_err"] = fixed3(c.log2err);
    return o;
}

ojson j_params(const ProblemParams& pp) {
    ojson o = ojson::object();
    o["a"] = pp.a;
    o["r"] = pp.r;
    o["N"] = pp.N;
    o["n"] = pp.n;
    o["p"] = pp.p;
    o["z0"] = pp.z0 == Z0Kind::One ? "one" : "half_root";
    ojson f = ojson::array();
    for (const CycScalar& c : pp.f) f.push_back(j_cyc(c));
    o["f"] = f;
    return o;
}

ojson j_ratfunc(const RatFunc& f) {
    ojson o = ojson::object();
    o["num"] = j_poly(f.num());
    o["den"] = j_poly(f.den());
    return o;
}

ojson j_pf(const PartialFractionForm& pf) {
    ojson o = ojson::object();
    o["grid_step"] = pf.grid_step();
    o["max_order"] = pf.max_order();
    o["hmax"] = pf.hmax();
    ojson rows = ojson::array();
    for (long j = 1; j <= pf.max_order(); ++j) {
        ojson row = ojson::array();
        for (long h = 0; h <= pf.hmax(); ++h) row.push_back(j_rat(pf.coeff(j, h)));
        rows.push_back(row);
    }
    o["p"] = rows;
    return o;
}

ojson j_construction(const Construction& c) {
    ojson o = ojson::object();
    o["params"] = j_params(c.params);
    o["F"] = j_ratfunc(c.F);
    o["partial_fractions"] = j_pf(c.pjh);
    ojson parr = ojson::array();
    for (const Poly& p : c.P) parr.push_back(j_poly(p));
    o["P"] = parr;
    o["U"] = j_poly(c.U);
    o["V"] = j_poly(c.V);
    o["d0"] = c.d0;
    o["d0_below_n_plus_a"] = c.d0_below_n_plus_a;
    return o;
}

ojson j_table(const LinearFormTable& t) {
    ojson o = ojson::object();
    o["a"] = t.a;
    o["N"] = t.N;
    o["K"] = t.K;
    o["d0"] = t.d0;
    o["i0"] = t.i0;
    o["delta"] = j_int(t.delta);
    ojson rows = ojson::array();
    for (const auto& row : t.s) {
        ojson r = ojson::array();
        for (const BigInt& v : row) r.push_back(j_int(v));
        rows.push_back(r);
    }
    o["s"] = rows;
    return o;
}

ojson j_xi(const XiVector& xv) {
    ojson o = ojson::object();
    o["a"] = xv.a;
    o["N"] = xv.N;
    o["period"] = xv.period;
    o["i0"] = xv.i0;
    ojson xs = ojson::array();
    for (const CertComplex& c : xv.xi) xs.push_back(j_certcomplex(c));
    o["xi"] = xs;
    ojson xps = ojson::array();
    for (const CertComplex& c : xv.xi_prime) xps.push_back(j_certcomplex(c));
    o["xi_prime"] = xps;
    return o;
}

} // namespace

long decimal_digits_for(long prec_bits) {
    return static_cast<long>(std::ceil(static_cast<double>(prec_bits) * 0.30102999566398120)) + 2;
}

std::string json_of(const BigInt& v) { return j_int(v).dump(); }
std::string json_of(const BigRat& v) { return j_rat(v).dump(); }
std::string json_of(const Poly& p) { return j_poly(p).dump(); }
std::string json_of(const CycScalar& c) { return j_cyc(c).dump(); }
std::string json_of(const MpFloat& x) { return j_mpfloat(x).dump(); }
std::string json_of(const CertComplex& c) { return j_certcomplex(c).dump(); }
std::string json_of(const ProblemParams& pp) { return j_params(pp).dump(); }
std::string json_of(const RatFunc& f) { return j_ratfunc(f).dump(); }
std::string json_of(const PartialFractionForm& pf) { return j_pf(pf).dump(); }
std::string json_of(const Construction& c) { return j_construction(c).dump(); }
std::string json_of(const LinearFormTable& t) { return j_table(t).dump(); }
std::string json_of(const XiVector& xv) { return j_xi(xv).dump(); }

LinearFormTable table_from_json(const std::string& text) {
    ojson o;
    try {
        o = ojson::parse(text);
    } catch (const std::exception& e) {
        throw CacheError(std::string("table_from_json: parse failure: ") + e.what());
    }
    try {
        LinearFormTable t;
        t.a = o.at("a").get<long>();
        t.N = o.at("N").get<long>();
        t.K = o.at("K").get<long>();
        t.d0 = o.at("d0").get<long>();
        t.i0 = o.at("i0").get<long>();
        t.delta = bigint_from_string(o.at("delta").get<std::string>());
        for (const auto& row : o.at("s")) {
            std::vector<BigInt> r;
            r.reserve(row.size());
            for (const auto& v : row) r.push_back(bigint_from_string(v.get<std::string>()));
            t.s.push_back(std::move(r));
        }
        if (static_cast<long>(t.s.size()) != t.K) {
            throw CacheError("table_from_json: row count does not match K");
        }
        for (const auto& row : t.s) {
            if (static_cast<long>(row.size()) != t.a + t.N) {
                throw CacheError("table_from_json: column count does not match a+N");
            }
        }
        return t;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(std::string("table_from_json: malformed table: ") + e.what());
    }
}

std::string csv_of_table(const LinearFormTable& t) {
    std::ostringstream os;
    os << "k,i,s\n";
    for (long k = 1; k <= t.K; ++k) {
        const auto& row = t.s[static_cast<std::size_t>(k - 1)];
        for (long i = 1; i <= t.a + t.N; ++i) {
            os << k << ',' << i << ',' << to_string(row[static_cast<std::size_t>(i - 1)]) << '\n';
        }
    }
    return os.str();
}

std::string error_json(const std::string& code, const std::string& message) {
    ojson o = ojson::object();
    ojson inner = ojson::object();
    inner["code"] = code;
    inner["message"] = message;
    o["error"] = inner;
    return o.dump();
}

std::string canonical_document(const std::string& fragment) {
    ojson o;
    try {
        o = ojson::parse(fragment);
    } catch (const std::exception& e) {
        throw InvalidParams(std::string("canonical_document: not JSON: ") + e.what());
    }
    return o.dump(2) + "\n";
}

} // namespace padezeta
