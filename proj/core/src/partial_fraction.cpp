#include "padezeta/partial_fraction.hpp"

#include "padezeta/errors.hpp"

namespace padezeta {

PartialFractionForm::PartialFractionForm(long N, long max_order, long hmax)
    : N_(N), maxj_(max_order), hmax_(hmax) {
    if (N < 1 || max_order < 1 || hmax < 0)
        throw InvalidParams("PartialFractionForm: need N >= 1, max_order >= 1, hmax >= 0");
    p_.assign(static_cast<size_t>(maxj_),
              std::vector<BigRat>(static_cast<size_t>(hmax_ + 1), BigRat(0)));
}

const BigRat& PartialFractionForm::coeff(long j, long h) const {
    if (j < 1 || j > maxj_ || h < 0 || h > hmax_)
        throw InvalidParams("PartialFractionForm::coeff: index out of range");
    return p_[static_cast<size_t>(j - 1)][static_cast<size_t>(h)];
}

void PartialFractionForm::add_term(long j, long h, const BigRat& c) {
    if (j < 1 || j > maxj_ || h < 0 || h > hmax_)
        throw InvalidParams("PartialFractionForm::add_term: index out of range");
    p_[static_cast<size_t>(j - 1)][static_cast<size_t>(h)] += c;
}

RatFunc PartialFractionForm::reassemble() const {
    RatFunc sum;
    for (long h = 0; h <= hmax_; ++h) {
        const Poly lin{BigRat(N_ * h), BigRat(1)}; // t + N*h
        // Assemble p_J + p_{J-1}(t+Nh) + ... + p_1 (t+Nh)^{J-1} over (t+Nh)^J.
        long J = 0;
        for (long j = maxj_; j >= 1; --j)
            if (coeff(j, h) != 0) {
                J = j;
                break;
            }
        if (J == 0) continue;
        Poly numerator;
        for (long j = 1; j <= J; ++j) {
            if (coeff(j, h) == 0) continue;
            numerator += Poly(coeff(j, h)) * lin.pow(static_cast<unsigned long>(J - j));
        }
        sum += RatFunc(numerator, lin.pow(static_cast<unsigned long>(J)));
    }
    return sum;
}

BigRat PartialFractionForm::eval(const BigRat& t) const {
    BigRat sum(0);
    for (long h = 0; h <= hmax_; ++h) {
        const BigRat base = t + BigRat(N_ * h);
        if (base == 0) {
            bool live = false;
            for (long j = 1; j <= maxj_; ++j)
                if (coeff(j, h) != 0) live = true;
            if (live) throw PoleAtPoint("PartialFractionForm::eval on the pole grid");
            continue;
        }
        BigRat inv = BigRat(1) / base;
        BigRat pw = inv;
        for (long j = 1; j <= maxj_; ++j) {
            if (coeff(j, h) != 0) sum += coeff(j, h) * pw;
            pw *= inv;
        }
    }
    return sum;
}

PartialFractionForm PartialFractionForm::trimmed() const {
    long J = 1;
    for (long j = maxj_; j >= 1; --j) {
        bool live = false;
        for (long h = 0; h <= hmax_; ++h)
            if (coeff(j, h) != 0) live = true;
        if (live) {
            J = j;
            break;
        }
    }
    PartialFractionForm out(N_, J, hmax_);
    for (long j = 1; j <= J; ++j)
        for (long h = 0; h <= hmax_; ++h)
            if (coeff(j, h) != 0) out.add_term(j, h, coeff(j, h));
    return out;
}

namespace {

// c/((t+Nh)^i (t+Nh')^l) with h != h', distributed onto single poles via the
// two-pole reduction; i decreases by one per recursion level.
void split_pair(PartialFractionForm& out, const BigRat& c, long i, long h, long l, long h2) {
    const long N = out.grid_step();
    if (h == h2) {
        out.add_term(i + l, h, c);
        return;
    }
    const BigRat d = BigRat(N) * BigRat(h2 - h); // N(h'-h)
    if (i == 1) {
        out.add_term(1, h, c / pow_rat(d, l));
        for (long m = 1; m <= l; ++m) out.add_term(m, h2, -c / pow_rat(d, l + 1 - m));
        return;
    }
    // Peel one (t+Nh) factor, split it against (t+Nh')^l, then reattach the
    // remaining (t+Nh)^{i-1} to each produced term.
    split_pair(out, c / pow_rat(d, l), i - 1, h, 1, h);
    for (long m = 1; m <= l; ++m) split_pair(out, -c / pow_rat(d, l + 1 - m), i - 1, h, m, h2);
}

} // namespace

PartialFractionForm pf_multiply(const PartialFractionForm& f, const PartialFractionForm& g) {
    if (f.grid_step() == 0) return g; // empty form acts as the multiplicative unit
    if (g.grid_step() == 0) return f;
    if (f.grid_step() != g.grid_step() || f.hmax() != g.hmax())
        throw InvalidParams("pf_multiply: mismatched pole grids");
    PartialFractionForm out(f.grid_step(), f.max_order() + g.max_order(), f.hmax());
    for (long j = 1; j <= f.max_order(); ++j)
        for (long h = 0; h <= f.hmax(); ++h) {
            const BigRat& a = f.coeff(j, h);
            if (a == 0) continue;
            for (long j2 = 1; j2 <= g.max_order(); ++j2)
                for (long h2 = 0; h2 <= g.hmax(); ++h2) {
                    const BigRat& b = g.coeff(j2, h2);
                    if (b == 0) continue;
                    split_pair(out, a * b, j, h, j2, h2);
                }
        }
    return out.trimmed();
}

PartialFractionForm pf_pow(const PartialFractionForm& f, unsigned long e) {
    if (e == 0) throw InvalidParams("pf_pow: zero exponent leaves the pole grid");
    PartialFractionForm r = f;
    for (unsigned long i = 1; i < e; ++i) r = pf_multiply(r, f);
    return r;
}

PartialFractionForm pf_f0(long n, long N) {
    if (N < 1 || n < 1 || n % N != 0) throw InvalidParams("pf_f0: need N >= 1 and N | n");
    const long m = n / N;
    PartialFractionForm out(N, 1, m);
    const BigRat scale(BigInt(1), pow_int(BigInt(N), static_cast<unsigned long>(m)));
    for (long h = 0; h <= m; ++h) {
        BigRat c = scale * BigRat(binomial_ui(static_cast<unsigned long>(m), static_cast<unsigned long>(h)));
        if (h % 2 == 1) c = -c;
        out.add_term(1, h, c);
    }
    return out;
}

PartialFractionForm pf_g(long i, long n, long N) {
    if (N < 1 || n < 1 || n % N != 0 || i < 1) throw InvalidParams("pf_g: bad parameters");
    const long m = n / N;
    PartialFractionForm out(N, 1, m);
    const BigRat scale(BigInt(1), pow_int(BigInt(N), static_cast<unsigned long>(m)));
    for (long h = 0; h <= m; ++h) {
        BigRat c = scale * BigRat(binomial_ui(static_cast<unsigned long>(m), static_cast<unsigned long>(h)));
        c *= BigRat(binomial(BigInt(N * h + i * m), static_cast<unsigned long>(m)));
        if ((h + m) % 2 == 1) c = -c;
        out.add_term(1, h, c);
    }
    return out;
}

PartialFractionForm pf_h(long i, long n, long N) {
    if (N < 1 || n < 1 || n % N != 0 || i < N) throw InvalidParams("pf_h: bad parameters");
    const long m = n / N;
    PartialFractionForm out(N, 1, m);
    const BigRat scale(BigInt(1), pow_int(BigInt(N), static_cast<unsigned long>(m)));
    for (long h = 0; h <= m; ++h) {
        BigRat c = scale * BigRat(binomial_ui(static_cast<unsigned long>(m), static_cast<unsigned long>(h)));
        c *= BigRat(binomial(BigInt(-N * h + (i + 1) * m), static_cast<unsigned long>(m)));
        if (h % 2 == 1) c = -c;
        out.add_term(1, h, c);
    }
    return out;
}

} // namespace padezeta
