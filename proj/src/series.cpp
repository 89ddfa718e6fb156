#include "orcalc/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orcalc {

PowerSeries1 PowerSeries1::constant(const Rational& a, int precision) {
    PowerSeries1 r(precision);
    r.c[0] = a;
    return r;
}

PowerSeries1 PowerSeries1::var(int precision) {
    if (precision < 1) throw std::invalid_argument("PowerSeries1::var: precision < 1");
    PowerSeries1 r(precision);
    r.c[1] = Rational(1);
    return r;
}

bool PowerSeries1::is_zero() const {
    for (const auto& a : c)
        if (!a.is_zero()) return false;
    return true;
}

std::string PowerSeries1::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= precision(); ++k) {
        if (c[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c[k].str();
        if (k > 0) os << "*t^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool operator==(const PowerSeries1& a, const PowerSeries1& b) {
    if (a.precision() != b.precision()) return false;
    return a.c == b.c;
}

namespace {
int min_prec(const PowerSeries1& a, const PowerSeries1& b) {
    return std::min(a.precision(), b.precision());
}
}  // namespace

PowerSeries1 ps_add(const PowerSeries1& a, const PowerSeries1& b) {
    PowerSeries1 r(min_prec(a, b));
    for (int k = 0; k <= r.precision(); ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

PowerSeries1 ps_sub(const PowerSeries1& a, const PowerSeries1& b) {
    PowerSeries1 r(min_prec(a, b));
    for (int k = 0; k <= r.precision(); ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

PowerSeries1 ps_neg(const PowerSeries1& a) {
    PowerSeries1 r(a.precision());
    for (int k = 0; k <= r.precision(); ++k) r.c[k] = -a.c[k];
    return r;
}

PowerSeries1 ps_scale(const Rational& s, const PowerSeries1& a) {
    PowerSeries1 r(a.precision());
    for (int k = 0; k <= r.precision(); ++k) r.c[k] = s * a.c[k];
    return r;
}

PowerSeries1 ps_mul(const PowerSeries1& a, const PowerSeries1& b) {
    PowerSeries1 r(min_prec(a, b));
    for (int i = 0; i <= r.precision(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= r.precision(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

PowerSeries1 ps_pow(const PowerSeries1& a, int e) {
    if (e < 0) throw std::invalid_argument("ps_pow: negative exponent");
    PowerSeries1 r = PowerSeries1::one(a.precision());
    for (int k = 0; k < e; ++k) r = ps_mul(r, a);
    return r;
}

PowerSeries1 ps_compose(const PowerSeries1& a, const PowerSeries1& b) {
    if (!b.at(0).is_zero())
        throw std::invalid_argument("ps_compose: inner series has nonzero constant term");
    const int N = min_prec(a, b);
    // Horner evaluation: a_N, a_N*b + a_{N-1}, ...
    PowerSeries1 r = PowerSeries1::constant(a.at(N), N);
    for (int k = N - 1; k >= 0; --k) {
        r = ps_mul(r, b);
        r.c[0] += a.at(k);
    }
    return r;
}

PowerSeries1 ps_recip(const PowerSeries1& a) {
    if (a.at(0).is_zero())
        throw std::invalid_argument("ps_recip: zero constant term");
    const int N = a.precision();
    PowerSeries1 r(N);
    const Rational inv0 = a.c[0].inverse();
    r.c[0] = inv0;
    for (int k = 1; k <= N; ++k) {
        Rational s(0);
        for (int i = 1; i <= k; ++i) s += a.c[i] * r.c[k - i];
        r.c[k] = -inv0 * s;
    }
    return r;
}

PowerSeries1 ps_comp_inverse(const PowerSeries1& a) {
    if (!a.at(0).is_zero() || !a.at(1).is_one())
        throw std::invalid_argument("ps_comp_inverse: series must start t + ...");
    const int N = a.precision();
    PowerSeries1 u = PowerSeries1::var(N);
    for (int k = 2; k <= N; ++k) {
        const Rational e = ps_compose(a, u).at(k);
        u.c[k] -= e;
    }
    return u;
}

PowerSeries1 ps_exp(int precision) {
    PowerSeries1 r(precision);
    Rational f(1);
    r.c[0] = f;
    for (int k = 1; k <= precision; ++k) {
        f /= Rational(k);
        r.c[k] = f;
    }
    return r;
}

PowerSeries1 ps_log(const PowerSeries1& a) {
    if (!a.at(0).is_one())
        throw std::invalid_argument("ps_log: constant term must be 1");
    const int N = a.precision();
    PowerSeries1 w = a;
    w.c[0] = Rational(0);
    // log(1+w) = sum (-1)^{k-1} w^k / k
    PowerSeries1 r(N), wk = PowerSeries1::one(N);
    for (int k = 1; k <= N; ++k) {
        wk = ps_mul(wk, w);
        const Rational s = Rational((k % 2) ? 1 : -1, k);
        r = ps_add(r, ps_scale(s, wk));
    }
    return r;
}

PowerSeries1 ps_exp_of(const PowerSeries1& a) {
    if (!a.at(0).is_zero())
        throw std::invalid_argument("ps_exp_of: constant term must be 0");
    return ps_compose(ps_exp(a.precision()), a);
}

PowerSeries1 todd_series(int precision) {
    if (precision < 0) throw std::invalid_argument("todd_series: negative precision");
    // (1-e^{-t})/t has coefficients (-1)^k/(k+1)!.
    PowerSeries1 d(precision);
    Rational f(1);
    for (int k = 0; k <= precision; ++k) {
        f /= Rational(k + 1);
        d.c[k] = (k % 2) ? -f : f;
    }
    return ps_recip(d);
}

PowerSeries2::PowerSeries2(int precision) : N(precision) {
    if (precision < 0) throw std::invalid_argument("PowerSeries2: negative precision");
    c.assign((N + 1) * (N + 2) / 2, Rational(0));
}

Rational PowerSeries2::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > N) return Rational(0);
    return c[idx(i, j)];
}

void PowerSeries2::set(int i, int j, const Rational& v) {
    if (i < 0 || j < 0 || i + j > N)
        throw std::out_of_range("PowerSeries2::set: bidegree out of range");
    c[idx(i, j)] = v;
}

PowerSeries2 PowerSeries2::var_x(int precision) {
    PowerSeries2 r(precision);
    r.set(1, 0, Rational(1));
    return r;
}

PowerSeries2 PowerSeries2::var_y(int precision) {
    PowerSeries2 r(precision);
    r.set(0, 1, Rational(1));
    return r;
}

bool PowerSeries2::is_zero() const {
    for (const auto& a : c)
        if (!a.is_zero()) return false;
    return true;
}

bool operator==(const PowerSeries2& a, const PowerSeries2& b) {
    return a.N == b.N && a.c == b.c;
}

PowerSeries2 ps_add(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r(std::min(a.N, b.N));
    for (int i = 0; i <= r.N; ++i)
        for (int j = 0; i + j <= r.N; ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

PowerSeries2 ps_sub(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r(std::min(a.N, b.N));
    for (int i = 0; i <= r.N; ++i)
        for (int j = 0; i + j <= r.N; ++j) r.set(i, j, a.at(i, j) - b.at(i, j));
    return r;
}

PowerSeries2 ps_neg(const PowerSeries2& a) {
    PowerSeries2 r(a.N);
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = -a.c[k];
    return r;
}

PowerSeries2 ps_scale(const Rational& s, const PowerSeries2& a) {
    PowerSeries2 r(a.N);
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = s * a.c[k];
    return r;
}

PowerSeries2 ps_mul(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r(std::min(a.N, b.N));
    for (int i = 0; i <= a.N; ++i)
        for (int j = 0; i + j <= a.N; ++j) {
            const Rational ac = a.at(i, j);
            if (ac.is_zero()) continue;
            for (int k = 0; i + j + k <= r.N; ++k)
                for (int l = 0; i + j + k + l <= r.N; ++l) {
                    const Rational bc = b.at(k, l);
                    if (bc.is_zero()) continue;
                    r.c[r.idx(i + k, j + l)] += ac * bc;
                }
        }
    return r;
}

PowerSeries2 ps2_swap(const PowerSeries2& F) {
    PowerSeries2 r(F.N);
    for (int i = 0; i <= F.N; ++i)
        for (int j = 0; i + j <= F.N; ++j) r.set(j, i, F.at(i, j));
    return r;
}

PowerSeries1 ps2_eval(const PowerSeries2& F, const PowerSeries1& a, const PowerSeries1& b) {
    if (!a.at(0).is_zero() || !b.at(0).is_zero())
        throw std::invalid_argument("ps2_eval: arguments must have zero constant term");
    const int N = std::min({F.N, a.precision(), b.precision()});
    PowerSeries1 r(N);
    // Powers of a and b up to N; a^i b^j vanishes past total degree i+j.
    std::vector<PowerSeries1> ap(N + 1, PowerSeries1::one(N)), bp(N + 1, PowerSeries1::one(N));
    for (int k = 1; k <= N; ++k) {
        ap[k] = ps_mul(ap[k - 1], a);
        bp[k] = ps_mul(bp[k - 1], b);
    }
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            const Rational fc = F.at(i, j);
            if (fc.is_zero()) continue;
            r = ps_add(r, ps_scale(fc, ps_mul(ap[i], bp[j])));
        }
    return r;
}

PowerSeries1 ps2_on_x_axis(const PowerSeries2& F) {
    PowerSeries1 r(F.N);
    for (int i = 0; i <= F.N; ++i) r.c[i] = F.at(i, 0);
    return r;
}

PowerSeries1 ps2_on_y_axis(const PowerSeries2& F) {
    PowerSeries1 r(F.N);
    for (int j = 0; j <= F.N; ++j) r.c[j] = F.at(0, j);
    return r;
}

}  // namespace orcalc
