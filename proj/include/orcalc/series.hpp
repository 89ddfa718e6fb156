#pragma once

#include <string>
#include <vector>

#include "orcalc/rational.hpp"

namespace orcalc {

// Truncated power series in one variable over Q. Coefficients are indexed by
// degree 0..N where N is the precision; arithmetic on operands of different
// precision truncates to the smaller one.
struct PowerSeries1 {
    std::vector<Rational> c;  // size precision()+1

    PowerSeries1() : c(1) {}
    explicit PowerSeries1(int precision) : c(precision + 1) {}

    int precision() const { return static_cast<int>(c.size()) - 1; }
    Rational at(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Rational(0); }

    static PowerSeries1 constant(const Rational& a, int precision);
    static PowerSeries1 one(int precision) { return constant(Rational(1), precision); }
    static PowerSeries1 var(int precision);  // t

    bool is_zero() const;
    std::string str() const;
};

bool operator==(const PowerSeries1& a, const PowerSeries1& b);

PowerSeries1 ps_add(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 ps_sub(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 ps_neg(const PowerSeries1& a);
PowerSeries1 ps_scale(const Rational& s, const PowerSeries1& a);
PowerSeries1 ps_mul(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 ps_pow(const PowerSeries1& a, int e);  // e >= 0

// a(b(t)); requires b(0) = 0.
PowerSeries1 ps_compose(const PowerSeries1& a, const PowerSeries1& b);

// Multiplicative inverse; requires a(0) != 0.
PowerSeries1 ps_recip(const PowerSeries1& a);

// Compositional inverse: the series u with a(u(t)) = t; requires a(0) = 0 and
// a'(0) = 1.
PowerSeries1 ps_comp_inverse(const PowerSeries1& a);

PowerSeries1 ps_exp(int precision);            // e^t
PowerSeries1 ps_log(const PowerSeries1& a);    // log a; requires a(0) = 1
PowerSeries1 ps_exp_of(const PowerSeries1& a); // exp(a); requires a(0) = 0

// t/(1-e^{-t}) as a unit series.
PowerSeries1 todd_series(int precision);

// Truncated power series in two variables over Q with total-degree truncation:
// coefficients for all (i,j) with i+j <= N.
struct PowerSeries2 {
    int N = 0;
    std::vector<Rational> c;  // row-major triangle, see idx()

    PowerSeries2() : N(0), c(1) {}
    explicit PowerSeries2(int precision);

    int precision() const { return N; }
    int idx(int i, int j) const { return i * (N + 1) - i * (i - 1) / 2 + j; }
    Rational at(int i, int j) const;
    void set(int i, int j, const Rational& v);

    static PowerSeries2 var_x(int precision);
    static PowerSeries2 var_y(int precision);

    bool is_zero() const;
};

bool operator==(const PowerSeries2& a, const PowerSeries2& b);

PowerSeries2 ps_add(const PowerSeries2& a, const PowerSeries2& b);
PowerSeries2 ps_sub(const PowerSeries2& a, const PowerSeries2& b);
PowerSeries2 ps_neg(const PowerSeries2& a);
PowerSeries2 ps_scale(const Rational& s, const PowerSeries2& a);
PowerSeries2 ps_mul(const PowerSeries2& a, const PowerSeries2& b);

// F(y,x).
PowerSeries2 ps2_swap(const PowerSeries2& F);

// F(a(t), b(t)); requires a(0) = b(0) = 0.
PowerSeries1 ps2_eval(const PowerSeries2& F, const PowerSeries1& a, const PowerSeries1& b);

// F(t, 0) and F(0, t).
PowerSeries1 ps2_on_x_axis(const PowerSeries2& F);
PowerSeries1 ps2_on_y_axis(const PowerSeries2& F);

}  // namespace orcalc
