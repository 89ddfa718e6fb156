#include "orcalc/fgl.hpp"

#include <stdexcept>

namespace orcalc {

namespace {

// Dense three-variable polynomial truncated at total degree N; only needed to
// expand both association orders of F.
struct Tri {
    int N;
    std::vector<Rational> c;

    explicit Tri(int precision) : N(precision) {
        c.assign((N + 1) * (N + 2) * (N + 3) / 6, Rational(0));
    }
    // Rank of (i,j,k) among triples with i+j+k <= N, ordered by i, then j.
    int idx(int i, int j, int k) const {
        const int ri = N - i;
        // offset of block i: number of triples with first coordinate < i
        int off = (N + 1) * (N + 2) * (N + 3) / 6 - (ri + 1) * (ri + 2) * (ri + 3) / 6;
        const int rj = ri - j;
        off += (ri + 1) * (ri + 2) / 2 - (rj + 1) * (rj + 2) / 2;
        return off + k;
    }
    Rational at(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i + j + k > N) return Rational(0);
        return c[idx(i, j, k)];
    }
    void add(int i, int j, int k, const Rational& v) { c[idx(i, j, k)] += v; }

    static Tri var(int which, int N) {
        Tri t(N);
        t.add(which == 0, which == 1, which == 2, Rational(1));
        return t;
    }
};

Tri tri_mul(const Tri& a, const Tri& b) {
    Tri r(a.N);
    for (int i = 0; i <= a.N; ++i)
        for (int j = 0; i + j <= a.N; ++j)
            for (int k = 0; i + j + k <= a.N; ++k) {
                const Rational ac = a.at(i, j, k);
                if (ac.is_zero()) continue;
                for (int p = 0; i + j + k + p <= a.N; ++p)
                    for (int q = 0; i + j + k + p + q <= a.N; ++q)
                        for (int s = 0; i + j + k + p + q + s <= a.N; ++s) {
                            const Rational bc = b.at(p, q, s);
                            if (bc.is_zero()) continue;
                            r.add(i + p, j + q, k + s, ac * bc);
                        }
            }
    return r;
}

// F(A, B) for trivariate arguments with zero constant term.
Tri tri_eval2(const PowerSeries2& F, const Tri& A, const Tri& B) {
    const int N = A.N;
    Tri r(N);
    std::vector<Tri> ap, bp;
    ap.reserve(N + 1);
    bp.reserve(N + 1);
    Tri one(N);
    one.add(0, 0, 0, Rational(1));
    ap.push_back(one);
    bp.push_back(one);
    for (int k = 1; k <= N; ++k) {
        ap.push_back(tri_mul(ap[k - 1], A));
        bp.push_back(tri_mul(bp[k - 1], B));
    }
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            const Rational fc = F.at(i, j);
            if (fc.is_zero()) continue;
            const Tri prod = tri_mul(ap[i], bp[j]);
            for (size_t t = 0; t < prod.c.size(); ++t) r.c[t] += fc * prod.c[t];
        }
    return r;
}

// Lift F(x,y) to three variables on the chosen pair of axes.
Tri tri_lift(const PowerSeries2& F, int vx, int vy, int N) {
    Tri r(N);
    for (int i = 0; i <= F.N && i <= N; ++i)
        for (int j = 0; i + j <= F.N && i + j <= N; ++j) {
            const Rational fc = F.at(i, j);
            if (fc.is_zero()) continue;
            int e[3] = {0, 0, 0};
            e[vx] = i;
            e[vy] = j;
            r.add(e[0], e[1], e[2], fc);
        }
    return r;
}

}  // namespace

FormalGroupLaw fgl_additive(int precision) {
    if (precision < 1) throw std::invalid_argument("fgl_additive: precision < 1");
    PowerSeries2 F = ps_add(PowerSeries2::var_x(precision), PowerSeries2::var_y(precision));
    return {F, "additive"};
}

FormalGroupLaw fgl_multiplicative(int precision) {
    if (precision < 2) throw std::invalid_argument("fgl_multiplicative: precision < 2");
    PowerSeries2 F = ps_add(PowerSeries2::var_x(precision), PowerSeries2::var_y(precision));
    F.set(1, 1, Rational(-1));
    return {F, "multiplicative"};
}

FormalGroupLaw fgl_custom(PowerSeries2 F, std::string name) {
    return {std::move(F), std::move(name)};
}

FglValidation fgl_validate(const FormalGroupLaw& fgl) {
    FglValidation v;
    const PowerSeries2& F = fgl.F;
    const int N = F.precision();

    const PowerSeries1 fx = ps2_on_x_axis(F);
    const PowerSeries1 fy = ps2_on_y_axis(F);
    v.unit_ok = (fx == PowerSeries1::var(N)) && (fy == PowerSeries1::var(N));
    if (!v.unit_ok) v.detail += "unit axiom fails; ";

    v.symmetric_ok = (F == ps2_swap(F));
    if (!v.symmetric_ok) v.detail += "symmetry fails; ";

    const Tri x = Tri::var(0, N), y = Tri::var(1, N), z = Tri::var(2, N);
    const Tri fxy = tri_lift(F, 0, 1, N);
    const Tri fyz = tri_lift(F, 1, 2, N);
    const Tri lhs = tri_eval2(F, fxy, z);
    const Tri rhs = tri_eval2(F, x, fyz);
    v.associative_ok = (lhs.c == rhs.c);
    if (!v.associative_ok) v.detail += "associativity fails; ";
    return v;
}

PowerSeries2 fgl_f_part(const FormalGroupLaw& fgl) {
    const PowerSeries2& F = fgl.F;
    const int N = F.precision();
    if (N < 2) throw std::invalid_argument("fgl_f_part: precision < 2");
    PowerSeries2 D = ps_sub(ps_sub(F, PowerSeries2::var_x(N)), PowerSeries2::var_y(N));
    for (int i = 0; i <= N; ++i)
        if (!D.at(i, 0).is_zero() || !D.at(0, i).is_zero())
            throw std::invalid_argument("fgl_f_part: F - x - y not divisible by xy");
    PowerSeries2 f(N - 2);
    for (int i = 0; i <= N - 2; ++i)
        for (int j = 0; i + j <= N - 2; ++j) f.set(i, j, D.at(i + 1, j + 1));
    return f;
}

PowerSeries1 fgl_inverse(const FormalGroupLaw& fgl) {
    const int N = fgl.precision();
    PowerSeries1 mu(N);
    const PowerSeries1 t = PowerSeries1::var(N);
    // dF/dy(0,0) = 1, so the degree-k coefficient of F(t, mu) is corrected by
    // exactly the adjustment to mu_k.
    for (int k = 1; k <= N; ++k) {
        const Rational e = ps2_eval(fgl.F, t, mu).at(k);
        mu.c[k] -= e;
    }
    return mu;
}

PowerSeries1 fgl_n_series(const FormalGroupLaw& fgl, int d) {
    const int N = fgl.precision();
    if (d < 0) return ps_compose(fgl_inverse(fgl), fgl_n_series(fgl, -d));
    PowerSeries1 s(N);  // [0] = 0
    const PowerSeries1 t = PowerSeries1::var(N);
    for (int k = 0; k < d; ++k) s = ps2_eval(fgl.F, s, t);
    return s;
}

}  // namespace orcalc
