#include "orcalc/bundle.hpp"

#include <stdexcept>

namespace orcalc {

Bundle::Bundle(TowerPtr ring_, int rank_, std::vector<RingElement> chern_)
    : ring(std::move(ring_)), rank(rank_), chern(std::move(chern_)) {
    if (rank < 0) throw std::invalid_argument("Bundle: negative rank");
    if (static_cast<int>(chern.size()) != rank)
        throw std::invalid_argument("Bundle: need exactly rank Chern classes");
    const bool graded = ring->theory()->graded;
    for (int i = 1; i <= rank; ++i) {
        const RingElement& ci = chern[i - 1];
        if (ci.owner() != ring)
            throw std::invalid_argument("Bundle: Chern class in the wrong ring");
        if (!ci.constant_term().is_zero())
            throw std::invalid_argument("Bundle: Chern classes must be nilpotent");
        if (graded && !(ci.weight_component(i) == ci))
            throw std::invalid_argument("Bundle: c_i must be homogeneous of weight i");
    }
}

Bundle Bundle::trivial(const TowerPtr& ring, int rank) {
    return Bundle(ring, rank, std::vector<RingElement>(rank, ring->zero()));
}

Bundle Bundle::line(const RingElement& c1) {
    return Bundle(c1.owner(), 1, {c1});
}

RingElement Bundle::chern_class(int i) const {
    if (i < 0) throw std::invalid_argument("Bundle::chern_class: negative index");
    if (i == 0) return ring->one();
    if (i > rank) return ring->zero();
    return chern[i - 1];
}

RingElement Bundle::total_chern() const {
    RingElement t = ring->one();
    for (const auto& c : chern) t += c;
    return t;
}

VirtualBundle::VirtualBundle(Bundle pos_, Bundle neg_)
    : pos(std::move(pos_)), neg(std::move(neg_)) {
    if (pos.ring != neg.ring)
        throw std::invalid_argument("VirtualBundle: parts live in different rings");
}

VirtualBundle::VirtualBundle(Bundle b) : pos(std::move(b)) {
    neg = Bundle::trivial(pos.ring, 0);
}

Bundle whitney_sum(const Bundle& a, const Bundle& b) {
    if (a.ring != b.ring) throw std::invalid_argument("whitney_sum: ring mismatch");
    const int rank = a.rank + b.rank;
    std::vector<RingElement> chern;
    chern.reserve(rank);
    for (int k = 1; k <= rank; ++k) {
        RingElement ck = a.ring->zero();
        for (int i = 0; i <= k; ++i) ck += a.chern_class(i) * b.chern_class(k - i);
        chern.push_back(std::move(ck));
    }
    return Bundle(a.ring, rank, std::move(chern));
}

std::vector<RingElement> power_sums(const Bundle& b, int k) {
    return newton_e_to_p(b.chern, k, b.ring->zero());
}

RingElement mult_extension(const PowerSeries1& F, const Bundle& b) {
    const Rational a0 = F.at(0);
    if (a0.is_zero()) throw std::invalid_argument("mult_extension: F(0) must be invertible");
    const TowerPtr& R = b.ring;
    const int W = R->top_weight();
    if (F.precision() < W)
        throw std::invalid_argument("mult_extension: series precision below ring top weight");
    // prod F(x_j) = F(0)^rank * exp(sum_k log(F/F(0))_k p_k).
    const PowerSeries1 L = ps_log(ps_scale(a0.inverse(), F));
    const std::vector<RingElement> p = power_sums(b, W);
    RingElement acc = R->zero();
    for (int k = 1; k <= W; ++k) acc += L.at(k) * p[k - 1];
    return pow(a0, b.rank) * eval_series_at(ps_exp(std::max(W, 0)), acc);
}

RingElement mult_extension(const PowerSeries1& F, const VirtualBundle& b) {
    return mult_extension(F, b.pos) * elem_inverse(mult_extension(F, b.neg));
}

RingElement todd_class(const Bundle& b) {
    return mult_extension(todd_series(std::max(b.ring->top_weight(), 0)), b);
}

RingElement todd_class(const VirtualBundle& b) {
    return mult_extension(todd_series(std::max(b.pos.ring->top_weight(), 0)), b);
}

RingElement chern_character(const VirtualBundle& b) {
    const TowerPtr& R = b.pos.ring;
    if (!R->theory()->graded)
        throw std::invalid_argument("chern_character: target ring must be an additive-theory ring");
    const int W = R->top_weight();
    const std::vector<RingElement> pp = power_sums(b.pos, W), pn = power_sums(b.neg, W);
    RingElement r = R->scalar(Rational(b.virtual_rank()));
    Rational invfact(1);
    for (int k = 1; k <= W; ++k) {
        invfact /= Rational(k);
        r += invfact * (pp[k - 1] - pn[k - 1]);
    }
    return r;
}

RingElement chern_character(const Bundle& b) { return chern_character(VirtualBundle(b)); }

Bundle roots_transform(const Bundle& b, const std::vector<RingElement>& g) {
    const TowerPtr& R = b.ring;
    const int W = R->top_weight();
    if (static_cast<int>(g.size()) < W + 1)
        throw std::invalid_argument("roots_transform: coefficient list shorter than top weight + 1");
    if (!g[0].constant_term().is_zero())
        throw std::invalid_argument("roots_transform: g(0) must be nilpotent");
    const int n = b.rank;
    if (n == 0) return b;
    for (const auto& gi : g)
        if (gi.owner() != R)
            throw std::invalid_argument("roots_transform: coefficient in the wrong ring");
    const std::vector<RingElement> p_old = power_sums(b, W);
    // g^k as truncated polynomials with ring coefficients; degree cap W is
    // exact because weight(coefficient) + degree > W dies in the ring.
    std::vector<RingElement> p_new;
    p_new.reserve(n);
    std::vector<RingElement> cur(g.begin(), g.begin() + W + 1);  // g^1
    for (int k = 1; k <= n; ++k) {
        RingElement pk = Rational(n) * cur[0];
        for (int m = 1; m <= W; ++m) pk += cur[m] * p_old[m - 1];
        p_new.push_back(std::move(pk));
        if (k < n) {
            // cur = cur * g, truncated at degree W.
            std::vector<RingElement> nxt(W + 1, R->zero());
            for (int i = 0; i <= W; ++i) {
                if (cur[i].is_zero()) continue;
                for (int j = 0; i + j <= W; ++j) {
                    if (g[j].is_zero()) continue;
                    nxt[i + j] += cur[i] * g[j];
                }
            }
            cur = std::move(nxt);
        }
    }
    std::vector<RingElement> e_new = newton_p_to_e(p_new, n, R->zero());
    return Bundle(R, n, std::move(e_new));
}

Bundle bundle_dual(const FormalGroupLaw& fgl, const Bundle& b) {
    const TowerPtr& R = b.ring;
    const int W = R->top_weight();
    const PowerSeries1 mu = fgl_inverse(fgl);
    if (mu.precision() < W)
        throw std::invalid_argument("bundle_dual: law precision below ring top weight");
    std::vector<RingElement> g;
    g.reserve(W + 1);
    for (int k = 0; k <= W; ++k) g.push_back(R->scalar(mu.at(k)));
    return roots_transform(b, g);
}

Bundle bundle_tensor_line(const FormalGroupLaw& fgl, const Bundle& b, const RingElement& c1L) {
    const TowerPtr& R = b.ring;
    if (c1L.owner() != R)
        throw std::invalid_argument("bundle_tensor_line: c1 of the line in the wrong ring");
    if (!c1L.constant_term().is_zero())
        throw std::invalid_argument("bundle_tensor_line: c1 of a line bundle must be nilpotent");
    const int W = R->top_weight();
    if (fgl.precision() < W)
        throw std::invalid_argument("bundle_tensor_line: law precision below ring top weight");
    // g(t) = F(t, c1L) as a polynomial in t with ring coefficients.
    std::vector<RingElement> lp(W + 1, R->one());  // powers of c1L
    for (int j = 1; j <= W; ++j) lp[j] = lp[j - 1] * c1L;
    std::vector<RingElement> g(W + 1, R->zero());
    for (int i = 0; i <= W; ++i)
        for (int j = 0; j <= W && i + j <= fgl.precision(); ++j) {
            const Rational fc = fgl.F.at(i, j);
            if (!fc.is_zero()) g[i] += fc * lp[j];
        }
    return roots_transform(b, g);
}

TowerPtr ring_extend_proj(const TowerPtr& base, const Bundle& V, const std::string& gen_name) {
    if (V.ring != base)
        throw std::invalid_argument("ring_extend_proj: bundle does not live over the base ring");
    return RingTower::extend_proj(base, V.rank, V.chern, gen_name);
}

}  // namespace orcalc
