#include "orcalc/gysin.hpp"

#include <sstream>
#include <stdexcept>

namespace orcalc {

namespace {

Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
    return r;
}

// Exact Gauss-Jordan solve of M x = rhs over Q.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> M,
                                   std::vector<Rational> rhs) {
    const int n = static_cast<int>(M.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular polarity matrix");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        const Rational inv = M[col][col].inverse();
        for (int c = col; c < n; ++c) M[col][c] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            const Rational f = M[r][col];
            for (int c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

int Space::dimension() const {
    int d = 0;
    for (int n : dims_) d += n;
    return d;
}

std::string Space::describe() const {
    if (dims_.empty()) return "pt";
    std::string s;
    for (size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += "x";
        s += "P" + std::to_string(dims_[i]);
    }
    return s;
}

TowerPtr Space::build(const TheoryPtr& theory) const {
    TowerPtr t = RingTower::point(theory);
    for (size_t i = 0; i < dims_.size(); ++i) {
        const std::string name = dims_.size() == 1 ? "x" : "x" + std::to_string(i + 1);
        t = RingTower::extend_proj(t, dims_[i] + 1,
                                   std::vector<RingElement>(dims_[i] + 1, t->zero()), name);
    }
    return t;
}

RingElement orientation_class(const TowerPtr& ring, int gen) { return ring->generator(gen); }

RingElement orientation_class(const TowerPtr& ring, const std::string& gen_name) {
    return ring->generator(ring->generator_index(gen_name));
}

RingElement hyperplane_class(const TowerPtr& ring, int gen) {
    return eval_series_at(ring->theory()->mu, ring->generator(gen));
}

RingElement twist_class(const TowerPtr& ring, int gen, int d) {
    const PowerSeries1 s = ps_compose(fgl_n_series(ring->theory()->fgl, d), ring->theory()->mu);
    return eval_series_at(s, ring->generator(gen));
}

RingElement k_line_class(const TowerPtr& ring, int gen, int d) {
    const RingElement u = ring->one() - ring->generator(gen);  // [O(1)] = 1 - y
    if (d >= 0) return pow(u, d);
    return elem_inverse(pow(u, -d));
}

Bundle quotient_bundle(const TowerPtr& ring, int gen, int n) {
    if (n < 1) throw std::invalid_argument("quotient_bundle: n >= 1 required");
    const RingElement mx = -ring->generator(gen);
    std::vector<RingElement> chern;
    chern.reserve(n);
    RingElement p = ring->one();
    for (int i = 1; i <= n; ++i) {
        p = p * mx;
        chern.push_back(p);
    }
    return Bundle(ring, n, std::move(chern));
}

Bundle tangent_bundle_proj(const TowerPtr& ring, int gen, int n) {
    const RingElement h = hyperplane_class(ring, gen);
    std::vector<RingElement> chern;
    chern.reserve(n);
    RingElement p = ring->one();
    for (int i = 1; i <= n; ++i) {
        p = p * h;
        chern.push_back(binom(n + 1, i) * p);
    }
    return Bundle(ring, n, std::move(chern));
}

RingElement diagonal_class(const TowerPtr& prod_ring, int gen1, int gen2, int n) {
    const Bundle q = quotient_bundle(prod_ring, gen2, n);
    const RingElement l = hyperplane_class(prod_ring, gen1);
    const Bundle tw = bundle_tensor_line(prod_ring->theory()->fgl, q, l);
    return tw.chern_class(n);
}

std::vector<std::vector<Rational>> diagonal_matrix(const RingElement& cls, int gen1, int gen2,
                                                   int n) {
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (const auto& [m, c] : cls.terms()) {
        for (size_t j = 0; j < m.size(); ++j)
            if (static_cast<int>(j) != gen1 && static_cast<int>(j) != gen2 && m[j] != 0)
                throw std::invalid_argument("diagonal_matrix: class involves extra generators");
        a.at(m[gen1]).at(m[gen2]) = c;
    }
    return a;
}

std::vector<Rational> projection_functional(const TheoryPtr& theory, int n) {
    const TowerPtr prod = Space::product({n, n}).build(theory);
    const RingElement eta = diagonal_class(prod, 0, 1, n);
    const auto a = diagonal_matrix(eta, 0, 1, n);
    // sum_r a_{r,s} omega_r = delta_{s,0}
    std::vector<std::vector<Rational>> M(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> rhs(n + 1, Rational(0));
    rhs[0] = Rational(1);
    for (int s = 0; s <= n; ++s)
        for (int r = 0; r <= n; ++r) M[s][r] = a[r][s];
    std::vector<Rational> omega = solve_linear(std::move(M), std::move(rhs));
    for (int s = 0; s <= n; ++s) {
        Rational acc(0);
        for (int r = 0; r <= n; ++r) acc += a[r][s] * omega[r];
        if (acc != Rational(s == 0 ? 1 : 0))
            throw std::logic_error("projection_functional: polarity check failed");
    }
    return omega;
}

RingElement thom_class(const Bundle& V, const TowerPtr& completion, int gen) {
    const int n = V.rank;
    const RingElement x = completion->generator(gen);
    RingElement t = completion->zero();
    for (int i = 0; i <= n; ++i) {
        const RingElement ci = completion->embed(V.chern_class(i));
        const RingElement term = ci * pow(x, n - i);
        t += ((n - i) % 2) ? -term : term;
    }
    return t;
}

RingElement cl_class(const Bundle& F, const TowerPtr& proj_ring, int gen) {
    const int n = F.rank;
    const RingElement x = proj_ring->generator(gen);
    RingElement t = proj_ring->zero();
    for (int i = 0; i <= n - 1; ++i) {
        const RingElement ci = proj_ring->embed(F.chern_class(i));
        const RingElement term = ci * pow(x, n - 1 - i);
        t += ((n + 1 + i) % 2) ? -term : term;
    }
    return t;
}

RingElement pushforward_embedding(const RegEmbedding& i, const RingElement& lift) {
    if (lift.owner() != i.target)
        throw std::invalid_argument("pushforward_embedding: lift not in the target ring");
    return lift * i.eta;
}

Projection::Projection(TowerPtr source, TowerPtr target, int fiber_gen,
                       std::vector<int> gen_image, std::vector<Rational> omega)
    : source_(std::move(source)),
      target_(std::move(target)),
      fiber_gen_(fiber_gen),
      gen_image_(std::move(gen_image)),
      omega_(std::move(omega)) {
    const auto& g = source_->generator_info(fiber_gen_);
    if (!g.reduction.empty())
        throw std::invalid_argument("Projection: fiber factor must be a trivial extension");
    if (static_cast<int>(omega_.size()) != g.relation_degree)
        throw std::invalid_argument("Projection: functional length mismatch");
    if (source_->generator_count() != target_->generator_count() + 1)
        throw std::invalid_argument("Projection: generator counts inconsistent");
    for (int j = 0; j < source_->generator_count(); ++j) {
        if (j == fiber_gen_) continue;
        const int tj = gen_image_.at(j);
        if (source_->generator_info(j).relation_degree !=
            target_->generator_info(tj).relation_degree)
            throw std::invalid_argument("Projection: factor degrees do not match");
        if (!source_->generator_info(j).reduction.empty() ||
            !target_->generator_info(tj).reduction.empty())
            throw std::invalid_argument("Projection: base factors must be trivial extensions");
    }
}

RingElement Projection::apply(const RingElement& a) const {
    if (a.owner() != source_)
        throw std::invalid_argument("Projection::apply: element not in the source ring");
    std::map<Monomial, Rational> raw;
    for (const auto& [m, c] : a.terms()) {
        const Rational w = omega_[m[fiber_gen_]] * c;
        if (w.is_zero()) continue;
        Monomial tm(target_->generator_count(), 0);
        for (size_t j = 0; j < m.size(); ++j) {
            if (static_cast<int>(j) == fiber_gen_) continue;
            tm[gen_image_[j]] += m[j];
        }
        auto [it, inserted] = raw.emplace(std::move(tm), w);
        if (!inserted) it->second += w;
    }
    return target_->element(std::move(raw));
}

Projection make_projection(const TowerPtr& source, const TowerPtr& target, int fiber_gen) {
    const int n = source->generator_info(fiber_gen).relation_degree - 1;
    std::vector<Rational> omega = projection_functional(source->theory(), n);
    std::vector<int> gen_image(source->generator_count(), -1);
    int next = 0;
    for (int j = 0; j < source->generator_count(); ++j)
        if (j != fiber_gen) gen_image[j] = next++;
    return Projection(source, target, fiber_gen, std::move(gen_image), std::move(omega));
}

RegEmbedding embed_hypersurface(const TowerPtr& ring_pn, int d) {
    if (ring_pn->generator_count() != 1)
        throw std::invalid_argument("embed_hypersurface: expected E(P^n)");
    const int n = ring_pn->generator_info(0).relation_degree - 1;
    if (n < 1 || d < 1) throw std::invalid_argument("embed_hypersurface: need n >= 1, d >= 1");
    RegEmbedding e;
    e.name = "H" + std::to_string(d) + " in P" + std::to_string(n);
    e.codim = 1;
    e.target = ring_pn;
    e.eta = twist_class(ring_pn, 0, d);
    e.normal = Bundle::line(e.eta);
    return e;
}

RegEmbedding embed_linear(const TowerPtr& ring_pn, int m) {
    if (ring_pn->generator_count() != 1)
        throw std::invalid_argument("embed_linear: expected E(P^n)");
    const int n = ring_pn->generator_info(0).relation_degree - 1;
    if (m < 0 || m > n) throw std::invalid_argument("embed_linear: need 0 <= m <= n");
    RegEmbedding e;
    e.name = "P" + std::to_string(m) + " in P" + std::to_string(n);
    e.codim = n - m;
    e.target = ring_pn;
    e.source = Space::proj(m).build(ring_pn->theory());
    e.pullback = RingMap(ring_pn, e.source, {e.source->generator(0)});
    const RingElement h = hyperplane_class(ring_pn, 0);
    e.eta = pow(h, n - m);
    // Normal bundle O(1)^{n-m}: c_i = C(n-m, i) mu(x)^i, as a lift.
    std::vector<RingElement> chern;
    for (int i = 1; i <= n - m; ++i) chern.push_back(binom(n - m, i) * pow(h, i));
    e.normal = Bundle(ring_pn, n - m, std::move(chern));
    return e;
}

RegEmbedding embed_zero_section(const Bundle& V, const std::string& gen_name) {
    const TowerPtr& base = V.ring;
    const Bundle vplus = whitney_sum(V, Bundle::trivial(base, 1));
    const TowerPtr completion = ring_extend_proj(base, vplus, gen_name);
    const int xgen = completion->generator_count() - 1;
    RegEmbedding e;
    e.name = "zero section of rank-" + std::to_string(V.rank) + " bundle";
    e.codim = V.rank;
    e.target = completion;
    e.source = base;
    std::vector<RingElement> images;
    for (int i = 0; i < base->generator_count(); ++i) images.push_back(base->generator(i));
    images.push_back(base->zero());  // x restricts to c1(O) = 0 on the zero section
    e.pullback = RingMap(completion, base, std::move(images));
    e.eta = thom_class(V, completion, xgen);
    std::vector<RingElement> chern;
    for (int i = 1; i <= V.rank; ++i) chern.push_back(completion->embed(V.chern_class(i)));
    e.normal = Bundle(completion, V.rank, std::move(chern));
    return e;
}

RegEmbedding embed_diagonal(const TheoryPtr& theory, int n) {
    if (n < 1) throw std::invalid_argument("embed_diagonal: n >= 1 required");
    const TowerPtr prod = Space::product({n, n}).build(theory);
    const TowerPtr src = Space::proj(n).build(theory);
    RegEmbedding e;
    e.name = "diagonal of P" + std::to_string(n);
    e.codim = n;
    e.target = prod;
    e.source = src;
    e.pullback = RingMap(prod, src, {src->generator(0), src->generator(0)});
    e.eta = diagonal_class(prod, 0, 1, n);
    // Normal bundle T_{P^n}, lifted through the second factor.
    e.normal = tangent_bundle_proj(prod, 1, n);
    return e;
}

LciMap lci_proj_space(const TheoryPtr& theory, int n) {
    const TowerPtr ring = Space::proj(n).build(theory);
    LciMap f;
    f.name = "P" + std::to_string(n) + " -> pt";
    f.emb = embed_linear(ring, n);
    f.proj = make_projection(ring, RingTower::point(theory), 0);
    return f;
}

LciMap lci_proj_space_via(const TheoryPtr& theory, int n, int m) {
    if (m < n) throw std::invalid_argument("lci_proj_space_via: need m >= n");
    const TowerPtr ring = Space::proj(m).build(theory);
    LciMap f;
    f.name = "P" + std::to_string(n) + " -> pt via P" + std::to_string(m);
    f.emb = embed_linear(ring, n);
    f.proj = make_projection(ring, RingTower::point(theory), 0);
    return f;
}

LciMap lci_hypersurface(const TheoryPtr& theory, int n, int d) {
    const TowerPtr ring = Space::proj(n).build(theory);
    LciMap f;
    f.name = "H" + std::to_string(d) + " in P" + std::to_string(n) + " -> pt";
    f.emb = embed_hypersurface(ring, d);
    f.proj = make_projection(ring, RingTower::point(theory), 0);
    return f;
}

RingElement pushforward_lci(const LciMap& f, const RingElement& lift) {
    return f.proj.apply(pushforward_embedding(f.emb, lift));
}

VirtualBundle virtual_tangent(const LciMap& f) {
    const TowerPtr& R = f.emb.target;
    const int n = f.proj.fiber_dim();
    // Euler-sequence model: T_p = (n+1)[O(1)] - [O].
    const RingElement h = hyperplane_class(R, f.proj.fiber_gen());
    std::vector<RingElement> chern;
    for (int i = 1; i <= n + 1; ++i) chern.push_back(binom(n + 1, i) * pow(h, i));
    const Bundle pos(R, n + 1, std::move(chern));
    const Bundle neg = whitney_sum(Bundle::trivial(R, 1), f.emb.normal);
    return VirtualBundle(pos, neg);
}

RingElement change_orientation_pushforward(const LciMap& f, const PowerSeries1& G,
                                           const RingElement& lift) {
    const RingElement corr = mult_extension(ps_recip(G), virtual_tangent(f));
    return pushforward_lci(f, corr * lift);
}

GysinCheck excess_self_intersection(const RegEmbedding& i) {
    GysinCheck c;
    c.name = "self-intersection of " + i.name;
    const RingElement cn = i.normal.chern_class(i.codim);
    if (i.pullback) {
        const RingElement lhs = i.pullback->apply(i.eta);
        const RingElement rhs = i.pullback->apply(cn);
        c.lhs = lhs.str();
        c.rhs = rhs.str();
        c.equal = (lhs == rhs);
    } else {
        c.lhs = i.eta.str();
        c.rhs = cn.str();
        c.equal = (i.eta == cn);
    }
    return c;
}

GysinCheck excess_transversal(const TheoryPtr& theory, int n, int m, int k,
                              const RingElement& lift) {
    const TowerPtr ring_pn = lift.owner();
    const RegEmbedding i = embed_linear(ring_pn, m);
    const TowerPtr prod = Space::product({n, k}).build(theory);
    const RingMap pi(ring_pn, prod, {prod->generator(0)});
    const RingElement lhs = pi.apply(pushforward_embedding(i, lift));
    const RingElement eta_j = pow(hyperplane_class(prod, 0), n - m);
    const RingElement rhs = pi.apply(lift) * eta_j;
    GysinCheck c;
    c.name = "transversal excess P" + std::to_string(m) + " in P" + std::to_string(n) +
             " along xP" + std::to_string(k);
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.equal = (lhs == rhs);
    return c;
}

}  // namespace orcalc
