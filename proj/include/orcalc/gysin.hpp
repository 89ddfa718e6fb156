#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orcalc/bundle.hpp"
#include "orcalc/ring.hpp"

namespace orcalc {

// Tower-of-projective-bundles space description; the catalog only needs
// chains of trivial extensions over the point (P^n and products).
class Space {
public:
    static Space point() { return Space{}; }
    static Space proj(int n) { return Space{{n}}; }
    static Space product(std::vector<int> dims) { return Space{std::move(dims)}; }

    int factors() const { return static_cast<int>(dims_.size()); }
    int dim(int i) const { return dims_.at(i); }
    int dimension() const;
    std::string describe() const;  // "pt", "P2", "P1xP1"

    // E(this space): one generator x (or x1, x2, ...) per factor.
    TowerPtr build(const TheoryPtr& theory) const;

private:
    Space() = default;
    explicit Space(std::vector<int> dims) : dims_(std::move(dims)) {}
    std::vector<int> dims_;
};

// The weight-1 tower generator x = c1(O(-1)) of the given factor.
RingElement orientation_class(const TowerPtr& ring, int gen);
RingElement orientation_class(const TowerPtr& ring, const std::string& gen_name);

// c1(O(1)) = mu(x) for the formal inverse mu of the theory's law.
RingElement hyperplane_class(const TowerPtr& ring, int gen);

// c1(O(d)) = [d]_F(mu(x)).
RingElement twist_class(const TowerPtr& ring, int gen, int d);

// The class [O(d)] in a K-theory (multiplicative-law) ring: (1-y)^d, any
// integer d.
RingElement k_line_class(const TowerPtr& ring, int gen, int d);

// Canonical quotient bundle of rank n on E(P^n): c_i(Q) = (-x)^i, from the
// Whitney sum along 0 -> O(-1) -> O^{n+1} -> Q -> 0.
Bundle quotient_bundle(const TowerPtr& ring, int gen, int n);

// Tangent bundle of P^n in the Euler-sequence model: rank n with
// c_i = C(n+1, i) mu(x)^i, as classes at the given generator.
Bundle tangent_bundle_proj(const TowerPtr& ring, int gen, int n);

// Fundamental class of the diagonal in E(P^n x P^n): the top Chern class of
// p1*O(1) (x) p2*Q.
RingElement diagonal_class(const TowerPtr& prod_ring, int gen1, int gen2, int n);

// Matrix (a_{r,s}) of a class sum a_{r,s} x1^r x2^s on the monomial basis.
std::vector<std::vector<Rational>> diagonal_matrix(const RingElement& cls, int gen1, int gen2,
                                                   int n);

// Values omega(x^0..x^n) of the Gysin projection functional for P^n over the
// point: the unique solution of sum_r a_{r,s} omega_r = delta_{s,0}. Throws
// on a singular polarity matrix.
std::vector<Rational> projection_functional(const TheoryPtr& theory, int n);

// Thom class on E(P(V+1)): the top Chern class of the canonical quotient,
// sum_i (-1)^{n-i} c_i(V) x^{n-i}; restricts to c_n(V) on the zero section
// and to c1(V) - x for a line bundle.
RingElement thom_class(const Bundle& V, const TowerPtr& completion, int gen);

// Cl_{Z,F} = sum_{i=0}^{n-1} (-1)^{n+1+i} c_i(F) x^{n-1-i} on E(P(F)), F of
// rank n; satisfies x * Cl = c_n(F).
RingElement cl_class(const Bundle& F, const TowerPtr& proj_ring, int gen);

// Pushforward data of a regular embedding i: Z -> X in forgotten-support
// form: multiplication by the fundamental class eta. When the source ring is
// not determined by the data in scope (hypersurfaces) it is left
// unmaterialized and classes on Z are always presented as i*(lift).
struct RegEmbedding {
    std::string name;
    int codim = 0;
    TowerPtr target;
    TowerPtr source;                  // null for a virtual source
    std::optional<RingMap> pullback;  // target -> source, when modeled
    RingElement eta;                  // in target, weight = codim
    Bundle normal;                    // pulled-back representative over target
};

// i_*(a) for a = i*(lift): lift * eta.
RingElement pushforward_embedding(const RegEmbedding& i, const RingElement& lift);

// Gysin projection p_*: E(P^n_X) -> E(X) given by the polarity-derived
// functional, applied to one designated fiber generator and extended
// base-linearly.
class Projection {
public:
    Projection(TowerPtr source, TowerPtr target, int fiber_gen, std::vector<int> gen_image,
               std::vector<Rational> omega);

    const TowerPtr& source() const { return source_; }
    const TowerPtr& target() const { return target_; }
    int fiber_gen() const { return fiber_gen_; }
    int fiber_dim() const { return static_cast<int>(omega_.size()) - 1; }
    const std::vector<Rational>& omega() const { return omega_; }

    RingElement apply(const RingElement& a) const;

private:
    TowerPtr source_, target_;
    int fiber_gen_;
    std::vector<int> gen_image_;  // source gen (!= fiber) -> target gen
    std::vector<Rational> omega_;
};

// Build the projection integrating out `fiber_gen` (whose relation must be
// trivial, i.e. a product factor); remaining generators map to the target in
// order.
Projection make_projection(const TowerPtr& source, const TowerPtr& target, int fiber_gen);

// Built-in embeddings.
RegEmbedding embed_hypersurface(const TowerPtr& ring_pn, int d);      // H_d in P^n, virtual source
RegEmbedding embed_linear(const TowerPtr& ring_pn, int m);            // P^m in P^n
RegEmbedding embed_zero_section(const Bundle& V, const std::string& gen_name = "x");
RegEmbedding embed_diagonal(const TheoryPtr& theory, int n);          // P^n in P^n x P^n

// Projective lci map assembled from a factorization f = p o i.
struct LciMap {
    std::string name;
    RegEmbedding emb;  // into E(P^n_X)
    Projection proj;   // E(P^n_X) -> E(X)
};

// P^n -> pt via the identity embedding, or via a linear embedding into P^m.
LciMap lci_proj_space(const TheoryPtr& theory, int n);
LciMap lci_proj_space_via(const TheoryPtr& theory, int n, int m);
// H_d in P^n -> pt.
LciMap lci_hypersurface(const TheoryPtr& theory, int n, int d);

RingElement pushforward_lci(const LciMap& f, const RingElement& lift);

// T_f = i*T_p - N_i, presented by lifts over the embedding target E(P^n_X).
VirtualBundle virtual_tangent(const LciMap& f);

// f_*(G^{-1}_x(T_f) * a) for a unit series G.
RingElement change_orientation_pushforward(const LciMap& f, const PowerSeries1& G,
                                           const RingElement& lift);

// Built-in excess / self-intersection instances.
struct GysinCheck {
    std::string name;
    std::string lhs, rhs;
    bool equal = false;
};

// i*i_*(1) = c_codim(N): compares through the pullback when the source is
// modeled, upstairs otherwise.
GysinCheck excess_self_intersection(const RegEmbedding& i);

// Transversal base change of P^m in P^n along the projection from
// P^n x P^k (zero excess): pi* i_*(lift) = j_*(pi'* restriction).
GysinCheck excess_transversal(const TheoryPtr& theory, int n, int m, int k,
                              const RingElement& lift);

}  // namespace orcalc
