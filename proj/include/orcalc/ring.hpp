#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orcalc/series.hpp"
#include "orcalc/theory.hpp"

namespace orcalc {

class RingTower;
using TowerPtr = std::shared_ptr<const RingTower>;

// Exponent vector, one slot per tower generator.
using Monomial = std::vector<int>;

inline int monomial_weight(const Monomial& m) {
    int w = 0;
    for (int e : m) w += e;
    return w;
}

// Element of a RingTower in reduced normal form: every generator exponent is
// strictly below its relation degree and no zero coefficients are stored.
class RingElement {
public:
    RingElement() = default;

    const TowerPtr& owner() const { return owner_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Coefficient of the empty monomial.
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    // Largest monomial weight present (0 for the zero element).
    int top_weight() const;
    // Sum of the terms of weight exactly q.
    RingElement weight_component(int q) const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Rational& s, RingElement a);
    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string str() const;

private:
    friend class RingTower;
    RingElement(TowerPtr owner, std::map<Monomial, Rational> reduced)
        : owner_(std::move(owner)), terms_(std::move(reduced)) {}

    TowerPtr owner_;
    std::map<Monomial, Rational> terms_;
};

RingElement pow(const RingElement& a, int e);  // e >= 0

// Multiplicative inverse of a unit-plus-nilpotent element (nonzero constant
// term); geometric series, exact by nilpotence.
RingElement elem_inverse(const RingElement& a);

// s(a) for a nilpotent element a (zero constant term); requires
// s.precision() >= top weight of the tower.
RingElement eval_series_at(const PowerSeries1& s, const RingElement& a);

// Presented graded-commutative ring built from the coefficient field Q by
// iterated projective-bundle extensions: each generator x has weight 1 and a
// monic relation x^{n+1} = (lower-order terms with coefficients from earlier
// stages). Immutable; extensions create new towers sharing the base.
class RingTower : public std::enable_shared_from_this<RingTower> {
public:
    struct Generator {
        std::string name;
        int relation_degree;                  // n+1 for a rank-(n+1) bundle
        std::map<Monomial, Rational> reduction;  // x^{relation_degree} rewritten
    };

    // E(point) = Q.
    static TowerPtr point(TheoryPtr theory);

    // Extension by the projective bundle of a rank-(n+1) bundle whose Chern
    // classes are the given elements of `base` (c[0] = c_1, ..., c[n] = c_{n+1}).
    static TowerPtr extend_proj(const TowerPtr& base, int rank,
                                const std::vector<RingElement>& chern,
                                const std::string& gen_name);

    const TheoryPtr& theory() const { return theory_; }
    const TowerPtr& base() const { return base_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const Generator& generator_info(int i) const { return gens_.at(i); }
    int generator_index(const std::string& name) const;
    int top_weight() const { return top_weight_; }

    RingElement zero() const;
    RingElement one() const { return scalar(Rational(1)); }
    RingElement scalar(const Rational& a) const;
    RingElement generator(int i) const;
    RingElement monomial(const Monomial& m, const Rational& coeff = Rational(1)) const;
    RingElement element(std::map<Monomial, Rational> raw) const;  // reduces

    // All reduced monomials; the free-module basis of the tower. Size is the
    // product of the relation degrees.
    std::vector<Monomial> basis() const;

    // Re-own an element of an ancestor tower (exponent vectors padded).
    RingElement embed(const RingElement& a) const;

    std::map<Monomial, Rational> reduce(std::map<Monomial, Rational> raw) const;

private:
    RingTower() = default;

    TheoryPtr theory_;
    TowerPtr base_;                  // null for the point
    std::vector<Generator> gens_;    // all generators, bottom-up
    int top_weight_ = 0;
};

// Ring homomorphism determined by generator images; construction verifies
// that every source relation maps to zero.
class RingMap {
public:
    RingMap(TowerPtr source, TowerPtr target, std::vector<RingElement> images);

    static RingMap identity(const TowerPtr& tower);

    const TowerPtr& source() const { return source_; }
    const TowerPtr& target() const { return target_; }
    const RingElement& image(int i) const { return images_.at(i); }

    RingElement apply(const RingElement& a) const;

private:
    TowerPtr source_, target_;
    std::vector<RingElement> images_;
};

// Coefficient-preserving transport between towers with identical generator
// counts and relation degrees (canonical lifts along linear-type inclusions).
RingElement transport_coefficients(const RingElement& a, const TowerPtr& target);

}  // namespace orcalc
