#include "orcalc/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orcalc {

namespace {

void check_same_owner(const RingElement& a, const RingElement& b, const char* what) {
    if (a.owner() != b.owner())
        throw std::invalid_argument(std::string(what) + ": elements belong to different rings");
}

}  // namespace

Rational RingElement::constant_term() const {
    if (!owner_) return Rational(0);
    Monomial m(owner_->generator_count(), 0);
    return coeff(m);
}

Rational RingElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RingElement::top_weight() const {
    int w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
    return w;
}

RingElement RingElement::weight_component(int q) const {
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) == q) out.emplace(m, c);
    return RingElement(owner_, std::move(out));
}

RingElement RingElement::operator-() const {
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : terms_) out.emplace(m, -c);
    return RingElement(owner_, std::move(out));
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_owner(*this, o, "elem_add");
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same_owner(a, b, "elem_mul");
    std::map<Monomial, Rational> raw;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = raw.emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    return RingElement(a.owner_, a.owner_->reduce(std::move(raw)));
}

RingElement operator*(const Rational& s, RingElement a) {
    if (s.is_zero()) return a.owner_ ? a.owner_->zero() : RingElement();
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.owner_ == b.owner_ && a.terms_ == b.terms_;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    // Monomials sorted by weight, then lexicographically.
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* l, auto* r) {
        const int wl = monomial_weight(l->first), wr = monomial_weight(r->first);
        if (wl != wr) return wl < wr;
        return l->first < r->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        Rational c = t->second;
        if (!first) {
            if (c < Rational(0)) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        std::string mono;
        for (size_t i = 0; i < t->first.size(); ++i) {
            const int e = t->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += owner_->generator_info(static_cast<int>(i)).name;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

RingElement pow(const RingElement& a, int e) {
    if (e < 0) throw std::invalid_argument("pow(RingElement): negative exponent");
    RingElement r = a.owner()->one();
    for (int k = 0; k < e; ++k) r = r * a;
    return r;
}

RingElement elem_inverse(const RingElement& a) {
    const Rational c0 = a.constant_term();
    if (c0.is_zero())
        throw std::invalid_argument("elem_inverse: element has zero constant term");
    const TowerPtr& R = a.owner();
    const RingElement nil = (Rational(1) / c0) * a - R->one();
    RingElement r = R->one(), p = R->one();
    for (int k = 1; k <= R->top_weight(); ++k) {
        p = p * nil;
        if (p.is_zero()) break;
        r += (k % 2 ? Rational(-1) : Rational(1)) * p;
    }
    return (Rational(1) / c0) * r;
}

RingElement eval_series_at(const PowerSeries1& s, const RingElement& a) {
    const TowerPtr& R = a.owner();
    if (!R) throw std::invalid_argument("eval_series_at: element has no ring");
    if (s.precision() < R->top_weight())
        throw std::invalid_argument("eval_series_at: series precision below tower top weight");
    if (!a.constant_term().is_zero())
        throw std::invalid_argument("eval_series_at: element must be nilpotent");
    RingElement r = R->scalar(s.at(0)), p = R->one();
    for (int k = 1; k <= R->top_weight(); ++k) {
        p = p * a;
        if (p.is_zero()) break;
        r += s.at(k) * p;
    }
    return r;
}

TowerPtr RingTower::point(TheoryPtr theory) {
    auto t = std::shared_ptr<RingTower>(new RingTower());
    t->theory_ = std::move(theory);
    return t;
}

TowerPtr RingTower::extend_proj(const TowerPtr& base, int rank,
                                const std::vector<RingElement>& chern,
                                const std::string& gen_name) {
    if (rank < 1) throw std::invalid_argument("extend_proj: rank must be >= 1");
    if (static_cast<int>(chern.size()) != rank)
        throw std::invalid_argument("extend_proj: need all Chern classes c_1..c_rank");
    for (const auto& c : chern)
        if (c.owner() != base)
            throw std::invalid_argument("extend_proj: Chern classes do not live in the base ring");

    auto t = std::shared_ptr<RingTower>(new RingTower());
    t->theory_ = base->theory_;
    t->base_ = base;
    t->gens_ = base->gens_;
    // Pad stored reductions with the new generator slot.
    for (auto& g : t->gens_) {
        std::map<Monomial, Rational> padded;
        for (const auto& [m, c] : g.reduction) {
            Monomial mm = m;
            mm.push_back(0);
            padded.emplace(std::move(mm), c);
        }
        g.reduction = std::move(padded);
    }
    // x^rank = sum_{i=1..rank} (-1)^{i+1} c_i x^{rank-i}.
    std::map<Monomial, Rational> red;
    for (int i = 1; i <= rank; ++i) {
        const Rational sign((i % 2) ? 1 : -1);
        for (const auto& [m, c] : chern[i - 1].terms()) {
            Monomial mm = m;
            mm.push_back(rank - i);
            auto [it, inserted] = red.emplace(std::move(mm), sign * c);
            if (!inserted) it->second += sign * c;
        }
    }
    for (auto it = red.begin(); it != red.end();)
        it = it->second.is_zero() ? red.erase(it) : std::next(it);
    t->gens_.push_back({gen_name, rank, std::move(red)});
    t->top_weight_ = base->top_weight_ + rank - 1;
    return t;
}

int RingTower::generator_index(const std::string& name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (gens_[i].name == name) return i;
    throw std::invalid_argument("RingTower: unknown generator '" + name + "'");
}

RingElement RingTower::zero() const {
    return RingElement(shared_from_this(), {});
}

RingElement RingTower::scalar(const Rational& a) const {
    if (a.is_zero()) return zero();
    std::map<Monomial, Rational> t;
    t.emplace(Monomial(gens_.size(), 0), a);
    return RingElement(shared_from_this(), std::move(t));
}

RingElement RingTower::generator(int i) const {
    if (i < 0 || i >= generator_count())
        throw std::invalid_argument("RingTower::generator: index out of range");
    Monomial m(gens_.size(), 0);
    m[i] = 1;
    return monomial(m);
}

RingElement RingTower::monomial(const Monomial& m, const Rational& coeff) const {
    if (static_cast<int>(m.size()) != generator_count())
        throw std::invalid_argument("RingTower::monomial: wrong arity");
    if (coeff.is_zero()) return zero();
    std::map<Monomial, Rational> t;
    t.emplace(m, coeff);
    return RingElement(shared_from_this(), reduce(std::move(t)));
}

RingElement RingTower::element(std::map<Monomial, Rational> raw) const {
    return RingElement(shared_from_this(), reduce(std::move(raw)));
}

std::vector<Monomial> RingTower::basis() const {
    std::vector<Monomial> out;
    Monomial m(gens_.size(), 0);
    while (true) {
        out.push_back(m);
        int i = 0;
        for (; i < generator_count(); ++i) {
            if (m[i] + 1 < gens_[i].relation_degree) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == generator_count()) break;
    }
    return out;
}

RingElement RingTower::embed(const RingElement& a) const {
    if (a.owner().get() == this) return a;
    // Find this tower's depth of the ancestor.
    const RingTower* anc = this;
    while (anc && anc != a.owner().get()) anc = anc->base_.get();
    if (!anc) throw std::invalid_argument("RingTower::embed: element is not from an ancestor tower");
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : a.terms()) {
        Monomial mm = m;
        mm.resize(gens_.size(), 0);
        out.emplace(std::move(mm), c);
    }
    return RingElement(shared_from_this(), std::move(out));
}

std::map<Monomial, Rational> RingTower::reduce(std::map<Monomial, Rational> raw) const {
    std::map<Monomial, Rational> out;
    std::vector<std::pair<Monomial, Rational>> work(raw.begin(), raw.end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        int over = -1;
        for (int i = generator_count() - 1; i >= 0; --i)
            if (m[i] >= gens_[i].relation_degree) {
                over = i;
                break;
            }
        if (over < 0) {
            auto [it, inserted] = out.emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
            continue;
        }
        Monomial rest = m;
        rest[over] -= gens_[over].relation_degree;
        for (const auto& [rm, rc] : gens_[over].reduction) {
            Monomial mm(rest.size());
            for (size_t i = 0; i < mm.size(); ++i) mm[i] = rest[i] + rm[i];
            work.emplace_back(std::move(mm), c * rc);
        }
    }
    return out;
}

RingMap::RingMap(TowerPtr source, TowerPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->generator_count())
        throw std::invalid_argument("RingMap: one image per source generator required");
    for (const auto& im : images_)
        if (im.owner() != target_)
            throw std::invalid_argument("RingMap: images must live in the target ring");
    // Every source relation must map to zero.
    for (int i = 0; i < source_->generator_count(); ++i) {
        const auto& g = source_->generator_info(i);
        RingElement lhs = pow(images_[i], g.relation_degree);
        RingElement rhs = apply(source_->element(std::map<Monomial, Rational>(g.reduction)));
        if (!(lhs == rhs))
            throw std::invalid_argument("RingMap: relation of generator '" + g.name +
                                        "' does not map to zero");
    }
}

RingMap RingMap::identity(const TowerPtr& tower) {
    std::vector<RingElement> images;
    for (int i = 0; i < tower->generator_count(); ++i) images.push_back(tower->generator(i));
    return RingMap(tower, tower, std::move(images));
}

RingElement RingMap::apply(const RingElement& a) const {
    if (a.owner() != source_)
        throw std::invalid_argument("RingMap::apply: element not in the source ring");
    RingElement out = target_->zero();
    for (const auto& [m, c] : a.terms()) {
        RingElement term = target_->scalar(c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * pow(images_[i], m[i]);
        out += term;
    }
    return out;
}

RingElement transport_coefficients(const RingElement& a, const TowerPtr& target) {
    const TowerPtr& src = a.owner();
    if (src->generator_count() != target->generator_count())
        throw std::invalid_argument("transport_coefficients: generator counts differ");
    std::map<Monomial, Rational> raw(a.terms().begin(), a.terms().end());
    return target->element(std::move(raw));
}

}  // namespace orcalc
