#pragma once

#include <string>
#include <vector>

#include "orcalc/fgl.hpp"
#include "orcalc/ring.hpp"

namespace orcalc {

// Vector bundle datum: rank plus Chern classes c_1..c_rank in the owner
// tower. c_0 = 1 implicitly. In graded theories each c_i must be homogeneous
// of weight i; in all theories the c_i are nilpotent (zero constant term).
struct Bundle {
    TowerPtr ring;
    int rank = 0;
    std::vector<RingElement> chern;  // size = rank

    Bundle() = default;
    Bundle(TowerPtr ring, int rank, std::vector<RingElement> chern);

    static Bundle trivial(const TowerPtr& ring, int rank);
    static Bundle line(const RingElement& c1);

    // c_i for 0 <= i; 1 for i = 0, 0 beyond the rank.
    RingElement chern_class(int i) const;
    // 1 + c_1 + ... + c_rank as one inhomogeneous element.
    RingElement total_chern() const;
};

// Formal difference pos - neg.
struct VirtualBundle {
    Bundle pos, neg;

    VirtualBundle() = default;
    VirtualBundle(Bundle pos, Bundle neg);
    explicit VirtualBundle(Bundle b);

    int virtual_rank() const { return pos.rank - neg.rank; }
};

// Whitney sum: ranks add, c_k = sum_{i+j=k} c_i(a) c_j(b).
Bundle whitney_sum(const Bundle& a, const Bundle& b);

// Newton identities over any commutative Q-algebra scalar type (used with
// both Rational and RingElement). e[i] is e_{i+1}; returns p_1..p_k. Missing
// elementary symmetric functions beyond e.size() are treated as zero.
template <class Elem>
std::vector<Elem> newton_e_to_p(const std::vector<Elem>& e, int k, const Elem& zero) {
    std::vector<Elem> p;
    p.reserve(k);
    for (int n = 1; n <= k; ++n) {
        Elem s = zero;
        for (int i = 1; i < n; ++i) {
            if (i > static_cast<int>(e.size())) break;
            const Elem t = e[i - 1] * p[n - i - 1];
            s = (i % 2) ? s + t : s - t;
        }
        if (n <= static_cast<int>(e.size())) {
            Elem t = Rational(n) * e[n - 1];
            s = (n % 2) ? s + t : s - t;
        }
        p.push_back(s);
    }
    return p;
}

// Inverse direction: returns e_1..e_k from p_1..p_k.
template <class Elem>
std::vector<Elem> newton_p_to_e(const std::vector<Elem>& p, int k, const Elem& zero) {
    if (k > static_cast<int>(p.size()))
        throw std::invalid_argument("newton_p_to_e: need p_1..p_k");
    std::vector<Elem> e;
    e.reserve(k);
    for (int n = 1; n <= k; ++n) {
        Elem s = zero;
        for (int i = 1; i <= n; ++i) {
            const Elem t = (i == n) ? p[i - 1] : e[n - i - 1] * p[i - 1];
            s = (i % 2) ? s + t : s - t;
        }
        e.push_back(Rational(1, n) * s);
    }
    return e;
}

// Power sums p_1..p_k of the Chern roots, via Newton from the Chern classes.
std::vector<RingElement> power_sums(const Bundle& b, int k);

// Multiplicative extension: the symmetric expression prod_j F(x_j) over the
// Chern roots, rewritten in the c_i. Requires F(0) invertible and
// F.precision() >= top weight of the ring. For a virtual bundle A - B this is
// F_x(A) * F_x(B)^{-1} (unit + nilpotent inversion).
RingElement mult_extension(const PowerSeries1& F, const Bundle& b);
RingElement mult_extension(const PowerSeries1& F, const VirtualBundle& b);

// Todd class: multiplicative extension of t/(1-e^{-t}).
RingElement todd_class(const Bundle& b);
RingElement todd_class(const VirtualBundle& b);

// Chern character rank + sum_k p_k/k!, for bundles whose Chern data already
// lives in an additive-theory ring.
RingElement chern_character(const VirtualBundle& b);
RingElement chern_character(const Bundle& b);

// e_i of the transformed roots g(x_1),...,g(x_n), where g is given by its
// coefficient list in the owner ring (g[k] multiplies t^k; g[0] must be
// nilpotent). The engine stays in the presented ring: power sums of the new
// roots are assembled from powers of g and power sums of the old roots.
Bundle roots_transform(const Bundle& b, const std::vector<RingElement>& g);

// Dual bundle: roots x_j |-> mu(x_j) for the formal inverse mu of the law.
Bundle bundle_dual(const FormalGroupLaw& fgl, const Bundle& b);

// Twist by a line bundle: roots x_j |-> F(x_j, c1L).
Bundle bundle_tensor_line(const FormalGroupLaw& fgl, const Bundle& b, const RingElement& c1L);

// Projective-bundle extension taking the bundle datum directly.
TowerPtr ring_extend_proj(const TowerPtr& base, const Bundle& V, const std::string& gen_name);

}  // namespace orcalc
