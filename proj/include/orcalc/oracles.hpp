#pragma once

#include <stdexcept>

#include "orcalc/rational.hpp"

namespace orcalc {

// Classical oracles. These deliberately share nothing with the series/ring
// engine: binomial products and rational arithmetic only.

// chi(P^n, O(d)) = C(n+d, n) = prod_{k=1..n} (d+k)/k, valid for all integers d.
inline Rational euler_char_oracle(int n, int d) {
    if (n < 0) throw std::invalid_argument("euler_char_oracle: n >= 0 required");
    Rational r(1);
    for (int k = 1; k <= n; ++k) r *= Rational(d + k, k);
    return r;
}

// chi(O_H) for a degree-d hypersurface H in P^n, from the ideal-sheaf
// sequence: chi(P^n, O) - chi(P^n, O(-d)).
inline Rational hypersurface_chi_oracle(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("hypersurface_chi_oracle: n, d >= 1 required");
    return euler_char_oracle(n, 0) - euler_char_oracle(n, -d);
}

// Degree map on CH(P^n): p_*(h^k) = 1 if k = n else 0.
inline Rational chow_pushforward_oracle(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("chow_pushforward_oracle: 0 <= k <= n required");
    return Rational(k == n ? 1 : 0);
}

}  // namespace orcalc
