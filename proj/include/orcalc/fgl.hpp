#pragma once

#include <string>

#include "orcalc/series.hpp"

namespace orcalc {

// Formal group law of an orientation: the series F(x,y) with
// c1(L1 (x) L2) = F(c1(L1), c1(L2)), truncated at total degree `precision`.
struct FormalGroupLaw {
    PowerSeries2 F;
    std::string name;

    int precision() const { return F.precision(); }
};

// F = x + y.
FormalGroupLaw fgl_additive(int precision);

// F = x + y - xy (the law of c1(L) = 1 - [L*]).
FormalGroupLaw fgl_multiplicative(int precision);

// Wrap an arbitrary series; no validation performed (validation is an
// explicit operation so that deliberately broken laws can be tested).
FormalGroupLaw fgl_custom(PowerSeries2 F, std::string name);

struct FglValidation {
    bool unit_ok = false;         // F(x,0) = x and F(0,y) = y
    bool symmetric_ok = false;    // F(x,y) = F(y,x)
    bool associative_ok = false;  // F(F(x,y),z) = F(x,F(y,z))
    std::string detail;

    bool pass() const { return unit_ok && symmetric_ok && associative_ok; }
};

FglValidation fgl_validate(const FormalGroupLaw& fgl);

// The symmetric series f with F = x + y + xy*f(x,y); throws when F - x - y is
// not divisible by xy. Result precision is precision(F) - 2.
PowerSeries2 fgl_f_part(const FormalGroupLaw& fgl);

// The series mu with mu(0) = 0 and F(t, mu(t)) = 0, solved degree by degree.
PowerSeries1 fgl_inverse(const FormalGroupLaw& fgl);

// [d]_F(t): the d-fold formal sum of t; [0]=0, [1]=t, [-d] = mu([d]).
PowerSeries1 fgl_n_series(const FormalGroupLaw& fgl, int d);

}  // namespace orcalc
