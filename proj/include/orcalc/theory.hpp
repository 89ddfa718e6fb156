#pragma once

#include <memory>
#include <string>

#include "orcalc/fgl.hpp"

namespace orcalc {

// An oriented cohomology theory, determined computationally by its formal
// group law over Q. `graded` is false for the K-theory model, which collapses
// the Tate twist and works with one inhomogeneous ring.
struct Theory {
    std::string name;
    FormalGroupLaw fgl;
    bool graded = true;
    PowerSeries1 mu;  // formal inverse of fgl, cached

    int precision() const { return fgl.precision(); }
};

using TheoryPtr = std::shared_ptr<const Theory>;

// Constructors validate unit/symmetry/associativity of the law and throw on
// failure.
TheoryPtr theory_additive(int precision);
TheoryPtr theory_k(int precision);
// K-theory with the flipped orientation c1(L) = [L] - 1; law x + y + xy.
TheoryPtr theory_k_flip(int precision);
TheoryPtr make_theory(std::string name, FormalGroupLaw fgl, bool graded);

}  // namespace orcalc
