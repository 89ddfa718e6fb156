#include "orcalc/theory.hpp"

#include <stdexcept>

namespace orcalc {

TheoryPtr make_theory(std::string name, FormalGroupLaw fgl, bool graded) {
    const FglValidation v = fgl_validate(fgl);
    if (!v.pass())
        throw std::invalid_argument("make_theory(" + name + "): formal group law invalid: " + v.detail);
    auto t = std::make_shared<Theory>();
    t->name = std::move(name);
    t->fgl = std::move(fgl);
    t->graded = graded;
    t->mu = fgl_inverse(t->fgl);
    return t;
}

TheoryPtr theory_additive(int precision) {
    return make_theory("additive", fgl_additive(precision), true);
}

TheoryPtr theory_k(int precision) {
    return make_theory("K", fgl_multiplicative(precision), false);
}

TheoryPtr theory_k_flip(int precision) {
    PowerSeries2 F = ps_add(PowerSeries2::var_x(precision), PowerSeries2::var_y(precision));
    F.set(1, 1, Rational(1));
    return make_theory("K-flip", fgl_custom(std::move(F), "multiplicative-flip"), false);
}

}  // namespace orcalc
