#pragma once

#include <string>

#include "orcalc/ring.hpp"
#include "orcalc/theory.hpp"

namespace orcalc {

// Morphism of oriented theories, determined on P^infty by the image series
// s(t) of the source orientation class expressed in the target orientation
// class: s(0) = 0, s'(0) = 1.
struct TheoryMorphism {
    TheoryPtr source;
    TheoryPtr target;
    PowerSeries1 image;  // s

    TheoryMorphism(TheoryPtr source, TheoryPtr target, PowerSeries1 image);
};

// The unit series G with s(t) = G(t) * t.
PowerSeries1 extract_G(const TheoryMorphism& phi);

// The Chern character morphism K -> additive: s(t) = 1 - e^{-t}.
TheoryMorphism chern_character_morphism(const TheoryPtr& k_theory, const TheoryPtr& additive);

// Identity morphism of a theory (s(t) = t).
TheoryMorphism identity_morphism(const TheoryPtr& theory);

// The orientation flip c1 |-> [L] - 1 of K-theory, as a morphism from the
// flipped presentation to the standard one: s(t) = t/(1-t).
TheoryMorphism k_flip_morphism(const TheoryPtr& k_flip, const TheoryPtr& k_theory);

// Realize phi on presented rings: generator-wise x |-> s(x-bar) between
// structurally parallel towers of the two theories. Relations are checked at
// construction.
RingMap morphism_ring_map(const TheoryMorphism& phi, const TowerPtr& source,
                          const TowerPtr& target);

RingElement morphism_apply(const TheoryMorphism& phi, const TowerPtr& source,
                           const TowerPtr& target, const RingElement& a);

}  // namespace orcalc
