#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/core.hpp"
#include "fibcat/limits.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Profunctors A -|-> B: tabulated functors B^op x A -> Set.
//
// values[(b,a)] is the value set; element names are globally unique across
// all slots so actions can be keyed by element. For f : a -> a' the left
// action maps P(b,a) -> P(b,a'); for g : b' -> b the right action maps
// P(b,a) -> P(b',a).
// ---------------------------------------------------------------------------

struct Profunctor {
  CatPtr a, b;
  std::vector<std::vector<FinSet>> values;  // values[b_idx][a_idx]
  // left_action[f][b_idx] : P(b, src f) -> P(b, tgt f)
  std::vector<std::vector<FinFunction>> left_action;
  // right_action[g][a_idx] : P(tgt g, a) -> P(src g, a)
  std::vector<std::vector<FinFunction>> right_action;

  const FinSet& at(int b_idx, int a_idx) const { return values[b_idx][a_idx]; }
};

void validate_profunctor(const Profunctor& p);

// Componentwise map P(b,a) -> Q(b,a) commuting with both actions.
struct ProfunctorMorphism {
  std::vector<std::vector<FinFunction>> components;
};
void validate_profunctor_morphism(const Profunctor& from, const Profunctor& to,
                                  const ProfunctorMorphism& m);
bool profunctor_morphism_invertible(const Profunctor& from,
                                    const Profunctor& to,
                                    const ProfunctorMorphism& m);
// Searches for an invertible map (used by round trips and law checks when no
// constructive witness is at hand).
bool profunctors_isomorphic(const Profunctor& p, const Profunctor& q,
                            StepBudget& budget);

// Hom profunctor of A: values A(b, a) with composition as both actions.
Profunctor hom_profunctor(const CatPtr& a);

// ---------------------------------------------------------------------------
// Collages. The collage of P : A -|-> B is the category on obj(A) ⊔ obj(B)
// (sides prefixed a·/b·) with cross homs E(b̄, ā) = P(b,a) (elements named
// as-is) and none in the other direction; composition of cross arrows with
// side arrows is given by the actions.
// ---------------------------------------------------------------------------

struct Collage {
  CatPtr cat;
  FinFunctor include_a;  // A -> E
  FinFunctor include_b;  // B -> E
  Opspan as_opspan() const { return Opspan{include_b, include_a}; }
};

Collage collage(const Profunctor& p);

// Reads a collage-shaped opspan back into a profunctor; throws
// NotCollageShaped if the legs are not jointly bijective on objects, not
// fully faithful onto their sides, or a wrong-direction hom is non-empty.
Profunctor profunctor_of_collage(const Opspan& s);

// An opspan is recognized as a two-sided codiscrete cofibration iff it is
// isomorphic (under A and B) to the collage of its extracted profunctor.
bool is_codiscrete_cofibration(const Opspan& s);

// ---------------------------------------------------------------------------
// Gamuts and composition.
// ---------------------------------------------------------------------------

struct Gamut {
  CatPtr cat;
  FinFunctor include_a, include_b, include_c;
};

// Pushout-composite of collage(P) and collage(Q) along B; the A–C cross homs
// are the zigzag quotient of ⊔_b P(b,a) × Q(c,b) computed with union–find.
Gamut gamut(const Profunctor& p, const Profunctor& q);

// Q∘P : A -|-> C. The gamut route reads the A–C cross homs off the gamut;
// the coend route closes the same relation by fixpoint iteration without
// union–find and exists as an independent oracle.
Profunctor compose_via_gamut(const Profunctor& p, const Profunctor& q);
Profunctor compose_via_coend(const Profunctor& p, const Profunctor& q);

// Constructive comparison of the two routes (identity on representatives);
// validated invertible.
ProfunctorMorphism gamut_coend_comparison(const Profunctor& p,
                                          const Profunctor& q,
                                          const Profunctor& via_gamut,
                                          const Profunctor& via_coend);

}  // namespace fibcat
