#pragma once

#include <string>
#include <vector>

#include "fibcat/core.hpp"
#include "fibcat/fibrations.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Presheaves: contravariant Set-valued functors with tabulated actions.
// For a morphism f : b' -> b of the base, action[f] : F(b) -> F(b').
// ---------------------------------------------------------------------------

struct Presheaf {
  CatPtr base;
  std::vector<FinSet> values;          // per object
  std::vector<FinFunction> action;     // per morphism, F(tgt f) -> F(src f)
};

void validate_presheaf(const Presheaf& f);

// Invertible-or-not map of presheaves over the same base: components
// F(b) -> G(b) commuting with the actions.
struct PresheafMorphism {
  std::vector<FinFunction> components;
};
void validate_presheaf_morphism(const Presheaf& from, const Presheaf& to,
                                const PresheafMorphism& m);
bool presheaf_morphism_invertible(const Presheaf& from, const Presheaf& to,
                                  const PresheafMorphism& m);

// ---------------------------------------------------------------------------
// Category of elements; objects (b, x) named b·x, a morphism f·x' for every
// f : b -> b' and x' with F(f)(x') = x. The projection is a discrete
// fibration.
// ---------------------------------------------------------------------------

struct ElementsResult {
  CatPtr cat;
  FinFunctor projection;
  std::vector<std::pair<int, int>> objects;  // (base obj, element idx)
};
ElementsResult elements(const Presheaf& f);

// Inverse direction of Thm "DFib(B) ~ presheaves": fibers as values, actions
// by unique-lift domains. Throws NotADiscreteFibration.
Presheaf presheaf_of(const FinFunctor& p);

bool roundtrip_dfib(const FinFunctor& p);
bool roundtrip_presheaf(const Presheaf& f);

// ---------------------------------------------------------------------------
// Strict Cat-valued functors (contravariant) and the Grothendieck total.
// For f : b' -> b, at(f) : G(b) -> G(b'); strict functoriality is validated.
// ---------------------------------------------------------------------------

struct CatValuedFunctor {
  CatPtr base;
  std::vector<CatPtr> fibers;        // per object of base
  std::vector<FinFunctor> actions;   // per morphism f: G(tgt f) -> G(src f)
};
void validate_cat_valued(const CatValuedFunctor& g);

struct GrothendieckResult {
  CatPtr cat;
  FinFunctor projection;
  std::vector<std::pair<int, int>> objects;  // (base obj, fiber obj idx)
};
GrothendieckResult grothendieck_strict(const CatValuedFunctor& g);

// ---------------------------------------------------------------------------
// Cleavage-extracted pseudofunctor data and its coherence laws.
// gamma[(f,g)] : (g∘f)* => f*∘g* for composable f then g; iota[b] : (id_b)* => Id.
// ---------------------------------------------------------------------------

struct PseudofunctorData {
  FinFunctor p;
  Cleavage cl;
  std::vector<Fiber> fibers;               // per base object
  std::map<int, FinFunctor> reindexings;   // base morphism f -> f*
  std::map<std::pair<int, int>, NatTrans> gamma;  // (f, g) composable, g after f
  std::map<int, NatTrans> iota;            // base object b
};

PseudofunctorData pseudofunctor_of(const FinFunctor& p, const Cleavage& cl);
bool verify_coherence(const PseudofunctorData& data);

}  // namespace fibcat
