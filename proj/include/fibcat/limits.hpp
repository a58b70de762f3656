#pragma once

#include <string>
#include <vector>

#include "fibcat/core.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Spans and opspans.
//
// A span from A to B has legs  A <-left- apex -right-> B.
// An opspan from A to B has legs  A -right-> cod <-left- B
// (left : B -> C, right : A -> C, matching the serialized field names).
// ---------------------------------------------------------------------------

struct Opspan {
  FinFunctor left;   // f : B -> C
  FinFunctor right;  // g : A -> C
};
void validate_opspan(const Opspan& s);

struct Span {
  CatPtr apex;
  FinFunctor left;   // q : E -> A
  FinFunctor right;  // p : E -> B
};
void validate_span(const Span& s);

// ---------------------------------------------------------------------------
// Comma objects.
//
// comma(f: B->C, g: A->C) has objects (b, th: fb -> ga, a) named b·th·a,
// projections d -> B and c -> A and universal 2-cell alpha : f∘d => g∘c
// whose component at (b, th, a) is th.
// ---------------------------------------------------------------------------

struct CommaResult {
  CatPtr cat;
  FinFunctor c;    // to A = dom(right)
  FinFunctor d;    // to B = dom(left)
  NatTrans alpha;  // f∘d => g∘c
  // Triple decomposition, index-aligned with cat objects / morphisms.
  std::vector<std::array<int, 3>> objects;  // (b, theta, a)
  std::vector<std::pair<int, int>> morphisms;  // (u in B, v in A)
};

CommaResult comma(const Opspan& s);

// C/x and x/C as one-legged commas.
CommaResult slice(const CatPtr& c, const std::string& obj);
CommaResult coslice(const CatPtr& c, const std::string& obj);

// Strict pullback of f : A -> C along g : B -> C; objects and morphisms are
// pairs agreeing in C on the nose.
struct PullbackResult {
  CatPtr cat;
  FinFunctor proj1;  // to dom(f)
  FinFunctor proj2;  // to dom(g)
};
PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g);

// ---------------------------------------------------------------------------
// Cocomma objects.
//
// cocomma(q: E->A, p: E->B) is the category K on obj(A) ⊔ obj(B) (sides
// prefixed a·/b·) whose cross homs run from the B side to the A side:
//   K(b̄, ā) = ( ⊔_{e∈E} B(b, pe) × A(qe, a) ) / zigzag,
// with (pm∘β, α) over e' identified with (β, α∘qm) over e for m : e -> e'.
// The universal 2-cell lambda : i_B∘p => i_A∘q has component [(id, id)]_e.
// Cross composition acts on lexicographically minimal representatives and is
// re-checked for well-definedness on every class member after construction.
// ---------------------------------------------------------------------------

struct CocommaResult {
  CatPtr cat;
  FinFunctor include_a;  // A -> K
  FinFunctor include_b;  // B -> K
  NatTrans lambda;       // i_B ∘ p => i_A ∘ q
  Opspan as_opspan() const { return Opspan{include_b, include_a}; }
};

CocommaResult cocomma(const Span& s);

}  // namespace fibcat
