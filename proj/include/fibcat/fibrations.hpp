#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/core.hpp"

namespace fibcat {

// Counterexample payloads for the checkers; empty strings when unused.
struct LiftWitness {
  std::string object;     // e in E
  std::string morphism;   // f in B (or E where noted)
  std::string detail;
};

// g (a morphism of dom p) is p-cartesian iff every g' with the same codomain
// and every factorization p(g') = p(g)∘h admits a unique lift k of h with
// g' = g∘k. Exhaustive.
bool is_cartesian(const FinFunctor& p, int g);
bool is_cartesian_named(const FinFunctor& p, const std::string& g);
// Dual (lifts with specified domain factor uniquely on the other side).
bool is_opcartesian(const FinFunctor& p, int g);

// All p-cartesian g with codomain e and p(g) = f, ascending (lex) order.
// Requires p(e) = tgt(f).
std::vector<int> cartesian_lifts(const FinFunctor& p, int f, int e);

bool is_discrete_fibration(const FinFunctor& p,
                           LiftWitness* witness = nullptr);
// Internal form: (p1, cod) : E1 -> B1 ×_{B0} E0 is a bijection.
bool is_discrete_fibration_internal(const FinFunctor& p,
                                    LiftWitness* witness = nullptr);

bool is_fibration(const FinFunctor& p, LiftWitness* witness = nullptr);
bool is_opfibration(const FinFunctor& p, LiftWitness* witness = nullptr);
bool is_bifibration(const FinFunctor& p, LiftWitness* witness = nullptr);

// Fibration up to isomorphism: every f : b -> pe factors as p(g)∘h with g
// p-cartesian into e and h invertible.
bool is_street_fibration(const FinFunctor& p, LiftWitness* witness = nullptr);

// A chosen cartesian lift for every (f : b -> b', e over b'). Deterministic:
// identity lifts are preferred over identities, otherwise the lexicographic
// minimum (or maximum, for the alternative policy) among cartesian lifts.
struct Cleavage {
  FinFunctor p;
  // (morphism of B, object of E over tgt) -> chosen cartesian lift in E.
  std::map<std::pair<int, int>, int> lift;
  int at(int f, int e) const { return lift.at({f, e}); }
};

enum class CleavagePolicy { LexMin, LexMax };
Cleavage cleavage(const FinFunctor& p,
                  CleavagePolicy policy = CleavagePolicy::LexMin);

// m = cartesian ∘ vertical with p(vertical) an identity and cartesian the
// cleavage lift of p(m) at tgt(m).
std::pair<int, int> vertical_cartesian_factorization(const FinFunctor& p,
                                                     const Cleavage& cl,
                                                     int m);

// Full subcategory of E over b and id_b.
struct Fiber {
  CatPtr cat;
  std::vector<int> object_of;    // fiber obj idx -> E obj idx
  std::vector<int> morphism_of;  // fiber mor idx -> E mor idx
  FinFunctor include;            // fiber -> E
};
Fiber fiber(const FinFunctor& p, int b);

// f* : E_b -> E_{b'} for f : b' -> b, via the cleavage.
FinFunctor reindexing_functor(const FinFunctor& p, const Cleavage& cl, int f,
                              const Fiber& fiber_b, const Fiber& fiber_b_prime);

// Thm-2.9(ii)-style oracle: the canonical functor E^2 -> B/p admits a right
// adjoint right inverse (section with identity counit), searched exhaustively
// under the budget.
bool rari_characterization(const FinFunctor& p, StepBudget& budget);

}  // namespace fibcat
