#pragma once

#include "fibcat/core.hpp"
#include "fibcat/grothendieck.hpp"

namespace fibcat {

// Final: every coslice comma d/f is non-empty and connected. Initial is the
// dual through opposites.
bool is_final(const FinFunctor& f);
bool is_initial(const FinFunctor& f);

struct FactorizationResult {
  FinFunctor left;
  CatPtr middle;
  FinFunctor right;
};

// f = (discrete fibration) ∘ (final), middle = elements of d |-> pi0(d/f).
FactorizationResult comprehensive_factorize(const FinFunctor& f);

// Unique-diagonal lifting against every commuting square, searched
// exhaustively under the budget.
bool check_orthogonal(const FinFunctor& e, const FinFunctor& m,
                      StepBudget& budget);

// f = (fully faithful) ∘ (surjective on objects) through the full image.
FactorizationResult eso_ff_factorize(const FinFunctor& f);

}  // namespace fibcat
