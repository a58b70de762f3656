#pragma once

#include <optional>
#include <string>

#include "fibcat/core.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/profunctor.hpp"

namespace fibcat {

// Per-clause verdicts for the two-sided discrete fibration conditions:
//  (i)  every q(e) -> a' has a unique lift with domain e over id_{p(e)};
//  (ii) every b' -> p(e) has a unique lift with codomain e over id_{q(e)};
//  (iii) each f factors as (lift of pf) ∘ (lift of qf) exactly.
struct TwoSidedWitness {
  bool clause_i = false, clause_ii = false, clause_iii = false;
  std::string counterexample;  // human-readable; empty when all hold
  bool holds() const { return clause_i && clause_ii && clause_iii; }
};

TwoSidedWitness is_two_sided_discrete_fibration(const Span& s);

// Def-2.19-style two-sided fibration: (op)cartesian lifts in identity fibers
// plus invertibility of the canonical comparison g_! f* e -> f* g_! e.
bool is_two_sided_fibration(const Span& s, std::string* witness = nullptr);

// Span <-> profunctor equivalence.
Profunctor profunctor_of_span(const Span& s);  // throws NotTSDFib
Span span_of_profunctor(const Profunctor& p);

bool roundtrip_tsdfib(const Span& s);
bool roundtrip_profunctor(const Profunctor& p);

// Apex isomorphism commuting with both legs on the nose.
std::optional<FinFunctor> span_isomorphism(const Span& s1, const Span& s2,
                                           StepBudget& budget);
bool spans_isomorphic(const Span& s1, const Span& s2, StepBudget& budget);

// Thm-2.18 packaging of the comma construction: A <- f/g -> B.
Span comma_span(const Opspan& s);
// comma(cocomma(span)), again packaged as a span from A to B.
Span comma_cocomma_reflect(const Span& s);

// Enumerates both span-map sets of the Yoneda statement and checks that
// precomposition with the canonical i : A -> B/f is a bijection.
bool yoneda_check(const Span& s, const FinFunctor& f, StepBudget& budget);

// (number of span maps B/b -> E over B, |F b|) for a discrete fibration p
// with presheaf F.
std::pair<int, int> yoneda_count(const FinFunctor& p, const std::string& b,
                                 StepBudget& budget);

}  // namespace fibcat
