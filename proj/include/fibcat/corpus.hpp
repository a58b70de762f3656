#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibcat/core.hpp"
#include "fibcat/grothendieck.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/profunctor.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Stock categories used throughout the tests and the bundled suites.
// ---------------------------------------------------------------------------

CatPtr cat_empty();
CatPtr cat_one();    // terminal category; object "*"
CatPtr cat_two();    // walking arrow 0 -> 1 named "a"
CatPtr cat_disc2();  // two objects, identities only
CatPtr cat_iso();    // x ~= y via s, s_inv
CatPtr cat_cospan(); // 0 -> 2 <- 1 via f, g
CatPtr cat_span();   // 0 <- 2 -> 1 (opposite of cospan, relabeled arrows)
CatPtr cat_square(); // poset product 2x2: bot < l, r < top
CatPtr cat_z2();     // one object, s with s*s = id
CatPtr cat_parallelentry(); // two parallel arrows 0 => 1

// The functor One -> c picking the named object.
FinFunctor const_functor(const CatPtr& c, const std::string& obj);
// Constant endofunctor-style functor dom -> cod at the named object.
FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod,
                            const std::string& obj);

// ---------------------------------------------------------------------------
// Deterministic random corpus. All draws come from a seeded mt19937_64 and
// avoid distribution classes, so output is identical across platforms.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  // Uniform in [0, n) by rejection; n > 0.
  int below(int n);
  bool chance(int num, int den);  // true with probability num/den

 private:
  std::uint64_t state_;
};

struct CorpusOptions {
  int max_objects = 4;
  int max_extra_morphisms = 4;  // non-identity generators
  int max_value_size = 3;       // presheaf / profunctor value sets
};

// Random categories are built from recipes that are categories by
// construction (free category on a DAG multigraph, subcategories of finite
// sets closed under composition, posets, and products/opposites/sums of
// those) and re-validated.
CatPtr random_category(Rng& rng, const CorpusOptions& opt);
// Random functor between random categories (uniform choice among the
// enumerated functors, capped); returns nothing if none exists in budget.
std::optional<FinFunctor> random_functor(const CatPtr& c, const CatPtr& d,
                                         Rng& rng, StepBudget& budget);
Presheaf random_presheaf(const CatPtr& base, Rng& rng, const CorpusOptions& opt);
Profunctor random_profunctor(const CatPtr& a, const CatPtr& b, Rng& rng,
                             const CorpusOptions& opt);

// Fibrations with controlled fibers: strict Grothendieck totals over a random
// base, plus the stock cod/dom projections.
struct FibrationFixture {
  std::string name;
  FinFunctor p;
};
std::vector<FibrationFixture> corpus_fibrations(Rng& rng, int count,
                                                const CorpusOptions& opt);

}  // namespace fibcat
