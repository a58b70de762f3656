#include "doctest.h"

#include "fibcat/corpus.hpp"
#include "fibcat/fibrations.hpp"
#include "fibcat/limits.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace fibcat::testing;

namespace {

FinFunctor cod_over(const CatPtr& c) {
  StepBudget b;
  return arrow_category(c, b).cod_proj;
}

FinFunctor dom_over(const CatPtr& c) {
  StepBudget b;
  return arrow_category(c, b).dom_proj;
}

}  // namespace

TEST_SUITE_BEGIN("fibrations");

TEST_CASE("identities are cartesian") {
  auto p = cod_over(cat_square());
  const auto& E = *p.dom;
  for (int o = 0; o < E.num_objects(); ++o)
    CHECK(is_cartesian(p, E.id_of(o)));
}

TEST_CASE("pullback squares are cartesian, non-pullbacks are not") {
  auto p = cod_over(cat_square());
  // id_l -> id_top over lt is the pullback of id_top along lt.
  CHECK(is_cartesian_named(p, joined({"lt", "lt", "id_l", "id_top"})));
  // bt -> id_top over id_top is a commuting square but not a pullback.
  CHECK_FALSE(is_cartesian_named(p, joined({"bt", "id_top", "bt", "id_top"})));
}

TEST_CASE("cartesian lifts") {
  auto p = cod_over(cat_square());
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  SUBCASE("identity morphisms lift to identities") {
    int e = E.obj("bt");
    auto lifts = cartesian_lifts(p, B.id_of(B.obj("top")), e);
    CHECK(std::find(lifts.begin(), lifts.end(), E.id_of(e)) != lifts.end());
  }
  SUBCASE("incompatible object throws") {
    CHECK_THROWS_WITH_AS(cartesian_lifts(p, p.cod->mor("bl"), p.dom->obj("id_top")),
                         doctest::Contains("Incompatible"), ValidationError);
  }
  SUBCASE("missing pullback yields no lift") {
    auto q = cod_over(cat_cospan());
    // Lift f : 0 -> 2 at the arrow g (codomain 2): needs the pullback of the
    // cospan, which is missing.
    auto lifts = cartesian_lifts(q, q.cod->mor("f"), q.dom->obj("g"));
    CHECK(lifts.empty());
  }
}

TEST_CASE("discrete fibration checkers agree") {
  auto idf = identity_functor(cat_square());
  CHECK(is_discrete_fibration(idf));
  CHECK(is_discrete_fibration_internal(idf));

  auto p = cod_over(cat_two());
  LiftWitness w;
  CHECK_FALSE(is_discrete_fibration(p, &w));
  CHECK_FALSE(is_discrete_fibration_internal(p));
  CHECK_FALSE(w.object.empty());

  SUBCASE("agreement on random functors") {
    Rng rng(3);
    CorpusOptions opt;
    int done = 0;
    while (done < 60) {
      auto c = random_category(rng, opt);
      auto d = random_category(rng, opt);
      if (c->num_morphisms() > 8 || d->num_morphisms() > 8) continue;
      StepBudget budget{500'000, 0};
      std::optional<FinFunctor> f;
      try {
        f = random_functor(c, d, rng, budget);
      } catch (const CapExceeded&) {
        continue;
      }
      if (!f) continue;
      CHECK(is_discrete_fibration(*f) == is_discrete_fibration_internal(*f));
      ++done;
    }
  }
}

TEST_CASE("the motivating example: cod and dom projections") {
  CHECK(is_fibration(cod_over(cat_square())));       // Square has pullbacks
  CHECK(is_opfibration(cod_over(cat_square())));     // cod is always an opfibration
  CHECK_FALSE(is_fibration(cod_over(cat_cospan()))); // missing pullback
  CHECK(is_opfibration(cod_over(cat_cospan())));
  CHECK(is_fibration(dom_over(cat_square())));       // dom is always a fibration
  CHECK(is_opfibration(dom_over(cat_square())));     // Square has pushouts
  CHECK_FALSE(is_opfibration(dom_over(opposite(cat_cospan()))));
  CHECK(is_bifibration(cod_over(cat_square())));
  LiftWitness w;
  CHECK_FALSE(is_fibration(cod_over(cat_cospan()), &w));
  CHECK(!w.morphism.empty());
}

TEST_CASE("functors into the point are fibrations") {
  for (const auto& c : {cat_two(), cat_iso(), cat_z2(), cat_square()})
    CHECK(is_fibration(constant_functor(c, cat_one(), "*")));
}

TEST_CASE("street fibrations") {
  SUBCASE("classical fibrations are street fibrations") {
    for (const auto& p : {cod_over(cat_square()), dom_over(cat_square()),
                          identity_functor(cat_iso())})
      CHECK(is_street_fibration(p));
  }
  SUBCASE("the equivalence One -> Iso is street but not classical") {
    auto incl = functor_of(cat_one(), cat_iso(), {{"*", "x"}}, {});
    CHECK(is_street_fibration(incl));
    CHECK_FALSE(is_fibration(incl));
  }
  SUBCASE("Iso -> One is both") {
    auto p = constant_functor(cat_iso(), cat_one(), "*");
    CHECK(is_fibration(p));
    CHECK(is_street_fibration(p));
  }
}

TEST_CASE("cleavages") {
  SUBCASE("identity functor lifts every morphism to itself") {
    auto cl = cleavage(identity_functor(cat_square()));
    for (const auto& [key, lift] : cl.lift) CHECK(lift == key.first);
  }
  SUBCASE("the two policies differ on the group fiber") {
    auto p = constant_functor(cat_z2(), cat_one(), "*");
    auto lo = cleavage(p, CleavagePolicy::LexMin);
    auto hi = cleavage(p, CleavagePolicy::LexMax);
    int e = cat_z2()->obj("*");
    int f = cat_one()->id_of(cat_one()->obj("*"));
    CHECK(lo.at(f, e) == cat_z2()->id_of(e));
    CHECK(hi.at(f, e) == cat_z2()->mor("s"));
  }
  SUBCASE("not a fibration") {
    CHECK_THROWS_WITH_AS(cleavage(cod_over(cat_cospan())),
                         doctest::Contains("NotAFibration"), ValidationError);
  }
}

TEST_CASE("vertical-cartesian factorization recomposes") {
  auto p = cod_over(cat_square());
  auto cl = cleavage(p);
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  for (int m = 0; m < E.num_morphisms(); ++m) {
    auto [vertical, cartesian] = vertical_cartesian_factorization(p, cl, m);
    CHECK(E.compose(cartesian, vertical) == m);
    CHECK(B.is_identity(p.mor_map[vertical]));
    CHECK(cartesian == cl.at(p.mor_map[m], E.tgt(m)));
  }
  SUBCASE("vertical morphisms factor as (m, id)") {
    int m = E.mor(joined({"id_bot", "bl", "id_bot", "bl"}));  // vertical over id
    REQUIRE(B.is_identity(p.mor_map[m]));
    auto [vertical, cartesian] = vertical_cartesian_factorization(p, cl, m);
    CHECK(vertical == m);
    CHECK(E.is_identity(cartesian));
  }
}

TEST_CASE("fibers and reindexing") {
  auto p = cod_over(cat_square());
  auto cl = cleavage(p);
  const auto& B = *p.cod;
  auto fib_top = fiber(p, B.obj("top"));
  auto fib_l = fiber(p, B.obj("l"));
  auto fib_bot = fiber(p, B.obj("bot"));
  CHECK(fib_top.cat->num_objects() == 4);  // arrows into top
  CHECK(fib_l.cat->num_objects() == 2);
  CHECK(fib_bot.cat->num_objects() == 1);

  SUBCASE("reindexing along lt is the meet with l") {
    auto r = reindexing_functor(p, cl, B.mor("lt"), fib_top, fib_l);
    // bot -> top reindexes to bot -> l; l -> top to id_l.
    CHECK(fib_l.cat->objects[r.obj_map[fib_top.cat->obj("bt")]] == "bl");
    CHECK(fib_l.cat->objects[r.obj_map[fib_top.cat->obj("lt")]] == "id_l");
  }
  SUBCASE("reindexing along an identity is naturally isomorphic to the identity") {
    auto r = reindexing_functor(p, cl, B.id_of(B.obj("l")), fib_l, fib_l);
    StepBudget b;
    CHECK(is_naturally_isomorphic(r, identity_functor(fib_l.cat), b).has_value());
  }
}

TEST_CASE("closure under composition and pullback (fixtures)") {
  auto p = cod_over(cat_square());
  SUBCASE("pullback of a fibration is a fibration") {
    auto h = functor_of(cat_two(), cat_square(), {{"0", "bot"}, {"1", "l"}},
                        {{"a", "bl"}});
    auto pb = pullback_cat(p, h);
    CHECK(is_fibration(pb.proj2));
    auto pt = pullback_cat(p, const_functor(cat_square(), "top"));
    CHECK(is_fibration(pt.proj2));
  }
  SUBCASE("composites of fibrations are fibrations") {
    auto q = constant_functor(cat_square(), cat_one(), "*");
    // q ∘ p : Square^2 -> One.
    CHECK(is_fibration(compose_functors(q, p)));
  }
}

TEST_CASE("rari characterization agrees with is_fibration") {
  StepBudget budget{20'000'000, 0};
  CHECK(rari_characterization(identity_functor(cat_two()), budget));
  CHECK(rari_characterization(constant_functor(cat_iso(), cat_one(), "*"), budget));
  CHECK(rari_characterization(functor_of(cat_one(), cat_two(), {{"*", "0"}}, {}),
                              budget));
  CHECK_FALSE(rari_characterization(functor_of(cat_one(), cat_two(), {{"*", "1"}}, {}),
                                    budget));
  CHECK_FALSE(rari_characterization(cod_over(cat_cospan()), budget));
  CHECK(rari_characterization(cod_over(cat_two()), budget) ==
        is_fibration(cod_over(cat_two())));
}

TEST_CASE("bifibration criterion via left adjoints of reindexings") {
  auto check_lemma = [&](const FinFunctor& p) {
    auto cl = cleavage(p);
    const auto& B = *p.cod;
    bool all_adjoints = true;
    for (int f = 0; f < B.num_morphisms() && all_adjoints; ++f) {
      auto fb = fiber(p, B.tgt(f));
      auto fbp = fiber(p, B.src(f));
      auto r = reindexing_functor(p, cl, f, fb, fbp);
      StepBudget budget{5'000'000, 0};
      all_adjoints = find_left_adjoint(r, budget).has_value();
    }
    CHECK(all_adjoints == is_opfibration(p));
  };
  check_lemma(cod_over(cat_square()));
  check_lemma(dom_over(cat_square()));
  check_lemma(identity_functor(cat_iso()));
  check_lemma(dom_over(opposite(cat_cospan())));  // not an opfibration
}

TEST_CASE("exponentiation preserves fibrations (small instances)") {
  auto p = constant_functor(cat_iso(), cat_one(), "*");
  for (const auto& x : {cat_one(), cat_two(), cat_disc2()}) {
    StepBudget budget{5'000'000, 0};
    auto xe = functor_category(x, p.dom, budget);
    auto xb = functor_category(x, p.cod, budget);
    CHECK(is_fibration(postcompose_functor(xe, xb, p)));
  }
}

TEST_SUITE_END();
