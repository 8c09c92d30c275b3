#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catcomp/models.hpp"
#include "fixtures.hpp"

using namespace catcomp;

namespace {

PartialFn pf(std::vector<Label> dom, std::vector<Label> cod,
             std::map<Label, Label> m) {
  return PartialFn(FinSet(std::move(dom)), FinSet(std::move(cod)),
                   std::move(m));
}

} // namespace

TEST_CASE("Model construction validates and canonicalizes") {
  FinSet two({"0", "1"});
  PartialFn id2 = PartialFn::identity(two);
  CHECK_THROWS_AS(Model({"t", "t"}, {two, two}, {{{}, {}}, {{}, {}}}),
                  InvalidInputError);
  CHECK_THROWS_AS(Model({"t"}, {two}, {}), InvalidInputError);
  // ill-typed member
  CHECK_THROWS_AS(Model({"s", "t"}, {two, FinSet({"0"})},
                        {{{}, {id2}}, {{}, {}}}),
                  InvalidInputError);
  // duplicates collapse; order of presentation is irrelevant
  PartialFn r = pf({"0", "1"}, {"0", "1"}, {{"0", "0"}});
  Model m1({"t"}, {two}, {{{id2, r, id2}}});
  Model m2({"t"}, {two}, {{{r, id2}}});
  CHECK(m1 == m2);
  CHECK(m1.maps(0, 0).size() == 2);
  CHECK(m1.contains_map(0, 0, id2));
  CHECK_FALSE(m1.is_total());
  CHECK(m1.type_index("t") == 0);
  CHECK_THROWS_AS(m1.type_index("zzz"), LookupError);
}

TEST_CASE("make_partial_morphism validates mono and typing") {
  FinCategory c = fixtures::diamond();
  auto bx = c.morphism_index("bx");
  auto by = c.morphism_index("by");
  auto xt = c.morphism_index("xt");
  CHECK_NOTHROW(make_partial_morphism(c, bx, by));
  CHECK_THROWS_AS(make_partial_morphism(c, bx, xt), TypeMismatchError);

  FinCategory m = fixtures::mon2();
  CHECK_THROWS_AS(
      make_partial_morphism(m, m.morphism_index("e"), m.morphism_index("1")),
      InvalidInputError);
}

TEST_CASE("image_of_partial_morphism follows the mono leg") {
  SetFunctor s = fixtures::s_dia();
  FinCategory c = s.source();
  auto idx = [&](const char* n) { return c.morphism_index(n); };

  // identity mono: the plain total image
  PartialMorphism total = make_partial_morphism(c, idx("id_bot"), idx("bt"));
  CHECK(image_of_partial_morphism(s, total) ==
        PartialFn::from_total(s.map(idx("bt"))));

  // (bx, by): defined on the image {0} of S(bx) inside S(x) = {0,1}
  PartialMorphism pm = make_partial_morphism(c, idx("bx"), idx("by"));
  CHECK(image_of_partial_morphism(s, pm) ==
        pf({"0", "1"}, {"0"}, {{"0", "0"}}));

  // empty domain: nowhere defined
  FinCategory c2 = fixtures::cat2();
  FinSet none;
  FinSet one({"0"});
  SetFunctor empty_a(c2, {none, one},
                     {TotalFn::identity(none), TotalFn::identity(one),
                      TotalFn(none, one, {})});
  PartialMorphism up =
      make_partial_morphism(c2, c2.morphism_index("id_a"),
                            c2.morphism_index("u"));
  CHECK(image_of_partial_morphism(empty_a, up).defined().empty());

  // non-injective image of the mono leg is a violated hypothesis
  PartialMorphism bad = make_partial_morphism(c2, c2.morphism_index("u"),
                                              c2.morphism_index("id_a"));
  CHECK_THROWS_AS(image_of_partial_morphism(fixtures::s2(), bad),
                  HypothesisError);
}

TEST_CASE("compose_partial_morphisms pulls back along the mono leg") {
  FinCategory c = fixtures::diamond();
  auto idx = [&](const char* n) { return c.morphism_index(n); };
  PartialMorphism pm1 = make_partial_morphism(c, idx("bx"), idx("by"));
  PartialMorphism pm2 = make_partial_morphism(c, idx("by"), idx("bx"));
  PartialMorphism both = compose_partial_morphisms(c, pm1, pm2);
  CHECK(both == PartialMorphism{idx("bx"), idx("bx")});

  // composing with (id_b, g) appends g
  for (const PartialMorphism& pm : all_partial_morphisms(c)) {
    auto b = pm_target(c, pm);
    for (FinCategory::Mor g : c.from(b)) {
      PartialMorphism post = make_partial_morphism(c, c.identity(b), g);
      CHECK(compose_partial_morphisms(c, pm, post) ==
            (PartialMorphism{pm.i, c.compose(g, pm.f)}));
    }
  }

  CHECK_THROWS_AS(compose_partial_morphisms(c, pm1, pm1), TypeMismatchError);

  // missing pullback
  FinCategory n = fixtures::cospan_noapex();
  PartialMorphism left =
      make_partial_morphism(n, n.morphism_index("id_a"), n.morphism_index("f"));
  PartialMorphism right =
      make_partial_morphism(n, n.morphism_index("g"), n.morphism_index("id_b"));
  CHECK_THROWS_AS(compose_partial_morphisms(n, left, right), HypothesisError);
}

TEST_CASE("all_partial_morphisms enumerates mono/arrow pairs") {
  CHECK(all_partial_morphisms(fixtures::diamond()).size() == 25);
  // mon2: only the identity is mono, so pairs are (1, 1) and (1, e)
  CHECK(all_partial_morphisms(fixtures::mon2()).size() == 2);
}

TEST_CASE("build_total_model on (cat2, s2) has the expected classes") {
  FinCategory c = fixtures::cat2();
  Model m = build_total_model(c, fixtures::s2());
  int a = m.type_index("a");
  int b = m.type_index("b");
  CHECK(m.is_total());
  CHECK(check_model_axioms(m).ok());
  CHECK(m.datatype(a) == FinSet({"0", "1"}));
  CHECK(m.maps(a, a) ==
        std::vector<PartialFn>{PartialFn::identity(m.datatype(a))});
  CHECK(m.maps(b, b) ==
        std::vector<PartialFn>{PartialFn::identity(m.datatype(b))});
  CHECK(m.maps(a, b) ==
        std::vector<PartialFn>{pf({"0", "1"}, {"0"},
                                  {{"0", "0"}, {"1", "0"}})});
  CHECK(m.maps(b, a).empty());
}

TEST_CASE("build_total_model rejects pseudo-functors") {
  CHECK_THROWS_AS(
      build_total_model(fixtures::cat2(), fixtures::s2_broken_identity()),
      HypothesisError);
  CHECK_THROWS_AS(
      build_total_model(fixtures::diamond(), fixtures::s_dia_mutant()),
      HypothesisError);
}

TEST_CASE("constant-singleton total models have singleton classes along "
          "inhabited hom-sets") {
  FinCategory c = fixtures::diamond();
  Model m = build_total_model(c, fixtures::constant_singleton(c));
  for (int s = 0; s < m.num_types(); ++s)
    for (int t = 0; t < m.num_types(); ++t) {
      std::size_t expected =
          c.hom(s, t).empty() ? 0 : 1; // type order = object order
      CHECK(m.maps(s, t).size() == expected);
    }
}

TEST_CASE("total model over (mon2, hom) is the two-shift monoid") {
  FinCategory m = fixtures::mon2();
  Model v = build_total_model(m, hom_functor(m, 0));
  FinSet dt({"1", "e"});
  CHECK(v.datatype(0) == dt);
  CHECK(v.maps(0, 0) ==
        std::vector<PartialFn>{pf({"1", "e"}, {"1", "e"},
                                  {{"1", "1"}, {"e", "e"}}),
                               pf({"1", "e"}, {"1", "e"},
                                  {{"1", "e"}, {"e", "e"}})});
}

TEST_CASE("build_partial_model on (diamond, s_dia) matches the frozen "
          "enumeration") {
  FinCategory c = fixtures::diamond();
  Model m = build_partial_model(c, fixtures::s_dia());
  int bot = m.type_index("bot"), x = m.type_index("x"), y = m.type_index("y"),
      top = m.type_index("top");
  CHECK_FALSE(m.is_total());
  CHECK(check_model_axioms(m).ok());

  auto t00 = pf({"0"}, {"0"}, {{"0", "0"}});
  CHECK(m.maps(bot, bot) == std::vector<PartialFn>{t00});
  CHECK(m.maps(bot, x) ==
        std::vector<PartialFn>{pf({"0"}, {"0", "1"}, {{"0", "0"}})});
  CHECK(m.maps(bot, y) == std::vector<PartialFn>{t00});
  CHECK(m.maps(bot, top) ==
        std::vector<PartialFn>{pf({"0"}, {"0", "1", "2"}, {{"0", "0"}})});

  CHECK(m.maps(x, bot) ==
        std::vector<PartialFn>{pf({"0", "1"}, {"0"}, {{"0", "0"}})});
  CHECK(m.maps(x, x) ==
        std::vector<PartialFn>{
            pf({"0", "1"}, {"0", "1"}, {{"0", "0"}}),
            PartialFn::identity(FinSet({"0", "1"}))});
  CHECK(m.maps(x, y) ==
        std::vector<PartialFn>{pf({"0", "1"}, {"0"}, {{"0", "0"}})});
  CHECK(m.maps(x, top) ==
        std::vector<PartialFn>{
            pf({"0", "1"}, {"0", "1", "2"}, {{"0", "0"}}),
            pf({"0", "1"}, {"0", "1", "2"}, {{"0", "0"}, {"1", "1"}})});

  CHECK(m.maps(y, bot) == std::vector<PartialFn>{t00});
  CHECK(m.maps(y, x) ==
        std::vector<PartialFn>{pf({"0"}, {"0", "1"}, {{"0", "0"}})});
  CHECK(m.maps(y, y) == std::vector<PartialFn>{t00});
  CHECK(m.maps(y, top) ==
        std::vector<PartialFn>{pf({"0"}, {"0", "1", "2"}, {{"0", "0"}})});

  CHECK(m.maps(top, bot) ==
        std::vector<PartialFn>{pf({"0", "1", "2"}, {"0"}, {{"0", "0"}})});
  CHECK(m.maps(top, x) ==
        std::vector<PartialFn>{
            pf({"0", "1", "2"}, {"0", "1"}, {{"0", "0"}}),
            pf({"0", "1", "2"}, {"0", "1"}, {{"0", "0"}, {"1", "1"}})});
  CHECK(m.maps(top, y) ==
        std::vector<PartialFn>{pf({"0", "1", "2"}, {"0"}, {{"0", "0"}})});
  CHECK(m.maps(top, top) ==
        std::vector<PartialFn>{
            pf({"0", "1", "2"}, {"0", "1", "2"}, {{"0", "0"}}),
            pf({"0", "1", "2"}, {"0", "1", "2"}, {{"0", "0"}, {"1", "1"}}),
            PartialFn::identity(FinSet({"0", "1", "2"}))});
}

TEST_CASE("partial model over a category whose only monos are identities "
          "equals the total model") {
  FinCategory t = fixtures::term();
  FinSet two({"0", "1"});
  SetFunctor s(t, {two}, {TotalFn::identity(two)});
  CHECK(build_partial_model(t, s) == build_total_model(t, s));
}

TEST_CASE("build_partial_model enforces its hypotheses") {
  // s2 collapses u, so the (u, u) comparison map cannot biject
  CHECK_THROWS_WITH_AS(
      build_partial_model(fixtures::cat2(), fixtures::s2()),
      doctest::Contains("(u, u)"), HypothesisError);
  // mon2 lacks the pullback of (e, e)
  FinCategory m = fixtures::mon2();
  CHECK_THROWS_WITH_AS(build_partial_model(m, hom_functor(m, 0)),
                       doctest::Contains("(e, e)"), HypothesisError);
  // the mutant is rejected before any preservation question arises
  CHECK_THROWS_AS(
      build_partial_model(fixtures::diamond(), fixtures::s_dia_mutant()),
      HypothesisError);
}

TEST_CASE("image functoriality holds exhaustively on (diamond, s_dia) and "
          "breaks for the mutant") {
  FinCategory c = fixtures::diamond();
  SetFunctor good = fixtures::s_dia();
  SetFunctor bad = fixtures::s_dia_mutant();
  int pairs = 0, violations_good = 0, violations_bad = 0;
  for (const PartialMorphism& pm1 : all_partial_morphisms(c)) {
    for (const PartialMorphism& pm2 : all_partial_morphisms(c)) {
      if (pm_target(c, pm1) != pm_source(c, pm2)) continue;
      ++pairs;
      PartialMorphism comp = compose_partial_morphisms(c, pm1, pm2);
      if (image_of_partial_morphism(good, comp) !=
          compose_partial_fn(image_of_partial_morphism(good, pm2),
                             image_of_partial_morphism(good, pm1)))
        ++violations_good;
      if (image_of_partial_morphism(bad, comp) !=
          compose_partial_fn(image_of_partial_morphism(bad, pm2),
                             image_of_partial_morphism(bad, pm1)))
        ++violations_bad;
    }
  }
  CHECK(pairs > 100);
  CHECK(violations_good == 0);
  CHECK(violations_bad > 0);
}

TEST_CASE("check_model_axioms pinpoints missing identities and composites") {
  FinSet two({"0", "1"});
  PartialFn id2 = PartialFn::identity(two);
  PartialFn step = pf({"0", "1"}, {"0", "1"}, {{"0", "1"}});

  Model no_id({"t"}, {two}, {{{step}}});
  auto r1 = check_model_axioms(no_id);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations()[0].law == "CM1");

  // step∘step is the nowhere-defined map, which is missing
  Model open_comp({"t"}, {two}, {{{id2, step}}});
  auto r2 = check_model_axioms(open_comp);
  bool found_cm2 = false;
  for (const auto& v : r2.violations()) found_cm2 |= v.law == "CM2";
  CHECK(found_cm2);

  Model closed({"t"}, {two}, {{{id2, step, pf({"0", "1"}, {"0", "1"}, {})}}});
  CHECK(check_model_axioms(closed).ok());
}
