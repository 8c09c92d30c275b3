#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catcomp/assemblies.hpp"
#include "fixtures.hpp"

using namespace catcomp;

namespace {

Model m_cat2() { return build_total_model(fixtures::cat2(), fixtures::s2()); }

Assembly asm_pq() {
  return {"X", FinSet({"p", "q"}), "a", {{"0", "p"}, {"1", "q"}}};
}

Assembly asm_r() { return {"Y", FinSet({"r"}), "b", {{"0", "r"}}}; }

Assembly canonical(const Model& m, int t) {
  Relation eq;
  for (const Label& x : m.datatype(t)) eq.insert({x, x});
  return {m.type_name(t), m.datatype(t), m.type_name(t), eq};
}

} // namespace

TEST_CASE("check_assembly: totality, errors") {
  Model m = m_cat2();
  CHECK(check_assembly(m, canonical(m, 0)).ok);
  CHECK(check_assembly(m, asm_pq()).ok);

  Assembly broken{"X", FinSet({"p", "q"}), "a", {{"0", "p"}}};
  auto r = check_assembly(m, broken);
  CHECK_FALSE(r.ok);
  CHECK(r.unrealized == std::vector<Label>{"q"});

  Assembly unknown{"Z", FinSet({"p"}), "zzz", {{"0", "p"}}};
  CHECK_THROWS_AS(check_assembly(m, unknown), LookupError);
  Assembly stray{"Z", FinSet({"p"}), "a", {{"7", "p"}}};
  CHECK_THROWS_AS(check_assembly(m, stray), InvalidInputError);
}

TEST_CASE("tracked_morphisms over the cat2 model") {
  Model m = m_cat2();
  Assembly x = asm_pq(), y = asm_r();

  // one function {p,q} -> {r}, tracked by the constant map
  auto down = tracked_morphisms(m, x, y);
  REQUIRE(down.size() == 1);
  CHECK(down[0].fn == TotalFn(x.carrier, y.carrier, {{"p", "r"}, {"q", "r"}}));
  CHECK(down[0].tracker == m.maps(0, 1).front());

  // nothing back up: maps(b, a) is empty
  CHECK(tracked_morphisms(m, y, x).empty());

  // of the four endofunctions of {p,q} only the identity has a tracker
  auto endo = tracked_morphisms(m, x, x);
  REQUIRE(endo.size() == 1);
  CHECK(endo[0].fn == TotalFn::identity(x.carrier));
  CHECK(endo[0].tracker == PartialFn::identity(m.datatype(0)));

  CHECK_THROWS_AS(tracked_morphisms(m, x, x, 3), LimitError);
}

TEST_CASE("fragments validate, cache homs, and form a category") {
  Model m = m_cat2();
  AsmFragment frag(m, {asm_pq(), asm_r(), canonical(m, 0)});
  CHECK(frag.size() == 3);
  CHECK(frag.assembly_index("Y") == 1);
  CHECK_THROWS_AS(frag.assembly_index("nope"), LookupError);

  CHECK_THROWS_AS(AsmFragment(m, {asm_pq(), asm_pq()}), InvalidInputError);
  Assembly broken{"B", FinSet({"p", "q"}), "a", {{"0", "p"}}};
  CHECK_THROWS_AS(AsmFragment(m, {broken}), InvalidInputError);

  // every cached witness really tracks its function
  for (int i = 0; i < frag.size(); ++i)
    for (int j = 0; j < frag.size(); ++j)
      for (const TrackedFn& t : frag.hom(i, j)) {
        for (const auto& [xp, xe] : frag.assemblies()[i].realizes) {
          REQUIRE(t.tracker.defined_at(xp));
          CHECK(frag.assemblies()[j].realizes.count(
              {t.tracker(xp), t.fn(xe)}));
        }
      }

  // distinct morphisms have distinct underlying functions
  for (int i = 0; i < frag.size(); ++i)
    for (int j = 0; j < frag.size(); ++j) {
      const auto& hom = frag.hom(i, j);
      for (std::size_t p = 0; p < hom.size(); ++p)
        for (std::size_t q = p + 1; q < hom.size(); ++q)
          CHECK(hom[p].fn != hom[q].fn);
    }

  // identities present, composition closed
  for (int i = 0; i < frag.size(); ++i) {
    const auto& endo = frag.hom(i, i);
    CHECK(std::any_of(endo.begin(), endo.end(), [&](const TrackedFn& t) {
      return t.fn == TotalFn::identity(frag.assemblies()[i].carrier);
    }));
  }
  for (int i = 0; i < frag.size(); ++i)
    for (int j = 0; j < frag.size(); ++j)
      for (int k = 0; k < frag.size(); ++k)
        for (const TrackedFn& t1 : frag.hom(i, j))
          for (const TrackedFn& t2 : frag.hom(j, k)) {
            TotalFn comp = compose_total_fn(t2.fn, t1.fn);
            CHECK(std::any_of(frag.hom(i, k).begin(), frag.hom(i, k).end(),
                              [&](const TrackedFn& t) {
                                return t.fn == comp;
                              }));
          }
}

TEST_CASE("embed_Ft on (cat2, s2) is a full embedding") {
  auto rep = embed_Ft(fixtures::cat2(), fixtures::s2());
  CHECK(rep.functorial);
  CHECK(rep.injective_on_objects);
  CHECK(rep.full);
  CHECK(rep.faithful);
  CHECK(rep.s_injective_on_arrows);
  CHECK(rep.embedding());

  // the image hom-sets are exactly the arrow images
  CHECK(rep.fragment.hom(0, 0).size() == 1);
  CHECK(rep.fragment.hom(0, 1).size() == 1);
  CHECK(rep.fragment.hom(1, 0).empty());
  CHECK(rep.fragment.hom(1, 1).size() == 1);
}

TEST_CASE("embed_Ft separates faithfulness from global injectivity") {
  // collapsing parallel arrows kills the embedding but not fullness
  auto par = embed_Ft(fixtures::par2(),
                      fixtures::constant_singleton(fixtures::par2()));
  CHECK(par.functorial);
  CHECK(par.full);
  CHECK(par.injective_on_objects);
  CHECK_FALSE(par.faithful);
  CHECK_FALSE(par.s_injective_on_arrows);
  CHECK_FALSE(par.embedding());

  // s_dia collapses arrows in different hom-sets only: still an
  // embedding, though not injective on arrows globally
  auto dia = embed_Ft(fixtures::diamond(), fixtures::s_dia());
  CHECK(dia.embedding());
  CHECK_FALSE(dia.s_injective_on_arrows);
}

TEST_CASE("the partial-kind embedding over (diamond, s_dia) is not full") {
  FinCategory c = fixtures::diamond();
  auto rep = embed_Ft(c, fixtures::s_dia(), ModelKind::partial);
  CHECK(rep.functorial);
  CHECK(rep.injective_on_objects);
  CHECK(rep.faithful);
  CHECK_FALSE(rep.full);

  // the culprit: a total map y -> bot appears among the partial-model
  // classes, but the category has no arrow y -> bot
  int y = c.object_index("y"), bot = c.object_index("bot");
  CHECK(c.hom(y, bot).empty());
  REQUIRE(rep.fragment.hom(y, bot).size() == 1);
  CHECK(rep.fragment.hom(y, bot)[0].fn ==
        TotalFn(FinSet({"0"}), FinSet({"0"}), {{"0", "0"}}));
}

TEST_CASE("model_over_fragment") {
  Model m = m_cat2();

  // canonical fragment reproduces the model on the nose
  CHECK(model_over_fragment(gamma_t(m).fragment) == m);

  // empty fragment, empty model
  Model none = model_over_fragment(AsmFragment(m, {}));
  CHECK(none.num_types() == 0);

  // custom assemblies
  AsmFragment frag(m, {asm_pq(), asm_r()});
  Model over = model_over_fragment(frag);
  CHECK(over.is_total());
  CHECK(over.type_names() == std::vector<std::string>{"X", "Y"});
  CHECK(over.datatype(0) == FinSet({"p", "q"}));
  CHECK(over.maps(0, 1).size() == 1);
  CHECK(over.maps(1, 0).empty());

  // a fragment over a partial model still yields a total model
  Model part = build_partial_model(fixtures::diamond(), fixtures::s_dia());
  CHECK_FALSE(part.is_total());
  std::vector<Assembly> canon;
  for (int t = 0; t < part.num_types(); ++t)
    canon.push_back(canonical(part, t));
  Model over_part = model_over_fragment(AsmFragment(part, canon));
  CHECK(over_part.is_total());
}

TEST_CASE("delta_t is a simulation on every fixture fragment") {
  Model m = m_cat2();
  Simulation d0 = delta_t(gamma_t(m).fragment);
  CHECK(check_simulation(d0).ok());

  Simulation dempty = delta_t(AsmFragment(m, {}));
  CHECK(check_simulation(dempty).ok());
  CHECK(dempty.src().num_types() == 0);

  AsmFragment frag(m, {asm_pq(), asm_r()});
  Simulation d = delta_t(frag);
  CHECK(check_simulation(d).ok());
  // the constant function is tracked by its cached witness
  const TrackedFn& t = frag.hom(0, 1).front();
  CHECK(tracks(d, t.tracker, PartialFn::from_total(t.fn), 0, 1).tracked);
}

TEST_CASE("gamma_t and the exact identity delta∘gamma") {
  Model m = m_cat2();
  GammaT g = gamma_t(m);
  CHECK(check_simulation(g.sim).ok());
  Simulation d = delta_t(g.fragment);
  CHECK(compose_simulations(d, g.sim) == identity_simulation(m));

  Model part = build_partial_model(fixtures::diamond(), fixtures::s_dia());
  CHECK_THROWS_AS(gamma_t(part), HypothesisError);
}

TEST_CASE("check_gamma_delta_equiv on the total fixtures") {
  Model m = m_cat2();
  auto rep = check_gamma_delta_equiv(m);
  CHECK(rep.delta_gamma_exact);
  CHECK(rep.equivalence.equivalent());

  Model point({"t"}, {FinSet({"0"})},
              {{{PartialFn::identity(FinSet({"0"}))}}});
  auto rp = check_gamma_delta_equiv(point);
  CHECK(rp.delta_gamma_exact);
  CHECK(rp.equivalence.equivalent());

  FinCategory mon = fixtures::mon2();
  Model hom_m = build_total_model(mon, hom_functor(mon, 0));
  auto rm = check_gamma_delta_equiv(hom_m);
  CHECK(rm.delta_gamma_exact);
  CHECK(rm.equivalence.equivalent());

  CHECK_THROWS_AS(
      check_gamma_delta_equiv(
          build_partial_model(fixtures::diamond(), fixtures::s_dia())),
      HypothesisError);
}
