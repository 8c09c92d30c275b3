// Shared test fixtures. Values frozen here are cross-checked against the
// oracles in oracles.hpp before being asserted elsewhere.
#pragma once

#include "catcomp/fincat.hpp"
#include "catcomp/functors.hpp"

namespace fixtures {

using namespace catcomp;

// Two objects, one non-identity arrow u: a -> b.
inline FinCategory cat2() {
  return FinCategory({"a", "b"},
                     {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}},
                     {{"a", "id_a"}, {"b", "id_b"}}, {});
}

// cat2 with comp(u, id_a) redirected to id_a: breaks the right identity
// law (and entry typing) without breaking the table's structure.
inline FinCategory cat2_broken_identity() {
  return FinCategory({"a", "b"},
                     {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}},
                     {{"a", "id_a"}, {"b", "id_b"}}, {{{"u", "id_a", "id_a"}}});
}

// One object m, one idempotent e besides the identity.
inline FinCategory mon2() {
  return FinCategory({"m"}, {{"1", "m", "m"}, {"e", "m", "m"}}, {{"m", "1"}},
                     {{{"e", "e", "e"}}});
}

// One object, morphisms 1, p, q with a deliberately non-associative table:
// (p.p).p = q.p = p but p.(p.p) = p.q = q.
inline FinCategory nonassoc3() {
  return FinCategory({"m"}, {{"1", "m", "m"}, {"p", "m", "m"}, {"q", "m", "m"}},
                     {{"m", "1"}},
                     {{{"p", "p", "q"}},
                      {{"p", "q", "q"}},
                      {{"q", "p", "p"}},
                      {{"q", "q", "q"}}});
}

// The poset bot <= x <= top, bot <= y <= top as a category.
inline FinCategory diamond() {
  return FinCategory({"bot", "x", "y", "top"},
                     {{"id_bot", "bot", "bot"},
                      {"id_x", "x", "x"},
                      {"id_y", "y", "y"},
                      {"id_top", "top", "top"},
                      {"bx", "bot", "x"},
                      {"by", "bot", "y"},
                      {"xt", "x", "top"},
                      {"yt", "y", "top"},
                      {"bt", "bot", "top"}},
                     {{"bot", "id_bot"},
                      {"x", "id_x"},
                      {"y", "id_y"},
                      {"top", "id_top"}},
                     {{{"xt", "bx", "bt"}}, {{"yt", "by", "bt"}}});
}

// Two parallel arrows u, v: a -> b.
inline FinCategory par2() {
  return FinCategory({"a", "b"},
                     {{"id_a", "a", "a"},
                      {"id_b", "b", "b"},
                      {"u", "a", "b"},
                      {"v", "a", "b"}},
                     {{"a", "id_a"}, {"b", "id_b"}}, {});
}

// Cospan a -> c <- b with nothing mapping into both a and b: the cospan
// (f, g) has no pullback.
inline FinCategory cospan_noapex() {
  return FinCategory({"a", "b", "c"},
                     {{"id_a", "a", "a"},
                      {"id_b", "b", "b"},
                      {"id_c", "c", "c"},
                      {"f", "a", "c"},
                      {"g", "b", "c"}},
                     {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}}, {});
}

// The terminal category: one object, its identity.
inline FinCategory term() {
  return FinCategory({"star"}, {{"id_star", "star", "star"}},
                     {{"star", "id_star"}}, {});
}

// S2 on cat2: a two-point set collapsed onto a point.
inline SetFunctor s2() {
  FinSet sa({"0", "1"});
  FinSet sb({"0"});
  return SetFunctor(cat2(), {sa, sb},
                    {TotalFn::identity(sa), TotalFn::identity(sb),
                     TotalFn(sa, sb, {{"0", "0"}, {"1", "0"}})});
}

// s2 with the image of id_a redirected to the constant 0: breaks identity
// preservation only.
inline SetFunctor s2_broken_identity() {
  FinSet sa({"0", "1"});
  FinSet sb({"0"});
  return SetFunctor(cat2(), {sa, sb},
                    {TotalFn(sa, sa, {{"0", "0"}, {"1", "0"}}),
                     TotalFn::identity(sb),
                     TotalFn(sa, sb, {{"0", "0"}, {"1", "0"}})});
}

// Extra functor on cat2 with a one-point value everywhere; used to build
// natural transformations into s2.
inline SetFunctor s3() {
  FinSet one({"0"});
  return SetFunctor(cat2(), {one, one},
                    {TotalFn::identity(one), TotalFn::identity(one),
                     TotalFn::identity(one)});
}

// Functor on cat2 where u lands in a two-point set injectively; target of
// the broken-naturality fixture.
inline SetFunctor s2_wide() {
  FinSet sa({"0", "1"});
  return SetFunctor(cat2(), {sa, sa},
                    {TotalFn::identity(sa), TotalFn::identity(sa),
                     TotalFn::identity(sa)});
}

inline SetFunctor constant_singleton(const FinCategory& c) {
  FinSet pt({"*"});
  std::vector<FinSet> objs(c.num_objects(), pt);
  std::vector<TotalFn> mors(c.num_morphisms(), TotalFn::identity(pt));
  return SetFunctor(c, std::move(objs), std::move(mors));
}

// The pullback-preserving diamond functor.
inline SetFunctor s_dia() {
  FinCategory c = diamond();
  FinSet sbot({"0"});
  FinSet sx({"0", "1"});
  FinSet sy({"0"});
  FinSet stop({"0", "1", "2"});
  return SetFunctor(c, {sbot, sx, sy, stop},
                    {TotalFn::identity(sbot), TotalFn::identity(sx),
                     TotalFn::identity(sy), TotalFn::identity(stop),
                     TotalFn(sbot, sx, {{"0", "0"}}),
                     TotalFn(sbot, sy, {{"0", "0"}}),
                     TotalFn(sx, stop, {{"0", "0"}, {"1", "1"}}),
                     TotalFn(sy, stop, {{"0", "0"}}),
                     TotalFn(sbot, stop, {{"0", "0"}})});
}

// s_dia with the single entry S(yt) redirected 0 -> 2. This stops the
// (xt, yt) comparison map from being surjective and also breaks the
// composite yt∘by = bt, so the mutant is a non-functor fed to the
// checkers on purpose.
inline SetFunctor s_dia_mutant() {
  FinCategory c = diamond();
  FinSet sbot({"0"});
  FinSet sx({"0", "1"});
  FinSet sy({"0"});
  FinSet stop({"0", "1", "2"});
  return SetFunctor(c, {sbot, sx, sy, stop},
                    {TotalFn::identity(sbot), TotalFn::identity(sx),
                     TotalFn::identity(sy), TotalFn::identity(stop),
                     TotalFn(sbot, sx, {{"0", "0"}}),
                     TotalFn(sbot, sy, {{"0", "0"}}),
                     TotalFn(sx, stop, {{"0", "0"}, {"1", "1"}}),
                     TotalFn(sy, stop, {{"0", "2"}}),
                     TotalFn(sbot, stop, {{"0", "0"}})});
}

// A second pullback-preserving functor on diamond, positioned so that a
// nontrivial natural transformation s_dia => t_dia exists.
inline SetFunctor t_dia() {
  FinCategory c = diamond();
  FinSet sbot({"0"});
  FinSet sx({"0", "1"});
  FinSet sy({"0"});
  FinSet stop({"0", "1", "2"});
  return SetFunctor(c, {sbot, sx, sy, stop},
                    {TotalFn::identity(sbot), TotalFn::identity(sx),
                     TotalFn::identity(sy), TotalFn::identity(stop),
                     TotalFn(sbot, sx, {{"0", "1"}}),
                     TotalFn(sbot, sy, {{"0", "0"}}),
                     TotalFn(sx, stop, {{"0", "0"}, {"1", "1"}}),
                     TotalFn(sy, stop, {{"0", "1"}}),
                     TotalFn(sbot, stop, {{"0", "1"}})});
}

// Swap-on-a natural transformation s2 => s2.
inline NatTrans swap_nat() {
  SetFunctor s = s2();
  return NatTrans(s, s,
                  {TotalFn(s.at(0), s.at(0), {{"0", "1"}, {"1", "0"}}),
                   TotalFn::identity(s.at(1))});
}

// theta: s3 => s2 hitting the 1 of S2(a).
inline NatTrans theta_nat() {
  SetFunctor src = s3();
  SetFunctor tgt = s2();
  return NatTrans(src, tgt,
                  {TotalFn(src.at(0), tgt.at(0), {{"0", "1"}}),
                   TotalFn::identity(tgt.at(1))});
}

// eta: s_dia => t_dia (swap at x, a transposition at top).
inline NatTrans eta_dia() {
  SetFunctor src = s_dia();
  SetFunctor tgt = t_dia();
  return NatTrans(
      src, tgt,
      {TotalFn::identity(src.at(0)),
       TotalFn(src.at(1), tgt.at(1), {{"0", "1"}, {"1", "0"}}),
       TotalFn::identity(src.at(2)),
       TotalFn(src.at(3), tgt.at(3), {{"0", "1"}, {"1", "0"}, {"2", "2"}})});
}

// Components s2 => s2_wide whose naturality square at u fails: going
// tgt(u)∘eta_a is the identity on {0,1}, going eta_b∘src(u) collapses.
inline NatTrans broken_nat() {
  SetFunctor src = s2();
  SetFunctor tgt = s2_wide();
  return NatTrans(src, tgt,
                  {TotalFn::identity(src.at(0)),
                   TotalFn(src.at(1), tgt.at(1), {{"0", "0"}})});
}

// The terminal-category arrow into cat2 picking a.
inline CatSetArrow term_to_cat2() {
  FinCategory t = term();
  FinCategory c = cat2();
  FinSet sa({"0", "1"});
  SetFunctor s_pt(t, {sa}, {TotalFn::identity(sa)});
  return CatSetArrow(CatFunctor(t, c, {0}, {0}), s_pt, s2());
}

// Endofunctor of diamond folding y onto bot (so by -> id_bot, yt -> bt).
// s_dia equates the respective images, so (F, s_dia, s_dia) is a strict
// slice arrow; F also preserves monos (everything in a poset is mono).
inline CatSetArrow dia_collapse() {
  FinCategory d = diamond();
  auto o = [&](const char* n) { return d.object_index(n); };
  auto m = [&](const char* n) { return d.morphism_index(n); };
  CatFunctor f(d, d, {o("bot"), o("x"), o("bot"), o("top")},
               {m("id_bot"), m("id_x"), m("id_bot"), m("id_top"), m("bx"),
                m("id_bot"), m("xt"), m("bt"), m("bt")});
  return CatSetArrow(f, s_dia(), s_dia());
}

// Terminal category into diamond, picking the object x.
inline CatSetArrow term_to_diamond_x() {
  FinCategory t = term();
  FinCategory d = diamond();
  FinSet sx({"0", "1"});
  SetFunctor s_pt(t, {sx}, {TotalFn::identity(sx)});
  return CatSetArrow(
      CatFunctor(t, d, {d.object_index("x")}, {d.morphism_index("id_x")}),
      s_pt, s_dia());
}

// Collapse of cat2 onto mon2 sending u to the idempotent e: functorial,
// but u is mono while e is not.
inline CatSetArrow cat2_to_mon2() {
  FinCategory c = cat2();
  FinCategory m = mon2();
  SetFunctor t = hom_functor(m, 0);
  FinSet sm = t.at(0);
  SetFunctor s(c, {sm, sm}, {TotalFn::identity(sm), TotalFn::identity(sm),
                             t.map(m.morphism_index("e"))});
  return CatSetArrow(
      CatFunctor(c, m, {0, 0},
                 {m.morphism_index("1"), m.morphism_index("1"),
                  m.morphism_index("e")}),
      s, t);
}

} // namespace fixtures

