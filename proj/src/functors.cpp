#include "catcomp/functors.hpp"

#include <algorithm>

namespace catcomp {

SetFunctor::SetFunctor(FinCategory source, std::vector<FinSet> on_objects,
                       std::vector<TotalFn> on_morphisms, std::size_t max_set)
    : source_(std::move(source)), on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)) {
  if (on_objects_.size() != static_cast<std::size_t>(source_.num_objects()))
    throw InvalidInputError("functor needs one set per object");
  if (on_morphisms_.size() != static_cast<std::size_t>(source_.num_morphisms()))
    throw InvalidInputError("functor needs one function per morphism");
  for (const FinSet& s : on_objects_)
    if (s.size() > max_set)
      throw LimitError("functor value exceeds the configured set limit (" +
                       std::to_string(s.size()) + " > " +
                       std::to_string(max_set) + ")");
  for (FinCategory::Mor f = 0; f < source_.num_morphisms(); ++f) {
    const TotalFn& fn = on_morphisms_[f];
    if (fn.dom() != on_objects_[source_.dom(f)] ||
        fn.cod() != on_objects_[source_.cod(f)])
      throw InvalidInputError("image of " + source_.morphism_name(f) +
                              " is not typed between the images of its "
                              "endpoints");
  }
}

bool SetFunctor::injective_on_arrows() const {
  for (FinCategory::Mor f = 0; f < source_.num_morphisms(); ++f)
    for (FinCategory::Mor g = f + 1; g < source_.num_morphisms(); ++g)
      if (on_morphisms_[f] == on_morphisms_[g]) return false;
  return true;
}

ValidationReport validate_functor(const SetFunctor& s) {
  ValidationReport report;
  const FinCategory& c = s.source();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) {
    if (s.map(c.identity(a)) != TotalFn::identity(s.at(a)))
      report.add("functor-identity",
                 "image of " + c.morphism_name(c.identity(a)) + " is " +
                     describe(s.map(c.identity(a))) + ", not the identity");
  }
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g) {
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      TotalFn expected = compose_total_fn(s.map(g), s.map(f));
      if (s.map(c.compose(g, f)) != expected)
        report.add("functor-composition",
                   "image of comp(" + c.morphism_name(g) + ", " +
                       c.morphism_name(f) + ") = " +
                       c.morphism_name(c.compose(g, f)) +
                       " differs from the composite of the images");
    }
  }
  return report;
}

namespace {

// Comparison map S(apex) -> pullback_sets(Sf, Sg) is a bijection?
bool comparison_bijective(const SetFunctor& s, const CatPullback& square) {
  const TotalFn& sf = s.map(square.cospan.f);
  const TotalFn& sg = s.map(square.cospan.g);
  SetPullback target = pullback_sets(sf, sg);
  const TotalFn& sp1 = s.map(square.proj1);
  const TotalFn& sp2 = s.map(square.proj2);
  std::vector<Label> images;
  for (const Label& z : s.at(square.apex)) {
    if (sf(sp1(z)) != sg(sp2(z))) return false; // image square fails to commute
    images.push_back(pair_label(sp1(z), sp2(z)));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return false;
  return images.size() == target.apex.size();
}

} // namespace

PreservationReport preserves_pullbacks(
    const SetFunctor& s, const std::optional<std::vector<CatPullback>>& squares) {
  const FinCategory& c = s.source();
  PreservationReport report;

  std::vector<CatPullback> tested;
  if (squares) {
    for (const CatPullback& sq : *squares)
      if (!is_pullback_square(c, sq))
        throw InvalidInputError("supplied square over cospan (" +
                                c.morphism_name(sq.cospan.f) + ", " +
                                c.morphism_name(sq.cospan.g) +
                                ") is not a pullback");
    tested = *squares;
  } else {
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g) {
        if (c.cod(f) != c.cod(g)) continue;
        if (auto pb = find_pullback(c, Cospan{f, g})) tested.push_back(*pb);
      }
  }

  for (const CatPullback& sq : tested) {
    if (!comparison_bijective(s, sq)) {
      report.pullbacks_preserved = false;
      report.failing.push_back(sq);
    }
  }
  for (FinCategory::Mor i = 0; i < c.num_morphisms(); ++i) {
    if (!is_mono(c, i).mono) continue;
    if (!s.map(i).injective()) {
      report.monos_preserved = false;
      report.failing_monos.push_back(i);
    }
  }
  return report;
}

NatTrans::NatTrans(SetFunctor src, SetFunctor tgt,
                   std::vector<TotalFn> components)
    : src_(std::move(src)), tgt_(std::move(tgt)),
      components_(std::move(components)) {
  if (src_.source() != tgt_.source())
    throw InvalidInputError(
        "natural transformation endpoints must share a source category");
  if (components_.size() !=
      static_cast<std::size_t>(src_.source().num_objects()))
    throw InvalidInputError("one component per object required");
  for (FinCategory::Obj a = 0; a < src_.source().num_objects(); ++a)
    if (components_[a].dom() != src_.at(a) || components_[a].cod() != tgt_.at(a))
      throw InvalidInputError("component at " +
                              src_.source().object_name(a) +
                              " is not typed src(a) -> tgt(a)");
}

ValidationReport validate_nat_trans(const NatTrans& n) {
  ValidationReport report;
  const FinCategory& c = n.src().source();
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
    TotalFn left = compose_total_fn(n.at(c.cod(f)), n.src().map(f));
    TotalFn right = compose_total_fn(n.tgt().map(f), n.at(c.dom(f)));
    if (left != right)
      report.add("naturality", "square at " + describe(c, f) +
                                   " does not commute");
  }
  return report;
}

NatTrans identity_nat_trans(const SetFunctor& s) {
  std::vector<TotalFn> components;
  for (FinCategory::Obj a = 0; a < s.source().num_objects(); ++a)
    components.push_back(TotalFn::identity(s.at(a)));
  return NatTrans(s, s, std::move(components));
}

NatTrans compose_nat_trans(const NatTrans& n2, const NatTrans& n1) {
  if (n1.tgt() != n2.src())
    throw TypeMismatchError(
        "compose_nat_trans: tgt of the first must equal src of the second");
  std::vector<TotalFn> components;
  for (FinCategory::Obj a = 0; a < n1.src().source().num_objects(); ++a)
    components.push_back(compose_total_fn(n2.at(a), n1.at(a)));
  return NatTrans(n1.src(), n2.tgt(), std::move(components));
}

SetFunctor hom_functor(const FinCategory& c, FinCategory::Obj a) {
  if (a < 0 || a >= c.num_objects())
    throw LookupError("hom_functor: object index out of range");
  std::vector<FinSet> on_objects;
  for (FinCategory::Obj b = 0; b < c.num_objects(); ++b) {
    std::vector<Label> names;
    for (auto g : c.hom(a, b)) names.push_back(c.morphism_name(g));
    on_objects.push_back(FinSet(std::move(names)));
  }
  std::vector<TotalFn> on_morphisms;
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
    std::map<Label, Label> post;
    for (auto g : c.hom(a, c.dom(f)))
      post.emplace(c.morphism_name(g), c.morphism_name(c.compose(f, g)));
    on_morphisms.push_back(
        TotalFn(on_objects[c.dom(f)], on_objects[c.cod(f)], std::move(post)));
  }
  return SetFunctor(c, std::move(on_objects), std::move(on_morphisms));
}

CatFunctor::CatFunctor(FinCategory src, FinCategory tgt,
                       std::vector<FinCategory::Obj> object_map,
                       std::vector<FinCategory::Mor> morphism_map)
    : src_(std::move(src)), tgt_(std::move(tgt)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (object_map_.size() != static_cast<std::size_t>(src_.num_objects()) ||
      morphism_map_.size() != static_cast<std::size_t>(src_.num_morphisms()))
    throw InvalidInputError("functor maps must cover every object/morphism");
  for (FinCategory::Obj a : object_map_)
    if (a < 0 || a >= tgt_.num_objects())
      throw InvalidInputError("object map leaves the target category");
  for (FinCategory::Mor f = 0; f < src_.num_morphisms(); ++f) {
    FinCategory::Mor ff = morphism_map_[f];
    if (ff < 0 || ff >= tgt_.num_morphisms())
      throw InvalidInputError("morphism map leaves the target category");
    if (tgt_.dom(ff) != object_map_[src_.dom(f)] ||
        tgt_.cod(ff) != object_map_[src_.cod(f)])
      throw InvalidInputError("image of " + src_.morphism_name(f) +
                              " is not typed between the images of its "
                              "endpoints");
  }
}

CatFunctor CatFunctor::identity(const FinCategory& c) {
  std::vector<FinCategory::Obj> objs(c.num_objects());
  std::vector<FinCategory::Mor> mors(c.num_morphisms());
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) objs[a] = a;
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) mors[f] = f;
  return CatFunctor(c, c, std::move(objs), std::move(mors));
}

CatSetArrow::CatSetArrow(CatFunctor F, SetFunctor S, SetFunctor T)
    : F_(std::move(F)), S_(std::move(S)), T_(std::move(T)) {
  if (S_.source() != F_.src())
    throw InvalidInputError("S must live on the source of F");
  if (T_.source() != F_.tgt())
    throw InvalidInputError("T must live on the target of F");
}

SliceArrowReport validate_slice_arrow(const CatSetArrow& w) {
  SliceArrowReport out;
  const FinCategory& c = w.F().src();
  const FinCategory& d = w.F().tgt();

  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    if (w.F().on_morphism(c.identity(a)) != d.identity(w.F().on_object(a)))
      out.laws.add("cat-functor-identity",
                   "F(" + c.morphism_name(c.identity(a)) +
                       ") is not the identity of F(" + c.object_name(a) + ")");
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g)
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      if (w.F().on_morphism(c.compose(g, f)) !=
          d.compose(w.F().on_morphism(g), w.F().on_morphism(f)))
        out.laws.add("cat-functor-composition",
                     "F(comp(" + c.morphism_name(g) + ", " +
                         c.morphism_name(f) + ")) differs from the composite "
                         "of the images");
    }

  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    if (w.T().at(w.F().on_object(a)) != w.S().at(a))
      out.laws.add("slice-equality-objects",
                   "T(F(" + c.object_name(a) + ")) != S(" + c.object_name(a) +
                       ")");
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    if (w.T().map(w.F().on_morphism(f)) != w.S().map(f))
      out.laws.add("slice-equality-morphisms",
                   "T(F(" + c.morphism_name(f) + ")) != S(" +
                       c.morphism_name(f) + ")");

  for (FinCategory::Mor i = 0; i < c.num_morphisms(); ++i) {
    if (!is_mono(c, i).mono) continue;
    if (!is_mono(d, w.F().on_morphism(i)).mono) {
      out.f_preserves_monos = false;
      if (!out.mono_failure) out.mono_failure = i;
    }
  }
  return out;
}

CatFunctor compose_cat_functors(const CatFunctor& g, const CatFunctor& f) {
  if (f.tgt() != g.src())
    throw TypeMismatchError(
        "cannot compose functors: middle categories differ");
  std::vector<FinCategory::Obj> on_obj;
  for (FinCategory::Obj a = 0; a < f.src().num_objects(); ++a)
    on_obj.push_back(g.on_object(f.on_object(a)));
  std::vector<FinCategory::Mor> on_mor;
  for (FinCategory::Mor m = 0; m < f.src().num_morphisms(); ++m)
    on_mor.push_back(g.on_morphism(f.on_morphism(m)));
  return CatFunctor(f.src(), g.tgt(), std::move(on_obj), std::move(on_mor));
}

} // namespace catcomp
