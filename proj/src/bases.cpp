#include "catcomp/bases.hpp"

#include <algorithm>

#include "catcomp/errors.hpp"
#include "catcomp/functors.hpp"

namespace catcomp {

Base::Base(FinCategory category, std::vector<std::vector<FinCategory::Mor>> family)
    : category_(std::move(category)), family_(std::move(family)) {
  if (static_cast<int>(family_.size()) != category_.num_objects())
    throw InvalidInputError("base family must list one set per object");
  for (FinCategory::Obj a = 0; a < category_.num_objects(); ++a) {
    auto& fam = family_[a];
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    for (FinCategory::Mor i : fam) {
      if (i < 0 || i >= category_.num_morphisms())
        throw InvalidInputError("base family refers to a morphism out of range");
      if (category_.cod(i) != a)
        throw InvalidInputError("family member " + category_.morphism_name(i) +
                                " does not land in " + category_.object_name(a));
    }
  }
}

const std::vector<FinCategory::Mor>& Base::family(FinCategory::Obj a) const {
  if (a < 0 || a >= static_cast<int>(family_.size()))
    throw LookupError("no family at object index " + std::to_string(a));
  return family_[a];
}

bool Base::member(FinCategory::Obj a, FinCategory::Mor i) const {
  const auto& fam = family(a);
  return std::binary_search(fam.begin(), fam.end(), i);
}

ValidationReport check_base(Base& b) {
  const FinCategory& c = b.category();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    for (FinCategory::Mor i : b.family(a))
      if (!is_mono(c, i).mono)
        throw InvalidInputError("family member " + c.morphism_name(i) +
                                " is not mono");

  ValidationReport report;
  b.pullback_log_.clear();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    if (!b.member(a, c.identity(a)))
      report.add("Base1", "identity " + c.morphism_name(c.identity(a)) +
                              " missing from the family at " + c.object_name(a));

  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) {
    for (FinCategory::Mor i : b.family(a)) {
      FinCategory::Obj s = c.dom(i);
      for (FinCategory::Obj bp = 0; bp < c.num_objects(); ++bp) {
        for (FinCategory::Mor f : c.hom(s, bp)) {
          for (FinCategory::Mor j : b.family(bp)) {
            bool closed = false;
            for (const CatPullback& sq : find_all_pullbacks(c, {f, j})) {
              if (b.member(a, c.compose(i, sq.proj1))) {
                b.pullback_log_.push_back({i, f, j, sq});
                closed = true;
                break;
              }
            }
            if (!closed)
              report.add("Base2",
                         "no pullback of (" + c.morphism_name(f) + ", " +
                             c.morphism_name(j) + ") composes " +
                             c.morphism_name(i) + " back into the family at " +
                             c.object_name(a));
          }
        }
      }
    }
  }
  return report;
}

namespace {

bool is_iso(const FinCategory& c, FinCategory::Mor f) {
  for (FinCategory::Mor g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(g, f) == c.identity(c.dom(f)) &&
        c.compose(f, g) == c.identity(c.cod(f)))
      return true;
  return false;
}

} // namespace

Base builtin_base(const FinCategory& c, BaseKind kind) {
  std::vector<std::vector<FinCategory::Mor>> family(c.num_objects());
  switch (kind) {
  case BaseKind::identities:
    for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
      family[a].push_back(c.identity(a));
    break;
  case BaseKind::isos:
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      if (is_iso(c, f)) family[c.cod(f)].push_back(f);
    break;
  case BaseKind::all_monos: {
    auto scan = has_all_pullbacks(c);
    if (!scan.all_exist)
      throw HypothesisError("category lacks a pullback for cospan (" +
                            c.morphism_name(scan.failing.front().f) + ", " +
                            c.morphism_name(scan.failing.front().g) + ")");
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      if (is_mono(c, f).mono) family[c.cod(f)].push_back(f);
    break;
  }
  }
  return Base(c, std::move(family));
}

Model build_base_model(const FinCategory& c, const SetFunctor& s, Base b) {
  if (!(b.category() == c))
    throw TypeMismatchError("base was built over a different category");
  if (!(s.source() == c))
    throw TypeMismatchError("functor is not over the base's category");

  auto cat_report = validate_category(c);
  if (!cat_report.ok())
    throw HypothesisError("not a category: " +
                          cat_report.violations().front().law + " — " +
                          cat_report.violations().front().detail);
  auto fun_report = validate_functor(s);
  if (!fun_report.ok())
    throw HypothesisError("not a functor: " +
                          fun_report.violations().front().law + " — " +
                          fun_report.violations().front().detail);

  auto base_report = check_base(b);
  if (!base_report.ok())
    throw HypothesisError("not a base: " +
                          base_report.violations().front().law + " — " +
                          base_report.violations().front().detail);

  std::vector<CatPullback> squares;
  for (const BaseSquare& entry : b.pullback_log())
    if (std::find(squares.begin(), squares.end(), entry.square) == squares.end())
      squares.push_back(entry.square);
  auto preservation = preserves_pullbacks(s, squares);
  if (!preservation.pullbacks_preserved) {
    const CatPullback& sq = preservation.failing.front();
    throw HypothesisError("functor does not preserve the pullback of cospan (" +
                          c.morphism_name(sq.cospan.f) + ", " +
                          c.morphism_name(sq.cospan.g) + ")");
  }

  std::vector<FinSet> sets;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) sets.push_back(s.at(a));
  std::vector<std::vector<std::vector<PartialFn>>> maps(
      c.num_objects(), std::vector<std::vector<PartialFn>>(c.num_objects()));
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    for (FinCategory::Mor i : b.family(a))
      for (FinCategory::Obj bp = 0; bp < c.num_objects(); ++bp)
        for (FinCategory::Mor f : c.hom(c.dom(i), bp))
          maps[a][bp].push_back(image_of_partial_morphism(s, {i, f}));

  Model m(c.object_names(), std::move(sets), std::move(maps));
  auto axioms = check_model_axioms(m);
  if (!axioms.ok())
    throw HypothesisError("base model violates " +
                          axioms.violations().front().law + ": " +
                          axioms.violations().front().detail +
                          " (preserving the logged squares was not enough)");
  return m;
}

ValidationReport check_cobase(const FinCategory& c,
                              std::vector<std::vector<FinCategory::Mor>> family) {
  Base b(opposite(c), std::move(family));
  return check_base(b);
}

} // namespace catcomp
