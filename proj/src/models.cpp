#include "catcomp/models.hpp"

#include <algorithm>
#include <set>

namespace catcomp {

Model::Model(std::vector<std::string> type_names, std::vector<FinSet> datatypes,
             std::vector<std::vector<std::vector<PartialFn>>> maps)
    : type_names_(std::move(type_names)), datatypes_(std::move(datatypes)),
      maps_(std::move(maps)) {
  std::set<std::string> seen;
  for (const auto& n : type_names_)
    if (!seen.insert(n).second)
      throw InvalidInputError("duplicate type name: " + n);
  if (datatypes_.size() != type_names_.size())
    throw InvalidInputError("one datatype per type name required");
  if (maps_.size() != type_names_.size())
    throw InvalidInputError("maps must be indexed by source type");
  for (std::size_t s = 0; s < maps_.size(); ++s) {
    if (maps_[s].size() != type_names_.size())
      throw InvalidInputError("maps must be indexed by target type");
    for (std::size_t t = 0; t < maps_[s].size(); ++t) {
      for (const PartialFn& f : maps_[s][t])
        if (f.dom() != datatypes_[s] || f.cod() != datatypes_[t])
          throw InvalidInputError(
              "map " + describe(f) + " is not typed " + type_names_[s] +
              " ⇁ " + type_names_[t]);
      auto& cls = maps_[s][t];
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
  }
}

int Model::type_index(const std::string& name) const {
  for (int t = 0; t < num_types(); ++t)
    if (type_names_[t] == name) return t;
  throw LookupError("unknown type name: " + name);
}

bool Model::contains_map(int s, int t, const PartialFn& f) const {
  const auto& cls = maps(s, t);
  return std::binary_search(cls.begin(), cls.end(), f);
}

bool Model::is_total() const {
  for (const auto& row : maps_)
    for (const auto& cls : row)
      for (const PartialFn& f : cls)
        if (!f.is_total()) return false;
  return true;
}

PartialMorphism make_partial_morphism(const FinCategory& c, FinCategory::Mor i,
                                      FinCategory::Mor f) {
  if (c.dom(i) != c.dom(f))
    throw TypeMismatchError("partial morphism needs dom(i) = dom(f), got " +
                            describe(c, i) + " and " + describe(c, f));
  if (!is_mono(c, i).mono)
    throw InvalidInputError("partial morphism needs a mono first component; " +
                            describe(c, i) + " is not mono");
  return PartialMorphism{i, f};
}

FinCategory::Obj pm_source(const FinCategory& c, const PartialMorphism& pm) {
  return c.cod(pm.i);
}

FinCategory::Obj pm_target(const FinCategory& c, const PartialMorphism& pm) {
  return c.cod(pm.f);
}

std::string describe(const FinCategory& c, const PartialMorphism& pm) {
  return "(" + c.morphism_name(pm.i) + ", " + c.morphism_name(pm.f) + "): " +
         c.object_name(pm_source(c, pm)) + " ⇁ " +
         c.object_name(pm_target(c, pm));
}

PartialFn image_of_partial_morphism(const SetFunctor& s,
                                    const PartialMorphism& pm) {
  const FinCategory& c = s.source();
  const TotalFn& si = s.map(pm.i);
  const TotalFn& sf = s.map(pm.f);
  if (!si.injective())
    throw HypothesisError("mono preservation failed: image of " +
                          describe(c, pm.i) + " is not injective");
  std::map<Label, Label> values;
  for (const Label& x : si.dom()) values.emplace(si(x), sf(x));
  return PartialFn(s.at(pm_source(c, pm)), s.at(pm_target(c, pm)),
                   std::move(values));
}

PartialMorphism compose_partial_morphisms(const FinCategory& c,
                                          const PartialMorphism& pm1,
                                          const PartialMorphism& pm2) {
  if (pm_target(c, pm1) != pm_source(c, pm2))
    throw TypeMismatchError("partial morphisms not composable: " +
                            describe(c, pm1) + " then " + describe(c, pm2));
  Cospan cs{pm1.f, pm2.i};
  auto pb = find_pullback(c, cs);
  if (!pb)
    throw HypothesisError("no pullback of cospan (" +
                          c.morphism_name(cs.f) + ", " + c.morphism_name(cs.g) +
                          ") needed to compose " + describe(c, pm1) + " and " +
                          describe(c, pm2));
  return PartialMorphism{c.compose(pm1.i, pb->proj1),
                         c.compose(pm2.f, pb->proj2)};
}

std::vector<PartialMorphism> all_partial_morphisms(const FinCategory& c) {
  std::vector<PartialMorphism> out;
  for (FinCategory::Mor i = 0; i < c.num_morphisms(); ++i) {
    if (!is_mono(c, i).mono) continue;
    for (FinCategory::Mor f : c.from(c.dom(i)))
      out.push_back(PartialMorphism{i, f});
  }
  return out;
}

ValidationReport check_model_axioms(const Model& m) {
  ValidationReport report;
  for (int t = 0; t < m.num_types(); ++t)
    if (!m.contains_map(t, t, PartialFn::identity(m.datatype(t))))
      report.add("CM1", "maps(" + m.type_name(t) + ", " + m.type_name(t) +
                            ") lacks the identity");
  for (int r = 0; r < m.num_types(); ++r)
    for (int s = 0; s < m.num_types(); ++s)
      for (int t = 0; t < m.num_types(); ++t)
        for (const PartialFn& f : m.maps(r, s))
          for (const PartialFn& g : m.maps(s, t)) {
            PartialFn gf = compose_partial_fn(g, f);
            if (!m.contains_map(r, t, gf))
              report.add("CM2", "composite of " + describe(g) + " after " +
                                    describe(f) + " missing from maps(" +
                                    m.type_name(r) + ", " + m.type_name(t) +
                                    ")");
          }
  return report;
}

namespace {

void require_lawful(const FinCategory& c, const SetFunctor& s) {
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
}

Model finish_model(std::vector<std::string> names, std::vector<FinSet> sets,
                   std::vector<std::vector<std::vector<PartialFn>>> maps) {
  Model m(std::move(names), std::move(sets), std::move(maps));
  auto axioms = check_model_axioms(m);
  if (!axioms.ok())
    throw HypothesisError("built model violates " +
                          axioms.violations().front().law + ": " +
                          axioms.violations().front().detail);
  return m;
}

} // namespace

Model build_total_model(const FinCategory& c, const SetFunctor& s) {
  require_lawful(c, s);
  std::vector<FinSet> sets;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) sets.push_back(s.at(a));
  std::vector<std::vector<std::vector<PartialFn>>> maps(
      c.num_objects(), std::vector<std::vector<PartialFn>>(c.num_objects()));
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    maps[c.dom(f)][c.cod(f)].push_back(PartialFn::from_total(s.map(f)));
  return finish_model(c.object_names(), std::move(sets), std::move(maps));
}

Model build_partial_model(const FinCategory& c, const SetFunctor& s) {
  require_lawful(c, s);
  auto scan = has_all_pullbacks(c);
  if (!scan.all_exist)
    throw HypothesisError("category lacks a pullback for cospan (" +
                          c.morphism_name(scan.failing.front().f) + ", " +
                          c.morphism_name(scan.failing.front().g) + ")");
  auto preservation = preserves_pullbacks(s);
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
  for (const PartialMorphism& pm : all_partial_morphisms(c))
    maps[pm_source(c, pm)][pm_target(c, pm)].push_back(
        image_of_partial_morphism(s, pm));
  return finish_model(c.object_names(), std::move(sets), std::move(maps));
}

Model build_model(const FinCategory& c, const SetFunctor& s, ModelKind kind) {
  return kind == ModelKind::total ? build_total_model(c, s)
                                  : build_partial_model(c, s);
}

} // namespace catcomp
