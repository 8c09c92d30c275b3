#include "catcomp/json_io.hpp"

namespace catcomp {

Json finset_json(const FinSet& s) { return Json(s.elements()); }

Json pairs_json(const std::map<Label, Label>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back(Json::array({k, v}));
  return out;
}

Json totalfn_json(const TotalFn& f) {
  return Json{{"dom", finset_json(f.dom())},
              {"cod", finset_json(f.cod())},
              {"map", pairs_json(f.mapping())}};
}

Json partialfn_json(const PartialFn& f) {
  return Json{{"dom", finset_json(f.dom())},
              {"cod", finset_json(f.cod())},
              {"map", pairs_json(f.mapping())}};
}

Json relation_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& [xp, x] : r) out.push_back(Json::array({xp, x}));
  return out;
}

Json square_json(const FinCategory& c, const CatPullback& sq) {
  return Json{{"cospan", Json::array({c.morphism_name(sq.cospan.f),
                                      c.morphism_name(sq.cospan.g)})},
              {"apex", c.object_name(sq.apex)},
              {"proj1", c.morphism_name(sq.proj1)},
              {"proj2", c.morphism_name(sq.proj2)}};
}

FinSet finset_from_json(const Json& j) {
  return FinSet(j.get<std::vector<Label>>());
}

std::map<Label, Label> pairs_from_json(const Json& j) {
  std::map<Label, Label> out;
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidInputError("expected a [key, value] pair, got " +
                              entry.dump());
    out[entry[0].get<Label>()] = entry[1].get<Label>();
  }
  return out;
}

Relation relation_from_json(const Json& j) {
  Relation out;
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidInputError("expected a [realizer, element] pair, got " +
                              entry.dump());
    out.emplace(entry[0].get<Label>(), entry[1].get<Label>());
  }
  return out;
}

Json category_doc(const std::string& name, const FinCategory& c) {
  Json morphisms = Json::array();
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    morphisms.push_back(Json{{"name", c.morphism_name(f)},
                             {"dom", c.object_name(c.dom(f))},
                             {"cod", c.object_name(c.cod(f))}});
  Json identities = Json::object();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    identities[c.object_name(a)] = c.morphism_name(c.identity(a));
  Json composition = Json::array();
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g)
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f))
        composition.push_back(Json::array({c.morphism_name(g),
                                           c.morphism_name(f),
                                           c.morphism_name(c.compose(g, f))}));
  return Json{{"kind", "category"},       {"name", name},
              {"objects", c.object_names()}, {"morphisms", morphisms},
              {"identities", identities}, {"composition", composition}};
}

Json functor_doc(const std::string& name, const std::string& category,
                 const SetFunctor& s) {
  const FinCategory& c = s.source();
  Json objects = Json::object();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    objects[c.object_name(a)] = finset_json(s.at(a));
  Json morphisms = Json::object();
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    morphisms[c.morphism_name(f)] = pairs_json(s.map(f).mapping());
  return Json{{"kind", "functor"},   {"name", name},
              {"category", category}, {"objects", objects},
              {"morphisms", morphisms}};
}

Json nat_trans_doc(const std::string& name, const std::string& source,
                   const std::string& target, const NatTrans& n) {
  const FinCategory& c = n.src().source();
  Json components = Json::object();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    components[c.object_name(a)] = pairs_json(n.at(a).mapping());
  return Json{{"kind", "nat-trans"}, {"name", name},
              {"source", source},    {"target", target},
              {"components", components}};
}

Json model_doc(const std::string& name, const Model& m) {
  Json datatypes = Json::array();
  for (int t = 0; t < m.num_types(); ++t)
    datatypes.push_back(finset_json(m.datatype(t)));
  Json maps = Json::array();
  for (int s = 0; s < m.num_types(); ++s)
    for (int t = 0; t < m.num_types(); ++t) {
      if (m.maps(s, t).empty()) continue;
      Json classes = Json::array();
      for (const PartialFn& f : m.maps(s, t))
        classes.push_back(pairs_json(f.mapping()));
      maps.push_back(Json{{"source", m.type_name(s)},
                          {"target", m.type_name(t)},
                          {"classes", classes}});
    }
  return Json{{"kind", "model"},
              {"name", name},
              {"types", m.type_names()},
              {"datatypes", datatypes},
              {"maps", maps}};
}

Json simulation_doc(const std::string& name, const std::string& source,
                    const std::string& target, const Simulation& g) {
  Json type_map = Json::object();
  Json realizes = Json::object();
  for (int t = 0; t < g.src().num_types(); ++t) {
    type_map[g.src().type_name(t)] = g.tgt().type_name(g.map_type(t));
    realizes[g.src().type_name(t)] = relation_json(g.realizes(t));
  }
  return Json{{"kind", "simulation"}, {"name", name},
              {"source", source},     {"target", target},
              {"type_map", type_map}, {"realizes", realizes}};
}

Json base_doc(const std::string& name, const std::string& category,
              const Base& b) {
  const FinCategory& c = b.category();
  Json family = Json::object();
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a) {
    Json members = Json::array();
    for (FinCategory::Mor i : b.family(a)) members.push_back(c.morphism_name(i));
    family[c.object_name(a)] = members;
  }
  return Json{{"kind", "base"},
              {"name", name},
              {"category", category},
              {"family", family}};
}

Json assembly_doc(const std::string& model, const Assembly& a) {
  return Json{{"kind", "assembly"},          {"name", a.name},
              {"model", model},              {"carrier", finset_json(a.carrier)},
              {"type", a.type_name},         {"realizes", relation_json(a.realizes)}};
}

Json fragment_doc(const std::string& name, const std::string& model,
                  const AsmFragment& f) {
  Json assemblies = Json::array();
  for (const Assembly& a : f.assemblies()) assemblies.push_back(a.name);
  return Json{{"kind", "fragment"},
              {"name", name},
              {"model", model},
              {"assemblies", assemblies}};
}

} // namespace catcomp
