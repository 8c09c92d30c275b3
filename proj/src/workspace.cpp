#include "catcomp/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace catcomp {

namespace {

template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(where + ": " + e.what());
  } catch (const TypeMismatchError& e) {
    throw TypeMismatchError(where + ": " + e.what());
  } catch (const LookupError& e) {
    throw LookupError(where + ": " + e.what());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(where + ": " + e.what());
  } catch (const HypothesisError& e) {
    throw HypothesisError(where + ": " + e.what());
  } catch (const LimitError& e) {
    throw LimitError(where + ": " + e.what());
  }
}

template <typename T>
const T& find_named(const std::map<std::string, T>& m, const std::string& name,
                    const std::string& kind) {
  auto it = m.find(name);
  if (it == m.end()) throw LookupError("no " + kind + " named '" + name + "'");
  return it->second;
}

template <typename T>
void insert_named(std::map<std::string, T>& m, const std::string& name,
                  T value, const std::string& kind) {
  if (!m.emplace(name, std::move(value)).second)
    throw InvalidInputError("duplicate " + kind + " name '" + name + "'");
}

FinCategory load_category(const Json& j, const Limits& limits) {
  std::vector<MorphismSpec> specs;
  for (const Json& m : j.at("morphisms"))
    specs.push_back({m.at("name").get<std::string>(),
                     m.at("dom").get<std::string>(),
                     m.at("cod").get<std::string>()});
  std::vector<std::array<std::string, 3>> composition;
  if (j.contains("composition"))
    for (const Json& e : j.at("composition"))
      composition.push_back({e.at(0).get<std::string>(),
                             e.at(1).get<std::string>(),
                             e.at(2).get<std::string>()});
  return FinCategory(j.at("objects").get<std::vector<std::string>>(), specs,
                     j.at("identities").get<std::map<std::string, std::string>>(),
                     composition, limits.max_morphisms);
}

SetFunctor load_functor(const Json& j, const Workspace& w, const Limits& limits) {
  const FinCategory& c = w.category(j.at("category").get<std::string>());
  std::vector<FinSet> on_objects;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    on_objects.push_back(finset_from_json(j.at("objects").at(c.object_name(a))));
  std::vector<TotalFn> on_morphisms;
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    on_morphisms.push_back(
        TotalFn(on_objects[c.dom(f)], on_objects[c.cod(f)],
                pairs_from_json(j.at("morphisms").at(c.morphism_name(f)))));
  return SetFunctor(c, std::move(on_objects), std::move(on_morphisms),
                    limits.max_set);
}

NatTrans load_nat_trans(const Json& j, const Workspace& w) {
  const SetFunctor& src = w.functor(j.at("source").get<std::string>());
  const SetFunctor& tgt = w.functor(j.at("target").get<std::string>());
  const FinCategory& c = src.source();
  std::vector<TotalFn> components;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    components.push_back(
        TotalFn(src.at(a), tgt.at(a),
                pairs_from_json(j.at("components").at(c.object_name(a)))));
  return NatTrans(src, tgt, std::move(components));
}

Base load_base(const Json& j, const Workspace& w) {
  const FinCategory& c = w.category(j.at("category").get<std::string>());
  std::vector<std::vector<FinCategory::Mor>> family(c.num_objects());
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    for (const Json& name : j.at("family").at(c.object_name(a)))
      family[a].push_back(c.morphism_index(name.get<std::string>()));
  return Base(c, std::move(family));
}

Model load_model(const Json& j, const Limits& limits) {
  auto types = j.at("types").get<std::vector<std::string>>();
  std::vector<FinSet> datatypes;
  for (const Json& d : j.at("datatypes")) datatypes.push_back(finset_from_json(d));
  if (datatypes.size() != types.size())
    throw InvalidInputError("model needs exactly one datatype per type");
  for (const FinSet& d : datatypes)
    if (d.size() > limits.max_set)
      throw LimitError("datatype exceeds the configured set limit (" +
                       std::to_string(d.size()) + " > " +
                       std::to_string(limits.max_set) + ")");
  auto type_index = [&](const std::string& name) {
    auto it = std::find(types.begin(), types.end(), name);
    if (it == types.end())
      throw InvalidInputError("maps entry references unknown type '" + name + "'");
    return static_cast<int>(it - types.begin());
  };
  std::vector<std::vector<std::vector<PartialFn>>> maps(
      types.size(), std::vector<std::vector<PartialFn>>(types.size()));
  for (const Json& entry : j.at("maps")) {
    int s = type_index(entry.at("source").get<std::string>());
    int t = type_index(entry.at("target").get<std::string>());
    for (const Json& cls : entry.at("classes"))
      maps[s][t].push_back(
          PartialFn(datatypes[s], datatypes[t], pairs_from_json(cls)));
  }
  return Model(std::move(types), std::move(datatypes), std::move(maps));
}

Simulation load_simulation(const Json& j, const Workspace& w) {
  const Model& src = w.model(j.at("source").get<std::string>());
  const Model& tgt = w.model(j.at("target").get<std::string>());
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (int t = 0; t < src.num_types(); ++t) {
    type_map.push_back(tgt.type_index(
        j.at("type_map").at(src.type_name(t)).get<std::string>()));
    realizes.push_back(relation_from_json(j.at("realizes").at(src.type_name(t))));
  }
  return Simulation(src, tgt, std::move(type_map), std::move(realizes));
}

NamedAssembly load_assembly(const Json& j, const Workspace& w,
                            const Limits& limits) {
  std::string model = j.at("model").get<std::string>();
  w.model(model); // the reference must resolve
  FinSet carrier = finset_from_json(j.at("carrier"));
  if (carrier.size() > limits.max_set)
    throw LimitError("carrier exceeds the configured set limit (" +
                     std::to_string(carrier.size()) + " > " +
                     std::to_string(limits.max_set) + ")");
  return NamedAssembly{std::move(model),
                       Assembly{j.at("name").get<std::string>(), carrier,
                                j.at("type").get<std::string>(),
                                relation_from_json(j.at("realizes"))}};
}

AsmFragment load_fragment(const Json& j, const Workspace& w) {
  std::string model = j.at("model").get<std::string>();
  std::vector<Assembly> members;
  for (const Json& name : j.at("assemblies")) {
    const NamedAssembly& na = w.assembly(name.get<std::string>());
    if (na.model != model)
      throw InvalidInputError("assembly '" + name.get<std::string>() +
                              "' was declared over model '" + na.model +
                              "', not '" + model + "'");
    members.push_back(na.assembly);
  }
  return AsmFragment(w.model(model), std::move(members));
}

} // namespace

void Workspace::add_documents(const std::vector<Json>& docs,
                              const Limits& limits) {
  static const std::vector<std::string> kind_order = {
      "category", "functor", "nat-trans", "base",
      "model",    "simulation", "assembly", "fragment"};
  for (const Json& doc : docs) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("name"))
      throw InvalidInputError(
          "every document needs string fields 'kind' and 'name'; got " +
          doc.dump().substr(0, 80));
    const std::string kind = doc.at("kind").get<std::string>();
    if (std::find(kind_order.begin(), kind_order.end(), kind) ==
        kind_order.end())
      throw InvalidInputError("unknown document kind '" + kind + "'");
  }
  for (const std::string& kind : kind_order) {
    for (const Json& doc : docs) {
      if (doc.at("kind").get<std::string>() != kind) continue;
      const std::string name = doc.at("name").get<std::string>();
      const std::string where = "document '" + name + "' (" + kind + ")";
      with_context(where, [&] {
        if (kind == "category")
          insert_named(categories_, name, load_category(doc, limits), kind);
        else if (kind == "functor") {
          insert_named(functors_, name, load_functor(doc, *this, limits), kind);
          functor_category_[name] = doc.at("category").get<std::string>();
        } else if (kind == "nat-trans")
          insert_named(nat_transes_, name, load_nat_trans(doc, *this), kind);
        else if (kind == "base")
          insert_named(bases_, name, load_base(doc, *this), kind);
        else if (kind == "model")
          insert_named(models_, name, load_model(doc, limits), kind);
        else if (kind == "simulation")
          insert_named(simulations_, name, load_simulation(doc, *this), kind);
        else if (kind == "assembly")
          insert_named(assemblies_, name, load_assembly(doc, *this, limits),
                       kind);
        else
          insert_named(fragments_, name, load_fragment(doc, *this), kind);
      });
    }
  }
}

const FinCategory& Workspace::category(const std::string& name) const {
  return find_named(categories_, name, "category");
}
const SetFunctor& Workspace::functor(const std::string& name) const {
  return find_named(functors_, name, "functor");
}
const NatTrans& Workspace::nat_trans(const std::string& name) const {
  return find_named(nat_transes_, name, "nat-trans");
}
const Model& Workspace::model(const std::string& name) const {
  return find_named(models_, name, "model");
}
const Simulation& Workspace::simulation(const std::string& name) const {
  return find_named(simulations_, name, "simulation");
}
const Base& Workspace::base(const std::string& name) const {
  return find_named(bases_, name, "base");
}
const NamedAssembly& Workspace::assembly(const std::string& name) const {
  return find_named(assemblies_, name, "assembly");
}
const AsmFragment& Workspace::fragment(const std::string& name) const {
  return find_named(fragments_, name, "fragment");
}
const std::string& Workspace::category_name_of(const std::string& functor) const {
  return find_named(functor_category_, functor, "functor");
}

std::vector<Json> read_documents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError(path + ": cannot open file");
  Json parsed;
  try {
    parsed = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
  if (parsed.is_array()) return std::vector<Json>(parsed.begin(), parsed.end());
  return {parsed};
}

Workspace load_workspace(const std::vector<std::string>& files,
                         const std::optional<std::string>& dir,
                         const Limits& limits) {
  std::vector<std::string> paths = files;
  if (dir) {
    if (!std::filesystem::is_directory(*dir))
      throw InvalidInputError(*dir + ": not a directory");
    std::vector<std::string> found;
    for (const auto& entry : std::filesystem::directory_iterator(*dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        found.push_back(entry.path().string());
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  std::vector<Json> docs;
  for (const std::string& path : paths)
    for (Json& doc : read_documents(path)) docs.push_back(std::move(doc));
  Workspace w;
  w.add_documents(docs, limits);
  return w;
}

} // namespace catcomp
