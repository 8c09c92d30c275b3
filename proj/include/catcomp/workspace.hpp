#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catcomp/json_io.hpp"

namespace catcomp {

struct Limits {
  std::size_t max_morphisms = kDefaultMaxMorphisms;
  std::size_t max_set = kDefaultMaxSet;
};

/// An assembly document remembers which model it was declared over.
struct NamedAssembly {
  std::string model;
  Assembly assembly;
};

/// A named collection of documents of every kind. Documents may arrive
/// in any order; instantiation happens kind by kind, so cross-references
/// only ever point at earlier kinds (category < functor < nat-trans/base
/// < model < simulation/assembly < fragment). Names are unique per kind;
/// a dangling reference or malformed document aborts the load.
class Workspace {
public:
  void add_documents(const std::vector<Json>& docs, const Limits& limits);

  const FinCategory& category(const std::string& name) const;
  const SetFunctor& functor(const std::string& name) const;
  const NatTrans& nat_trans(const std::string& name) const;
  const Model& model(const std::string& name) const;
  const Simulation& simulation(const std::string& name) const;
  const Base& base(const std::string& name) const;
  const NamedAssembly& assembly(const std::string& name) const;
  const AsmFragment& fragment(const std::string& name) const;

  /// The name a functor's category was loaded under (for re-emission).
  const std::string& category_name_of(const std::string& functor) const;

  const std::map<std::string, FinCategory>& categories() const {
    return categories_;
  }
  const std::map<std::string, SetFunctor>& functors() const { return functors_; }
  const std::map<std::string, NatTrans>& nat_transes() const {
    return nat_transes_;
  }
  const std::map<std::string, Model>& models() const { return models_; }
  const std::map<std::string, Simulation>& simulations() const {
    return simulations_;
  }
  const std::map<std::string, Base>& bases() const { return bases_; }
  const std::map<std::string, NamedAssembly>& assemblies() const {
    return assemblies_;
  }
  const std::map<std::string, AsmFragment>& fragments() const {
    return fragments_;
  }

private:
  std::map<std::string, FinCategory> categories_;
  std::map<std::string, SetFunctor> functors_;
  std::map<std::string, std::string> functor_category_;
  std::map<std::string, NatTrans> nat_transes_;
  std::map<std::string, Model> models_;
  std::map<std::string, Simulation> simulations_;
  std::map<std::string, Base> bases_;
  std::map<std::string, NamedAssembly> assemblies_;
  std::map<std::string, AsmFragment> fragments_;
};

/// Parse one file: either a single document object or an array of them.
std::vector<Json> read_documents(const std::string& path);

/// Load the given files plus every *.json under `dir` (sorted by file
/// name), then instantiate everything into one workspace.
Workspace load_workspace(const std::vector<std::string>& files,
                         const std::optional<std::string>& dir,
                         const Limits& limits);

} // namespace catcomp
