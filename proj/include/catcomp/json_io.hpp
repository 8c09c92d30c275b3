#pragma once

#include <string>

#include <json.hpp>

#include "catcomp/assemblies.hpp"
#include "catcomp/bases.hpp"
#include "catcomp/simulations.hpp"

namespace catcomp {

/// All documents and reports use insertion-ordered JSON so that output
/// is canonical: emit order is fixed by the code, never by hashing.
using Json = nlohmann::ordered_json;

// ---- values ----------------------------------------------------------
Json finset_json(const FinSet& s);
Json pairs_json(const std::map<Label, Label>& m); // [[k, v], ...]
Json totalfn_json(const TotalFn& f);   // {"dom", "cod", "map"}
Json partialfn_json(const PartialFn& f);
Json relation_json(const Relation& r);
Json square_json(const FinCategory& c, const CatPullback& sq);

FinSet finset_from_json(const Json& j);
std::map<Label, Label> pairs_from_json(const Json& j);
Relation relation_from_json(const Json& j);

// ---- documents: {"kind": ..., "name": ..., ...} ----------------------
// Cross-references (a functor's category, a simulation's models, ...)
// are recorded by name; the names are supplied by the caller since the
// library values do not know what they are called in a workspace.
Json category_doc(const std::string& name, const FinCategory& c);
Json functor_doc(const std::string& name, const std::string& category,
                 const SetFunctor& s);
Json nat_trans_doc(const std::string& name, const std::string& source,
                   const std::string& target, const NatTrans& n);
Json model_doc(const std::string& name, const Model& m);
Json simulation_doc(const std::string& name, const std::string& source,
                    const std::string& target, const Simulation& g);
Json base_doc(const std::string& name, const std::string& category,
              const Base& b);
Json assembly_doc(const std::string& model, const Assembly& a);
Json fragment_doc(const std::string& name, const std::string& model,
                  const AsmFragment& f);

} // namespace catcomp
