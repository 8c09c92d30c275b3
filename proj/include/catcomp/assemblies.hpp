#pragma once

#include <string>
#include <vector>

#include "catcomp/simulations.hpp"

namespace catcomp {

/// A carrier set realized by elements of one datatype of a model. The
/// name identifies the assembly inside a fragment.
struct Assembly {
  std::string name;
  FinSet carrier;
  std::string type_name;
  Relation realizes; // (realizer in datatype(type_name), carrier element)

  friend bool operator==(const Assembly&, const Assembly&) = default;
};

struct AssemblyCheck {
  bool ok = true;
  std::vector<Label> unrealized;
};

/// Totality of the realizability relation: every carrier element needs a
/// realizer. Pairs escaping datatype × carrier are structural errors;
/// unknown type names are lookup errors.
AssemblyCheck check_assembly(const Model& m, const Assembly& a);

/// A morphism of assemblies: the bare function together with one witness
/// tracker from the model. Equality of morphisms is equality of the bare
/// functions; the tracker is bookkeeping.
struct TrackedFn {
  TotalFn fn;
  PartialFn tracker;

  friend bool operator==(const TrackedFn&, const TrackedFn&) = default;
};

/// All functions carrier(x) -> carrier(y) admitting a tracker in
/// m.maps(τ_x, τ_y), each with the first witness found. Exhaustive over
/// all |carrier(y)|^|carrier(x)| candidates, guarded by max_functions.
std::vector<TrackedFn> tracked_morphisms(const Model& m, const Assembly& x,
                                         const Assembly& y,
                                         std::size_t max_functions = 65536);

/// A finite full subcategory of assemblies over one model, with all
/// hom-sets precomputed. Construction validates every assembly and
/// rejects duplicate names.
class AsmFragment {
public:
  AsmFragment(Model model, std::vector<Assembly> assemblies);

  const Model& model() const { return model_; }
  const std::vector<Assembly>& assemblies() const { return assemblies_; }
  int size() const { return static_cast<int>(assemblies_.size()); }
  int assembly_index(const std::string& name) const;
  const std::vector<TrackedFn>& hom(int x, int y) const {
    return homs_.at(x).at(y);
  }

  friend bool operator==(const AsmFragment&, const AsmFragment&) = default;

private:
  Model model_;
  std::vector<Assembly> assemblies_;
  std::vector<std::vector<std::vector<TrackedFn>>> homs_;
};

/// Verdicts for the canonical functor into assemblies: a ↦ (S(a), a,
/// equality), f ↦ S(f). Everything is computed, nothing assumed; the
/// partial kind reuses the same construction over the partial model,
/// where fullness is informational rather than expected.
struct EmbedReport {
  AsmFragment fragment; // the image assemblies with their hom-sets
  bool functorial = true;
  bool injective_on_objects = true;
  bool full = true;     // every tracked morphism is the image of an arrow
  bool faithful = true; // parallel arrows keep distinct images
  bool s_injective_on_arrows = true;

  bool embedding() const {
    return functorial && full && faithful && injective_on_objects;
  }
};

EmbedReport embed_Ft(const FinCategory& c, const SetFunctor& s,
                     ModelKind kind = ModelKind::total);

/// The total model whose types are the fragment's assemblies and whose
/// classes are the tracked morphisms. Closure under identity and
/// composition is verified, not assumed.
Model model_over_fragment(const AsmFragment& frag);

/// Simulation from model_over_fragment(frag) down to the underlying
/// model: X̄ ↦ τ_X with the assembly's own realizability relation.
Simulation delta_t(const AsmFragment& frag);

struct GammaT {
  AsmFragment fragment; // one canonical assembly per type
  Simulation sim;       // from the model into model_over_fragment
};

/// Canonical assemblies (datatype(τ), τ, equality) for a total model,
/// with the simulation into the model over them.
GammaT gamma_t(const Model& m);

struct GammaDeltaReport {
  bool delta_gamma_exact = false; // δ∘γ equals the identity simulation
  EquivalenceReport equivalence;  // both composites against the identities
};

/// Builds the γ/δ pair for a total model and checks equivalence in all
/// four directions. δ∘γ is the identity on the nose; γ∘δ is only
/// claimed equivalent, so the verdict is computed.
GammaDeltaReport check_gamma_delta_equiv(const Model& m);

} // namespace catcomp
