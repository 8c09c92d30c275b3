#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "catcomp/models.hpp"

namespace catcomp {

/// Realizability relation at one type: pairs (x', x) where x' in the
/// target datatype realizes x in the source datatype.
using Relation = std::set<std::pair<Label, Label>>;

/// A type translation together with a per-type realizability relation.
/// Construction enforces typing of the relations; the simulation axioms
/// Siml1/Siml2 are checked by check_simulation.
class Simulation {
public:
  Simulation(Model src, Model tgt, std::vector<int> type_map,
             std::vector<Relation> realizes);

  const Model& src() const { return src_; }
  const Model& tgt() const { return tgt_; }
  const std::vector<int>& type_map() const { return type_map_; }
  int map_type(int t) const { return type_map_.at(t); }
  const Relation& realizes(int t) const { return realizes_.at(t); }

  friend bool operator==(const Simulation&, const Simulation&) = default;

private:
  Model src_;
  Model tgt_;
  std::vector<int> type_map_;      // source type -> target type
  std::vector<Relation> realizes_; // per source type
};

struct TrackResult {
  bool tracked = true;
  // on failure: the (x, x') pair whose implication broke
  std::optional<std::pair<Label, Label>> counterexample;
};

/// Does fp track f along g at (sigma, tau)? That is: whenever x is in
/// dom(f) and x' realizes x at sigma, x' must lie in dom(fp) and fp(x')
/// must realize f(x) at tau.
TrackResult tracks(const Simulation& g, const PartialFn& fp,
                   const PartialFn& f, int sigma, int tau);

/// Siml1: every source element has a realizer. Siml2: every map of the
/// source model has a tracker in the corresponding target class
/// (exhaustive search).
ValidationReport check_simulation(const Simulation& g);

/// Identity type map, equality relations.
Simulation identity_simulation(const Model& m);

/// Composite d ∘ g: types via both maps, realizers related through a
/// middle element.
Simulation compose_simulations(const Simulation& d, const Simulation& g);

struct TransformabilityResult {
  bool transformable = true;
  // per source type on success: the first map sending g-realizers to
  // d-realizers
  std::vector<PartialFn> witnesses;
  std::optional<int> failing_type;
};

/// g ⪯ d: for every type some f in tgt.maps(γτ, δτ) turns g-realizers
/// into d-realizers. Exhaustive over each class.
TransformabilityResult is_transformable(const Simulation& g,
                                        const Simulation& d);

struct EquivalenceReport {
  TransformabilityResult dg_le_iota; // d∘g ⪯ ι on src(g)
  TransformabilityResult iota_le_dg;
  TransformabilityResult gd_le_iota; // g∘d ⪯ ι on tgt(g)
  TransformabilityResult iota_le_gd;

  bool equivalent() const {
    return dg_le_iota.transformable && iota_le_dg.transformable &&
           gd_le_iota.transformable && iota_le_gd.transformable;
  }
};

/// Are the models equivalent *via this pair*: d∘g ~ identity and
/// g∘d ~ identity, each direction checked separately.
EquivalenceReport check_model_equivalence(const Simulation& g,
                                          const Simulation& d);

/// The canonical simulation of a slice arrow (C,S) -> (D,T): type map F,
/// equality relations (S(a) = T(Fa) strictly). Builds both models with
/// the requested constructor; for the partial kind F must additionally
/// preserve monos.
Simulation simulation_from_slice_arrow(const CatSetArrow& w, ModelKind kind);

/// The canonical simulation of a natural transformation η: S ⇒ T over
/// one category: identity type map, realizes(a) = graph of η_a.
Simulation simulation_from_nat_trans(const NatTrans& n, ModelKind kind);

} // namespace catcomp
