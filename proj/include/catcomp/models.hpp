#pragma once

#include <string>
#include <vector>

#include "catcomp/functors.hpp"

namespace catcomp {

/// A family of datatypes indexed by type names together with classes of
/// partial functions between them. Construction enforces typing of every
/// map and canonicalizes each class (sorted, extensionally deduplicated);
/// the closure axioms CM1/CM2 are checked by check_model_axioms.
class Model {
public:
  Model(std::vector<std::string> type_names, std::vector<FinSet> datatypes,
        std::vector<std::vector<std::vector<PartialFn>>> maps);

  int num_types() const { return static_cast<int>(type_names_.size()); }
  const std::string& type_name(int t) const { return type_names_.at(t); }
  const std::vector<std::string>& type_names() const { return type_names_; }
  int type_index(const std::string& name) const;

  const FinSet& datatype(int t) const { return datatypes_.at(t); }
  const std::vector<PartialFn>& maps(int s, int t) const {
    return maps_.at(s).at(t);
  }
  bool contains_map(int s, int t, const PartialFn& f) const;

  /// Every member of every maps class is defined on its whole domain.
  bool is_total() const;

  friend bool operator==(const Model&, const Model&) = default;

private:
  std::vector<std::string> type_names_;
  std::vector<FinSet> datatypes_;
  std::vector<std::vector<std::vector<PartialFn>>> maps_; // [src][tgt]
};

/// A pair (i, f) with i a mono into a = cod(i) and dom(f) = dom(i),
/// read as a partial morphism a ⇁ cod(f).
struct PartialMorphism {
  FinCategory::Mor i;
  FinCategory::Mor f;

  friend bool operator==(const PartialMorphism&, const PartialMorphism&) =
      default;
};

/// Validates the pair against the category: dom(i) = dom(f), i mono.
PartialMorphism make_partial_morphism(const FinCategory& c, FinCategory::Mor i,
                                      FinCategory::Mor f);

FinCategory::Obj pm_source(const FinCategory& c, const PartialMorphism& pm);
FinCategory::Obj pm_target(const FinCategory& c, const PartialMorphism& pm);
std::string describe(const FinCategory& c, const PartialMorphism& pm);

/// S applied to a partial morphism: the partial function defined on the
/// image of S(i) and mapping S(i)(x) to S(f)(x). Requires S(i) injective
/// (which pullback preservation guarantees).
PartialFn image_of_partial_morphism(const SetFunctor& s,
                                    const PartialMorphism& pm);

/// Composite of pm1: a ⇁ b and pm2: b ⇁ c' via the chosen pullback of
/// (pm1.f, pm2.i): result (i ∘ proj1, g ∘ proj2). Deterministic because
/// find_pullback is.
PartialMorphism compose_partial_morphisms(const FinCategory& c,
                                          const PartialMorphism& pm1,
                                          const PartialMorphism& pm2);

/// All partial morphisms of c in canonical (i, f) index order.
std::vector<PartialMorphism> all_partial_morphisms(const FinCategory& c);

/// Reports every missing identity (CM1) and every composable pair whose
/// composite is absent from its class (CM2).
ValidationReport check_model_axioms(const Model& m);

/// Datatypes S(a); maps(a, b) = images of the arrows a -> b, all total.
Model build_total_model(const FinCategory& c, const SetFunctor& s);

/// Datatypes S(a); maps(a, b) = images of all partial morphisms a ⇁ b.
/// Requires all pullbacks in c and full pullback preservation by s;
/// closure under composition is verified, not assumed.
Model build_partial_model(const FinCategory& c, const SetFunctor& s);

enum class ModelKind { total, partial };

Model build_model(const FinCategory& c, const SetFunctor& s, ModelKind kind);

} // namespace catcomp
