#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcomp/errors.hpp"
#include "catcomp/validation.hpp"

namespace catcomp {

inline constexpr std::size_t kDefaultMaxMorphisms = 64;

struct MorphismSpec {
  std::string name;
  std::string dom;
  std::string cod;
};

/// A finite category given by an explicit composition table. Objects and
/// morphisms are referenced by index; names are preserved for reports and
/// serialization. Construction accepts law-violating tables (they are
/// surfaced by validate_category), but rejects structurally broken input:
/// duplicate names, dangling references, entries for non-composable pairs,
/// or missing entries for composable pairs of non-identities. Table
/// entries for pairs involving a designated identity default to the
/// expected value and may be overridden explicitly.
class FinCategory {
public:
  using Obj = int;
  using Mor = int;

  FinCategory(std::vector<std::string> objects,
              const std::vector<MorphismSpec>& morphisms,
              const std::map<std::string, std::string>& identities,
              const std::vector<std::array<std::string, 3>>& composition,
              std::size_t max_morphisms = kDefaultMaxMorphisms);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names_.size()); }

  const std::string& object_name(Obj a) const { return objects_.at(a); }
  const std::string& morphism_name(Mor f) const { return mor_names_.at(f); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& morphism_names() const { return mor_names_; }

  Obj object_index(const std::string& name) const;
  Mor morphism_index(const std::string& name) const;

  Obj dom(Mor f) const { return mor_dom_.at(f); }
  Obj cod(Mor f) const { return mor_cod_.at(f); }
  Mor identity(Obj a) const { return identity_.at(a); }

  bool composable(Mor g, Mor f) const { return cod(f) == dom(g); }

  /// comp(g, f): first f, then g. Throws TypeMismatchError when the pair
  /// is not composable.
  Mor compose(Mor g, Mor f) const;

  /// Morphisms a -> b in index order.
  std::vector<Mor> hom(Obj a, Obj b) const;

  /// Morphisms with a given domain / codomain, in index order.
  std::vector<Mor> from(Obj a) const;
  std::vector<Mor> into(Obj b) const;

  friend bool operator==(const FinCategory&, const FinCategory&) = default;

private:
  std::vector<std::string> objects_;
  std::vector<std::string> mor_names_;
  std::vector<Obj> mor_dom_;
  std::vector<Obj> mor_cod_;
  std::vector<Mor> identity_;          // per object
  std::vector<std::vector<Mor>> comp_; // comp_[g][f], -1 where not composable
  std::map<std::string, Obj> obj_index_;
  std::map<std::string, Mor> mor_index_;
};

/// Checks identity typing, left/right identity laws, typing of every
/// table entry, and associativity over all composable triples.
ValidationReport validate_category(const FinCategory& c);

struct MonoResult {
  bool mono = false;
  // On failure, a pair (g, h) with i∘g = i∘h but g != h.
  std::optional<std::pair<FinCategory::Mor, FinCategory::Mor>> witness;
};

/// Left-cancellability of i, decided by enumerating all parallel pairs.
MonoResult is_mono(const FinCategory& c, FinCategory::Mor i);

struct Cospan {
  FinCategory::Mor f;
  FinCategory::Mor g; // cod(f) == cod(g)

  friend bool operator==(const Cospan&, const Cospan&) = default;
};

struct CatPullback {
  Cospan cospan;
  FinCategory::Obj apex;
  FinCategory::Mor proj1; // apex -> dom(f)
  FinCategory::Mor proj2; // apex -> dom(g)

  friend bool operator==(const CatPullback&, const CatPullback&) = default;
};

/// Exhaustive search for a pullback of the cospan. Candidates are tried
/// in (apex object, proj1, proj2) lexicographic order and checked for the
/// universal property over every cone; the first winner is the chosen
/// pullback, which keeps downstream partial-morphism composition
/// deterministic.
std::optional<CatPullback> find_pullback(const FinCategory& c, const Cospan& cs);

/// All universal cones over the cospan, in canonical order. Base2 of
/// module `bases` quantifies existentially over these.
std::vector<CatPullback> find_all_pullbacks(const FinCategory& c, const Cospan& cs);

/// Whether the given cone commutes over its cospan and is universal.
bool is_pullback_square(const FinCategory& c, const CatPullback& square);

struct PullbackScan {
  bool all_exist = true;
  std::vector<Cospan> failing; // cospans with no pullback
};

PullbackScan has_all_pullbacks(const FinCategory& c);

/// Same names, arrows reversed, table transposed. An involution.
FinCategory opposite(const FinCategory& c);

/// Render "name: dom -> cod" for reports.
std::string describe(const FinCategory& c, FinCategory::Mor f);

} // namespace catcomp
