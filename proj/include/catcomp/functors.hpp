#pragma once

#include <optional>
#include <vector>

#include "catcomp/fincat.hpp"
#include "catcomp/finset.hpp"

namespace catcomp {

inline constexpr std::size_t kDefaultMaxSet = 16;

/// A Set-valued assignment on a finite category. Construction enforces
/// typing only (on_morphisms(f): at(dom f) -> at(cod f)); the functor
/// laws are checked by validate_functor, so deliberately broken
/// assignments can be built and fed to the checkers.
class SetFunctor {
public:
  SetFunctor(FinCategory source, std::vector<FinSet> on_objects,
             std::vector<TotalFn> on_morphisms,
             std::size_t max_set = kDefaultMaxSet);

  const FinCategory& source() const { return source_; }
  const FinSet& at(FinCategory::Obj a) const { return on_objects_.at(a); }
  const TotalFn& map(FinCategory::Mor f) const { return on_morphisms_.at(f); }

  /// Distinct morphisms have distinct images (as typed TotalFns).
  bool injective_on_arrows() const;

  friend bool operator==(const SetFunctor&, const SetFunctor&) = default;

private:
  FinCategory source_;
  std::vector<FinSet> on_objects_;
  std::vector<TotalFn> on_morphisms_;
};

/// Reports every identity/composition preservation failure; empty iff
/// the assignment is a functor.
ValidationReport validate_functor(const SetFunctor& s);

struct PreservationReport {
  bool pullbacks_preserved = true;
  std::vector<CatPullback> failing; // squares with a non-bijective comparison
  // Corollary flag: every mono of the source has an injective image.
  bool monos_preserved = true;
  std::vector<FinCategory::Mor> failing_monos;
};

/// Pullback preservation via comparison-map bijectivity: for a square
/// with apex p over (f, g), the map S(p) -> pullback_sets(Sf, Sg) given
/// by z -> (S(proj1) z, S(proj2) z) must be a bijection. With no square
/// list supplied, every cospan of the source that has a pullback is
/// tested (using the canonical choice). Supplied squares must pass
/// is_pullback_square.
PreservationReport preserves_pullbacks(
    const SetFunctor& s,
    const std::optional<std::vector<CatPullback>>& squares = std::nullopt);

/// A family of component functions between two Set-valued assignments on
/// the same category. Construction enforces typing; naturality is
/// checked by validate_nat_trans.
class NatTrans {
public:
  NatTrans(SetFunctor src, SetFunctor tgt, std::vector<TotalFn> components);

  const SetFunctor& src() const { return src_; }
  const SetFunctor& tgt() const { return tgt_; }
  const TotalFn& at(FinCategory::Obj a) const { return components_.at(a); }

  friend bool operator==(const NatTrans&, const NatTrans&) = default;

private:
  SetFunctor src_;
  SetFunctor tgt_;
  std::vector<TotalFn> components_; // per source object
};

/// Lists all morphisms where the naturality square fails to commute.
ValidationReport validate_nat_trans(const NatTrans& n);

NatTrans identity_nat_trans(const SetFunctor& s);

/// Vertical composition; requires n1.tgt() == n2.src() exactly.
NatTrans compose_nat_trans(const NatTrans& n2, const NatTrans& n1);

/// The covariant representable at a: b -> names of C(a, b), acting by
/// postcomposition.
SetFunctor hom_functor(const FinCategory& c, FinCategory::Obj a);

/// A functor between finite categories, given by index maps. Typing is
/// enforced on construction; preservation of identities/composition is
/// reported by validate_slice_arrow.
class CatFunctor {
public:
  CatFunctor(FinCategory src, FinCategory tgt,
             std::vector<FinCategory::Obj> object_map,
             std::vector<FinCategory::Mor> morphism_map);

  static CatFunctor identity(const FinCategory& c);

  const FinCategory& src() const { return src_; }
  const FinCategory& tgt() const { return tgt_; }
  FinCategory::Obj on_object(FinCategory::Obj a) const {
    return object_map_.at(a);
  }
  FinCategory::Mor on_morphism(FinCategory::Mor f) const {
    return morphism_map_.at(f);
  }

  friend bool operator==(const CatFunctor&, const CatFunctor&) = default;

private:
  FinCategory src_;
  FinCategory tgt_;
  std::vector<FinCategory::Obj> object_map_;
  std::vector<FinCategory::Mor> morphism_map_;
};

/// An arrow (C, S) -> (D, T) of categories-with-Set-functors: F between
/// the categories with T∘F = S strictly. Construction checks only that
/// the three pieces fit (S on F's source, T on F's target).
class CatSetArrow {
public:
  CatSetArrow(CatFunctor F, SetFunctor S, SetFunctor T);

  const CatFunctor& F() const { return F_; }
  const SetFunctor& S() const { return S_; }
  const SetFunctor& T() const { return T_; }

  friend bool operator==(const CatSetArrow&, const CatSetArrow&) = default;

private:
  CatFunctor F_;
  SetFunctor S_;
  SetFunctor T_;
};

struct SliceArrowReport {
  // Functoriality of F and strict equality T∘F = S, as violations.
  ValidationReport laws;
  // Hypothesis flag for the partial-model construction: F sends monos to
  // monos. Informational, not a violation.
  bool f_preserves_monos = true;
  std::optional<FinCategory::Mor> mono_failure; // a mono with non-mono image
};

SliceArrowReport validate_slice_arrow(const CatSetArrow& w);

/// Composite g∘f; requires f.tgt() == g.src() exactly.
CatFunctor compose_cat_functors(const CatFunctor& g, const CatFunctor& f);

} // namespace catcomp
