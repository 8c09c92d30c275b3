#pragma once

#include <vector>

#include "catcomp/fincat.hpp"
#include "catcomp/models.hpp"

namespace catcomp {

/// One closure obligation together with the square that discharged it:
/// i sits in the family at cod(i), f runs out of dom(i), j sits in the
/// family at cod(j) == cod(f), and `square` is a pullback of (f, j)
/// whose first leg composes with i back into the family.
struct BaseSquare {
  FinCategory::Mor i;
  FinCategory::Mor f;
  FinCategory::Mor j;
  CatPullback square;

  friend bool operator==(const BaseSquare&, const BaseSquare&) = default;
};

/// A per-object family of monomorphisms over a finite category, the
/// data from which a base-relative model is carved. Construction checks
/// typing only (every listed arrow lands in its object); mono-ness and
/// the closure law are the business of check_base, which also records
/// its chosen squares in pullback_log.
class Base {
public:
  Base(FinCategory category,
       std::vector<std::vector<FinCategory::Mor>> family);

  const FinCategory& category() const { return category_; }
  const std::vector<std::vector<FinCategory::Mor>>& family() const {
    return family_;
  }
  const std::vector<FinCategory::Mor>& family(FinCategory::Obj a) const;
  bool member(FinCategory::Obj a, FinCategory::Mor i) const;

  /// Squares recorded by the most recent check_base run (empty before).
  const std::vector<BaseSquare>& pullback_log() const { return pullback_log_; }

  friend bool operator==(const Base&, const Base&) = default;

private:
  FinCategory category_;
  std::vector<std::vector<FinCategory::Mor>> family_; // sorted per object
  std::vector<BaseSquare> pullback_log_;

  friend ValidationReport check_base(Base& b);
};

/// Base1: the identity of every object belongs to its family. Base2:
/// for every family member i out of s, every f: s -> b and every family
/// member j into b, some pullback of (f, j) has its first leg compose
/// with i back into the family at cod(i). The search ranges over all
/// pullbacks of the cospan; each satisfied obligation deposits the
/// witnessing square in b.pullback_log(). A family member that is not
/// mono is an input error, not a law violation.
ValidationReport check_base(Base& b);

enum class BaseKind { identities, isos, all_monos };

/// The three stock families: identities only, all isomorphisms, all
/// monomorphisms. The last requires the category to have all pullbacks.
Base builtin_base(const FinCategory& c, BaseKind kind);

/// Restrict the partial-morphism model to spans whose mono leg lies in
/// the base: maps(a, b) collects the images of (i, f) for i in the
/// family at a and f: dom(i) -> b. The functor must preserve every
/// square in the base's pullback log; the model axioms are then checked
/// on the result rather than taken on faith, and a failure names the
/// pair whose composite escaped.
Model build_base_model(const FinCategory& c, const SetFunctor& s, Base b);

/// Dual check: `family` lists, per object a, arrows with *domain* a
/// that become monos into a in the opposite category. Equivalent to
/// check_base over opposite(c) with the same indices.
ValidationReport check_cobase(const FinCategory& c,
                              std::vector<std::vector<FinCategory::Mor>> family);

} // namespace catcomp
