#pragma once

#include <map>
#include <string>
#include <vector>

#include "catcomp/errors.hpp"

namespace catcomp {

/// Elements of finite sets are opaque string atoms.
using Label = std::string;

/// A finite set of distinct labels, kept sorted so that equality of
/// FinSets is label-set equality.
class FinSet {
public:
  FinSet() = default;
  explicit FinSet(std::vector<Label> elements);

  bool contains(const Label& x) const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Label>& elements() const { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

private:
  std::vector<Label> elements_; // sorted, no duplicates
};

/// A total function between finite sets; defined on every element of dom.
class TotalFn {
public:
  TotalFn(FinSet dom, FinSet cod, std::map<Label, Label> mapping);

  static TotalFn identity(const FinSet& s);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::map<Label, Label>& mapping() const { return mapping_; }

  const Label& operator()(const Label& x) const;

  bool injective() const;

  friend bool operator==(const TotalFn&, const TotalFn&) = default;
  friend auto operator<=>(const TotalFn&, const TotalFn&) = default;

private:
  FinSet dom_;
  FinSet cod_;
  std::map<Label, Label> mapping_;
};

/// Composition g after f; requires cod(f) = dom(g).
TotalFn compose_total_fn(const TotalFn& g, const TotalFn& f);

/// A partial function between finite sets. The mapping's keys are the
/// defined subset of dom; equality is extensional (dom, cod, defined
/// values), never by provenance.
class PartialFn {
public:
  PartialFn(FinSet dom, FinSet cod, std::map<Label, Label> mapping);

  static PartialFn identity(const FinSet& s);
  static PartialFn from_total(const TotalFn& f);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::map<Label, Label>& mapping() const { return mapping_; }

  bool defined_at(const Label& x) const;
  const Label& operator()(const Label& x) const; // throws if undefined

  std::vector<Label> defined() const; // sorted
  bool is_total() const { return mapping_.size() == dom_.size(); }

  friend bool operator==(const PartialFn&, const PartialFn&) = default;
  friend auto operator<=>(const PartialFn&, const PartialFn&) = default;

private:
  FinSet dom_;
  FinSet cod_;
  std::map<Label, Label> mapping_;
};

/// Composite partial function g ∘ f: defined at x iff f is defined at x
/// and g is defined at f(x). Requires cod(f) = dom(g).
PartialFn compose_partial_fn(const PartialFn& g, const PartialFn& f);

/// Short printable form, e.g. "{0:0, 1:#}: {0,1} -> {0}" with '#' for
/// undefined points. Used in violation details.
std::string describe(const PartialFn& f);
std::string describe(const TotalFn& f);
std::string describe(const FinSet& s);

/// Canonical label for the pair (x, y) in a pullback apex.
Label pair_label(const Label& x, const Label& y);

/// The designated pullback of a cospan (f, g) in finite sets: matching
/// pairs with the coordinate projections.
struct SetPullback {
  FinSet apex;    // labels pair_label(x, y) for f(x) = g(y)
  TotalFn proj1;  // apex -> dom(f)
  TotalFn proj2;  // apex -> dom(g)
};

/// Requires cod(f) = cod(g).
SetPullback pullback_sets(const TotalFn& f, const TotalFn& g);

} // namespace catcomp
