#include "catcomp/finset.hpp"

#include <algorithm>
#include <sstream>

namespace catcomp {

FinSet::FinSet(std::vector<Label> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end())
    throw InvalidInputError("duplicate label in finite set: " + *dup);
}

bool FinSet::contains(const Label& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

TotalFn::TotalFn(FinSet dom, FinSet cod, std::map<Label, Label> mapping)
    : dom_(std::move(dom)), cod_(std::move(cod)), mapping_(std::move(mapping)) {
  if (mapping_.size() != dom_.size())
    throw InvalidInputError("total function must be defined on every domain element");
  for (const auto& [x, y] : mapping_) {
    if (!dom_.contains(x))
      throw InvalidInputError("total function defined at non-domain label: " + x);
    if (!cod_.contains(y))
      throw InvalidInputError("total function image outside codomain: " + x + " -> " + y);
  }
}

TotalFn TotalFn::identity(const FinSet& s) {
  std::map<Label, Label> m;
  for (const auto& x : s) m.emplace(x, x);
  return TotalFn(s, s, std::move(m));
}

const Label& TotalFn::operator()(const Label& x) const {
  auto it = mapping_.find(x);
  if (it == mapping_.end())
    throw LookupError("label not in function domain: " + x);
  return it->second;
}

bool TotalFn::injective() const {
  std::vector<Label> images;
  images.reserve(mapping_.size());
  for (const auto& [x, y] : mapping_) images.push_back(y);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

TotalFn compose_total_fn(const TotalFn& g, const TotalFn& f) {
  if (f.cod() != g.dom())
    throw TypeMismatchError("compose_total_fn: cod(f) != dom(g)");
  std::map<Label, Label> m;
  for (const auto& [x, y] : f.mapping()) m.emplace(x, g(y));
  return TotalFn(f.dom(), g.cod(), std::move(m));
}

PartialFn::PartialFn(FinSet dom, FinSet cod, std::map<Label, Label> mapping)
    : dom_(std::move(dom)), cod_(std::move(cod)), mapping_(std::move(mapping)) {
  for (const auto& [x, y] : mapping_) {
    if (!dom_.contains(x))
      throw InvalidInputError("partial function defined at non-domain label: " + x);
    if (!cod_.contains(y))
      throw InvalidInputError("partial function image outside codomain: " + x + " -> " + y);
  }
}

PartialFn PartialFn::identity(const FinSet& s) {
  std::map<Label, Label> m;
  for (const auto& x : s) m.emplace(x, x);
  return PartialFn(s, s, std::move(m));
}

PartialFn PartialFn::from_total(const TotalFn& f) {
  return PartialFn(f.dom(), f.cod(), f.mapping());
}

bool PartialFn::defined_at(const Label& x) const { return mapping_.count(x) != 0; }

const Label& PartialFn::operator()(const Label& x) const {
  auto it = mapping_.find(x);
  if (it == mapping_.end())
    throw LookupError("partial function undefined at label: " + x);
  return it->second;
}

std::vector<Label> PartialFn::defined() const {
  std::vector<Label> keys;
  keys.reserve(mapping_.size());
  for (const auto& [x, y] : mapping_) keys.push_back(x);
  return keys;
}

PartialFn compose_partial_fn(const PartialFn& g, const PartialFn& f) {
  if (f.cod() != g.dom())
    throw TypeMismatchError("compose_partial_fn: cod(f) != dom(g)");
  std::map<Label, Label> m;
  for (const auto& [x, y] : f.mapping())
    if (g.defined_at(y)) m.emplace(x, g(y));
  return PartialFn(f.dom(), g.cod(), std::move(m));
}

std::string describe(const FinSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& x : s) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(const PartialFn& f) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& x : f.dom()) {
    if (!first) out << ", ";
    out << x << ':' << (f.defined_at(x) ? f(x) : Label("#"));
    first = false;
  }
  out << "}: " << describe(f.dom()) << " -> " << describe(f.cod());
  return out.str();
}

std::string describe(const TotalFn& f) { return describe(PartialFn::from_total(f)); }

Label pair_label(const Label& x, const Label& y) { return "(" + x + "," + y + ")"; }

SetPullback pullback_sets(const TotalFn& f, const TotalFn& g) {
  if (f.cod() != g.cod())
    throw TypeMismatchError("pullback_sets: cospan legs must share a codomain");
  std::vector<Label> apex_elems;
  std::map<Label, Label> p1, p2;
  for (const auto& x : f.dom()) {
    for (const auto& y : g.dom()) {
      if (f(x) == g(y)) {
        Label p = pair_label(x, y);
        apex_elems.push_back(p);
        p1.emplace(p, x);
        p2.emplace(p, y);
      }
    }
  }
  FinSet apex(std::move(apex_elems));
  return SetPullback{apex, TotalFn(apex, f.dom(), std::move(p1)),
                     TotalFn(apex, g.dom(), std::move(p2))};
}

} // namespace catcomp
