#include "catcomp/fincat.hpp"

#include <algorithm>

namespace catcomp {

FinCategory::FinCategory(std::vector<std::string> objects,
                         const std::vector<MorphismSpec>& morphisms,
                         const std::map<std::string, std::string>& identities,
                         const std::vector<std::array<std::string, 3>>& composition,
                         std::size_t max_morphisms)
    : objects_(std::move(objects)) {
  if (morphisms.size() > max_morphisms)
    throw LimitError("category exceeds the configured morphism limit (" +
                     std::to_string(morphisms.size()) + " > " +
                     std::to_string(max_morphisms) + ")");
  for (int a = 0; a < static_cast<int>(objects_.size()); ++a) {
    if (!obj_index_.emplace(objects_[a], a).second)
      throw InvalidInputError("duplicate object name: " + objects_[a]);
  }
  for (const auto& m : morphisms) {
    int idx = static_cast<int>(mor_names_.size());
    if (!mor_index_.emplace(m.name, idx).second)
      throw InvalidInputError("duplicate morphism name: " + m.name);
    auto di = obj_index_.find(m.dom);
    auto ci = obj_index_.find(m.cod);
    if (di == obj_index_.end())
      throw InvalidInputError("morphism " + m.name + " has unknown domain " + m.dom);
    if (ci == obj_index_.end())
      throw InvalidInputError("morphism " + m.name + " has unknown codomain " + m.cod);
    mor_names_.push_back(m.name);
    mor_dom_.push_back(di->second);
    mor_cod_.push_back(ci->second);
  }
  identity_.assign(objects_.size(), -1);
  for (const auto& [obj, mor] : identities) {
    auto oi = obj_index_.find(obj);
    if (oi == obj_index_.end())
      throw InvalidInputError("identity assigned to unknown object: " + obj);
    auto mi = mor_index_.find(mor);
    if (mi == mor_index_.end())
      throw InvalidInputError("identity of " + obj + " names unknown morphism " + mor);
    identity_[oi->second] = mi->second;
  }
  for (std::size_t a = 0; a < objects_.size(); ++a)
    if (identity_[a] < 0)
      throw InvalidInputError("object " + objects_[a] + " has no identity morphism");

  const int n = num_morphisms();
  comp_.assign(n, std::vector<Mor>(n, -1));
  for (const auto& [g, f, gf] : composition) {
    auto gi = mor_index_.find(g);
    auto fi = mor_index_.find(f);
    auto ri = mor_index_.find(gf);
    if (gi == mor_index_.end() || fi == mor_index_.end())
      throw InvalidInputError("composition entry references unknown morphism (" + g +
                              ", " + f + ")");
    if (ri == mor_index_.end())
      throw InvalidInputError("composition result is an unknown morphism: " + gf);
    if (!composable(gi->second, fi->second))
      throw InvalidInputError("composition entry for non-composable pair (" + g + ", " +
                              f + ")");
    comp_[gi->second][fi->second] = ri->second;
  }
  // Default entries for pairs involving a designated identity; explicit
  // entries (possibly law-violating) win.
  for (Mor f = 0; f < n; ++f) {
    Mor id_dom = identity_[mor_dom_[f]];
    Mor id_cod = identity_[mor_cod_[f]];
    if (comp_[f][id_dom] < 0) comp_[f][id_dom] = f;
    if (comp_[id_cod][f] < 0) comp_[id_cod][f] = f;
  }
  for (Mor g = 0; g < n; ++g)
    for (Mor f = 0; f < n; ++f)
      if (composable(g, f) && comp_[g][f] < 0)
        throw InvalidInputError("composition table missing entry for (" + mor_names_[g] +
                                ", " + mor_names_[f] + ")");
}

FinCategory::Obj FinCategory::object_index(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw LookupError("unknown object: " + name);
  return it->second;
}

FinCategory::Mor FinCategory::morphism_index(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end()) throw LookupError("unknown morphism: " + name);
  return it->second;
}

FinCategory::Mor FinCategory::compose(Mor g, Mor f) const {
  if (!composable(g, f))
    throw TypeMismatchError("compose(" + mor_names_.at(g) + ", " + mor_names_.at(f) +
                            "): cod(f) != dom(g)");
  return comp_[g][f];
}

std::vector<FinCategory::Mor> FinCategory::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  for (Mor f = 0; f < num_morphisms(); ++f)
    if (mor_dom_[f] == a && mor_cod_[f] == b) out.push_back(f);
  return out;
}

std::vector<FinCategory::Mor> FinCategory::from(Obj a) const {
  std::vector<Mor> out;
  for (Mor f = 0; f < num_morphisms(); ++f)
    if (mor_dom_[f] == a) out.push_back(f);
  return out;
}

std::vector<FinCategory::Mor> FinCategory::into(Obj b) const {
  std::vector<Mor> out;
  for (Mor f = 0; f < num_morphisms(); ++f)
    if (mor_cod_[f] == b) out.push_back(f);
  return out;
}

std::string describe(const FinCategory& c, FinCategory::Mor f) {
  return c.morphism_name(f) + ": " + c.object_name(c.dom(f)) + " -> " +
         c.object_name(c.cod(f));
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const int n = c.num_morphisms();

  for (int a = 0; a < c.num_objects(); ++a) {
    auto i = c.identity(a);
    if (c.dom(i) != a || c.cod(i) != a)
      report.add("identity-typing", "identity(" + c.object_name(a) + ") = " +
                                        describe(c, i) + " is not an endomorphism of " +
                                        c.object_name(a));
  }

  for (FinCategory::Mor f = 0; f < n; ++f) {
    auto id_dom = c.identity(c.dom(f));
    auto id_cod = c.identity(c.cod(f));
    if (c.composable(f, id_dom) && c.compose(f, id_dom) != f)
      report.add("identity-right", "comp(" + c.morphism_name(f) + ", " +
                                       c.morphism_name(id_dom) + ") = " +
                                       c.morphism_name(c.compose(f, id_dom)) +
                                       ", expected " + c.morphism_name(f));
    if (c.composable(id_cod, f) && c.compose(id_cod, f) != f)
      report.add("identity-left", "comp(" + c.morphism_name(id_cod) + ", " +
                                      c.morphism_name(f) + ") = " +
                                      c.morphism_name(c.compose(id_cod, f)) +
                                      ", expected " + c.morphism_name(f));
  }

  for (FinCategory::Mor g = 0; g < n; ++g) {
    for (FinCategory::Mor f = 0; f < n; ++f) {
      if (!c.composable(g, f)) continue;
      auto gf = c.compose(g, f);
      if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
        report.add("composition-typing",
                   "comp(" + c.morphism_name(g) + ", " + c.morphism_name(f) + ") = " +
                       describe(c, gf) + ", expected type " + c.object_name(c.dom(f)) +
                       " -> " + c.object_name(c.cod(g)));
    }
  }

  for (FinCategory::Mor h = 0; h < n; ++h) {
    for (FinCategory::Mor g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (FinCategory::Mor f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        auto gf = c.compose(g, f);
        auto hg = c.compose(h, g);
        std::string triple = "(" + c.morphism_name(h) + ", " + c.morphism_name(g) +
                             ", " + c.morphism_name(f) + ")";
        if (!c.composable(h, gf) || !c.composable(hg, f)) {
          report.add("assoc", "triple " + triple +
                                  " has ill-typed intermediate composites");
          continue;
        }
        if (c.compose(h, gf) != c.compose(hg, f))
          report.add("assoc", "triple " + triple + ": comp(h, comp(g, f)) = " +
                                  c.morphism_name(c.compose(h, gf)) +
                                  " but comp(comp(h, g), f) = " +
                                  c.morphism_name(c.compose(hg, f)));
      }
    }
  }
  return report;
}

MonoResult is_mono(const FinCategory& c, FinCategory::Mor i) {
  if (i < 0 || i >= c.num_morphisms()) throw LookupError("is_mono: morphism index out of range");
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g) {
    if (!c.composable(i, g)) continue;
    for (FinCategory::Mor h = 0; h < c.num_morphisms(); ++h) {
      if (h == g) continue;
      if (c.dom(h) != c.dom(g) || c.cod(h) != c.cod(g)) continue;
      if (c.compose(i, g) == c.compose(i, h))
        return MonoResult{false, std::make_pair(g, h)};
    }
  }
  return MonoResult{true, std::nullopt};
}

namespace {

// Exactly-one-mediator test for a commuting candidate cone.
bool universal(const FinCategory& c, const Cospan& cs, FinCategory::Obj apex,
               FinCategory::Mor p1, FinCategory::Mor p2) {
  for (FinCategory::Obj z = 0; z < c.num_objects(); ++z) {
    for (auto c1 : c.hom(z, c.dom(cs.f))) {
      for (auto c2 : c.hom(z, c.dom(cs.g))) {
        if (c.compose(cs.f, c1) != c.compose(cs.g, c2)) continue;
        int mediators = 0;
        for (auto m : c.hom(z, apex))
          if (c.compose(p1, m) == c1 && c.compose(p2, m) == c2) ++mediators;
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

} // namespace

bool is_pullback_square(const FinCategory& c, const CatPullback& square) {
  const Cospan& cs = square.cospan;
  if (c.cod(cs.f) != c.cod(cs.g)) return false;
  if (c.dom(square.proj1) != square.apex || c.dom(square.proj2) != square.apex)
    return false;
  if (c.cod(square.proj1) != c.dom(cs.f) || c.cod(square.proj2) != c.dom(cs.g))
    return false;
  if (c.compose(cs.f, square.proj1) != c.compose(cs.g, square.proj2))
    return false;
  return universal(c, cs, square.apex, square.proj1, square.proj2);
}

std::vector<CatPullback> find_all_pullbacks(const FinCategory& c, const Cospan& cs) {
  if (c.cod(cs.f) != c.cod(cs.g))
    throw TypeMismatchError("cospan legs must share a codomain");
  std::vector<CatPullback> out;
  for (FinCategory::Obj apex = 0; apex < c.num_objects(); ++apex) {
    for (auto p1 : c.hom(apex, c.dom(cs.f))) {
      for (auto p2 : c.hom(apex, c.dom(cs.g))) {
        if (c.compose(cs.f, p1) != c.compose(cs.g, p2)) continue;
        if (universal(c, cs, apex, p1, p2))
          out.push_back(CatPullback{cs, apex, p1, p2});
      }
    }
  }
  return out;
}

std::optional<CatPullback> find_pullback(const FinCategory& c, const Cospan& cs) {
  if (c.cod(cs.f) != c.cod(cs.g))
    throw TypeMismatchError("cospan legs must share a codomain");
  for (FinCategory::Obj apex = 0; apex < c.num_objects(); ++apex) {
    for (auto p1 : c.hom(apex, c.dom(cs.f))) {
      for (auto p2 : c.hom(apex, c.dom(cs.g))) {
        if (c.compose(cs.f, p1) != c.compose(cs.g, p2)) continue;
        if (universal(c, cs, apex, p1, p2))
          return CatPullback{cs, apex, p1, p2};
      }
    }
  }
  return std::nullopt;
}

PullbackScan has_all_pullbacks(const FinCategory& c) {
  PullbackScan scan;
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
    for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g) {
      if (c.cod(f) != c.cod(g)) continue;
      Cospan cs{f, g};
      if (!find_pullback(c, cs)) {
        scan.all_exist = false;
        scan.failing.push_back(cs);
      }
    }
  }
  return scan;
}

FinCategory opposite(const FinCategory& c) {
  std::vector<MorphismSpec> morphisms;
  morphisms.reserve(c.num_morphisms());
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
    morphisms.push_back({c.morphism_name(f), c.object_name(c.cod(f)),
                         c.object_name(c.dom(f))});
  std::map<std::string, std::string> identities;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    identities.emplace(c.object_name(a), c.morphism_name(c.identity(a)));
  std::vector<std::array<std::string, 3>> composition;
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g)
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f))
        composition.push_back({c.morphism_name(f), c.morphism_name(g),
                               c.morphism_name(c.compose(g, f))});
  return FinCategory(c.object_names(), morphisms, identities, composition,
                     static_cast<std::size_t>(c.num_morphisms()));
}

} // namespace catcomp
