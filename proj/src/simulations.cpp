#include "catcomp/simulations.hpp"

#include <algorithm>

namespace catcomp {

Simulation::Simulation(Model src, Model tgt, std::vector<int> type_map,
                       std::vector<Relation> realizes)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      type_map_(std::move(type_map)),
      realizes_(std::move(realizes)) {
  auto n = static_cast<std::size_t>(src_.num_types());
  if (type_map_.size() != n)
    throw InvalidInputError("type_map must assign every source type");
  if (realizes_.size() != n)
    throw InvalidInputError("realizes must cover every source type");
  for (std::size_t t = 0; t < n; ++t) {
    if (type_map_[t] < 0 || type_map_[t] >= tgt_.num_types())
      throw InvalidInputError("type_map sends " + src_.type_name(int(t)) +
                              " outside the target model");
    const FinSet& over = tgt_.datatype(type_map_[t]);
    const FinSet& under = src_.datatype(int(t));
    for (const auto& [xp, x] : realizes_[t]) {
      if (!over.contains(xp) || !under.contains(x))
        throw InvalidInputError("realizes(" + src_.type_name(int(t)) +
                                ") relates elements outside the datatypes: (" +
                                xp + ", " + x + ")");
    }
  }
}

TrackResult tracks(const Simulation& g, const PartialFn& fp,
                   const PartialFn& f, int sigma, int tau) {
  if (sigma < 0 || sigma >= g.src().num_types() || tau < 0 ||
      tau >= g.src().num_types())
    throw LookupError("tracks: type index out of range");
  if (f.dom() != g.src().datatype(sigma) || f.cod() != g.src().datatype(tau))
    throw LookupError("tracks: f is not typed " + g.src().type_name(sigma) +
                      " -> " + g.src().type_name(tau));
  if (fp.dom() != g.tgt().datatype(g.map_type(sigma)) ||
      fp.cod() != g.tgt().datatype(g.map_type(tau)))
    throw LookupError("tracks: fp is not typed over the translated types");

  for (const Label& x : f.defined())
    for (const auto& [xp, y] : g.realizes(sigma)) {
      if (y != x) continue;
      if (!fp.defined_at(xp) || !g.realizes(tau).count({fp(xp), f(x)}))
        return {false, std::make_pair(x, xp)};
    }
  return {true, std::nullopt};
}

ValidationReport check_simulation(const Simulation& g) {
  ValidationReport report;
  for (int t = 0; t < g.src().num_types(); ++t)
    for (const Label& x : g.src().datatype(t)) {
      bool realized = std::any_of(g.realizes(t).begin(), g.realizes(t).end(),
                                  [&](const auto& p) { return p.second == x; });
      if (!realized)
        report.add("Siml1", "element " + x + " of type " + g.src().type_name(t) +
                                " has no realizer");
    }
  for (int s = 0; s < g.src().num_types(); ++s)
    for (int t = 0; t < g.src().num_types(); ++t)
      for (const PartialFn& f : g.src().maps(s, t)) {
        const auto& pool = g.tgt().maps(g.map_type(s), g.map_type(t));
        bool tracked = std::any_of(pool.begin(), pool.end(),
                                   [&](const PartialFn& fp) {
                                     return tracks(g, fp, f, s, t).tracked;
                                   });
        if (!tracked)
          report.add("Siml2", "no tracker for " + describe(f) + " in maps(" +
                                  g.src().type_name(s) + ", " +
                                  g.src().type_name(t) + ")");
      }
  return report;
}

Simulation identity_simulation(const Model& m) {
  std::vector<int> type_map(m.num_types());
  std::vector<Relation> realizes(m.num_types());
  for (int t = 0; t < m.num_types(); ++t) {
    type_map[t] = t;
    for (const Label& x : m.datatype(t)) realizes[t].insert({x, x});
  }
  return Simulation(m, m, std::move(type_map), std::move(realizes));
}

Simulation compose_simulations(const Simulation& d, const Simulation& g) {
  if (g.tgt() != d.src())
    throw TypeMismatchError(
        "cannot compose simulations: middle models differ");
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (int t = 0; t < g.src().num_types(); ++t) {
    type_map.push_back(d.map_type(g.map_type(t)));
    Relation rel;
    for (const auto& [z, y] : d.realizes(g.map_type(t)))
      for (const auto& [yy, x] : g.realizes(t))
        if (y == yy) rel.insert({z, x});
    realizes.push_back(std::move(rel));
  }
  return Simulation(g.src(), d.tgt(), std::move(type_map),
                    std::move(realizes));
}

TransformabilityResult is_transformable(const Simulation& g,
                                        const Simulation& d) {
  if (g.src() != d.src() || g.tgt() != d.tgt())
    throw TypeMismatchError(
        "transformability compares parallel simulations only");
  TransformabilityResult out;
  for (int t = 0; t < g.src().num_types(); ++t) {
    const PartialFn* found = nullptr;
    for (const PartialFn& f : g.tgt().maps(g.map_type(t), d.map_type(t))) {
      bool good = true;
      for (const auto& [xp, x] : g.realizes(t)) {
        if (!f.defined_at(xp) || !d.realizes(t).count({f(xp), x})) {
          good = false;
          break;
        }
      }
      if (good) {
        found = &f;
        break;
      }
    }
    if (!found) {
      out.transformable = false;
      out.witnesses.clear();
      out.failing_type = t;
      return out;
    }
    out.witnesses.push_back(*found);
  }
  return out;
}

EquivalenceReport check_model_equivalence(const Simulation& g,
                                          const Simulation& d) {
  if (g.tgt() != d.src() || d.tgt() != g.src())
    throw TypeMismatchError("equivalence needs simulations in both directions");
  Simulation dg = compose_simulations(d, g);
  Simulation gd = compose_simulations(g, d);
  Simulation iota_c = identity_simulation(g.src());
  Simulation iota_d = identity_simulation(g.tgt());
  return {is_transformable(dg, iota_c), is_transformable(iota_c, dg),
          is_transformable(gd, iota_d), is_transformable(iota_d, gd)};
}

Simulation simulation_from_slice_arrow(const CatSetArrow& w, ModelKind kind) {
  SliceArrowReport rep = validate_slice_arrow(w);
  if (!rep.laws.ok())
    throw HypothesisError("not a slice arrow: " +
                          rep.laws.violations().front().law + ": " +
                          rep.laws.violations().front().detail);
  if (kind == ModelKind::partial && !rep.f_preserves_monos)
    throw HypothesisError(
        "functor does not preserve monos: image of " +
        w.F().src().morphism_name(*rep.mono_failure) + " is not mono");
  Model src = build_model(w.F().src(), w.S(), kind);
  Model tgt = build_model(w.F().tgt(), w.T(), kind);
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (int t = 0; t < src.num_types(); ++t) {
    type_map.push_back(w.F().on_object(t));
    Relation rel;
    for (const Label& x : src.datatype(t)) rel.insert({x, x});
    realizes.push_back(std::move(rel));
  }
  return Simulation(std::move(src), std::move(tgt), std::move(type_map),
                    std::move(realizes));
}

Simulation simulation_from_nat_trans(const NatTrans& n, ModelKind kind) {
  ValidationReport laws = validate_nat_trans(n);
  if (!laws.ok())
    throw HypothesisError("not a natural transformation: " +
                          laws.violations().front().detail);
  const FinCategory& c = n.src().source();
  Model src = build_model(c, n.src(), kind);
  Model tgt = build_model(c, n.tgt(), kind);
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (int t = 0; t < src.num_types(); ++t) {
    type_map.push_back(t);
    Relation rel;
    for (const Label& x : src.datatype(t))
      rel.insert({n.at(t)(x), x});
    realizes.push_back(std::move(rel));
  }
  return Simulation(std::move(src), std::move(tgt), std::move(type_map),
                    std::move(realizes));
}

} // namespace catcomp
