#include "catcomp/assemblies.hpp"

#include <algorithm>

namespace catcomp {

AssemblyCheck check_assembly(const Model& m, const Assembly& a) {
  int t = m.type_index(a.type_name); // throws LookupError if unknown
  const FinSet& dt = m.datatype(t);
  for (const auto& [xp, x] : a.realizes)
    if (!dt.contains(xp) || !a.carrier.contains(x))
      throw InvalidInputError("assembly " + a.name + " relates (" + xp + ", " +
                              x + ") outside datatype × carrier");
  AssemblyCheck out;
  for (const Label& x : a.carrier) {
    bool realized = std::any_of(a.realizes.begin(), a.realizes.end(),
                                [&](const auto& p) { return p.second == x; });
    if (!realized) {
      out.ok = false;
      out.unrealized.push_back(x);
    }
  }
  return out;
}

std::vector<TrackedFn> tracked_morphisms(const Model& m, const Assembly& x,
                                         const Assembly& y,
                                         std::size_t max_functions) {
  int tx = m.type_index(x.type_name);
  int ty = m.type_index(y.type_name);
  const std::vector<Label>& dom = x.carrier.elements();
  const std::vector<Label>& cod = y.carrier.elements();

  if (cod.empty() && !dom.empty()) return {};
  std::size_t count = 1;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    count *= cod.size();
    if (count > max_functions)
      throw LimitError("function space " + x.name + " -> " + y.name +
                       " exceeds " + std::to_string(max_functions) +
                       " candidates");
  }

  std::vector<TrackedFn> out;
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::map<Label, Label> mapping;
    for (std::size_t k = 0; k < dom.size(); ++k) mapping[dom[k]] = cod[pick[k]];
    TotalFn fn(x.carrier, y.carrier, std::move(mapping));

    for (const PartialFn& tr : m.maps(tx, ty)) {
      bool tracked = true;
      for (const auto& [xp, xe] : x.realizes) {
        if (!tr.defined_at(xp) || !y.realizes.count({tr(xp), fn(xe)})) {
          tracked = false;
          break;
        }
      }
      if (tracked) {
        out.push_back({fn, tr});
        break;
      }
    }

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == cod.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

AsmFragment::AsmFragment(Model model, std::vector<Assembly> assemblies)
    : model_(std::move(model)), assemblies_(std::move(assemblies)) {
  for (std::size_t i = 0; i < assemblies_.size(); ++i) {
    for (std::size_t j = i + 1; j < assemblies_.size(); ++j)
      if (assemblies_[i].name == assemblies_[j].name)
        throw InvalidInputError("duplicate assembly name: " +
                                assemblies_[i].name);
    AssemblyCheck check = check_assembly(model_, assemblies_[i]);
    if (!check.ok)
      throw InvalidInputError("assembly " + assemblies_[i].name +
                              " leaves " + check.unrealized.front() +
                              " unrealized");
  }
  homs_.resize(assemblies_.size());
  for (std::size_t i = 0; i < assemblies_.size(); ++i) {
    homs_[i].resize(assemblies_.size());
    for (std::size_t j = 0; j < assemblies_.size(); ++j)
      homs_[i][j] = tracked_morphisms(model_, assemblies_[i], assemblies_[j]);
  }
}

int AsmFragment::assembly_index(const std::string& name) const {
  for (std::size_t i = 0; i < assemblies_.size(); ++i)
    if (assemblies_[i].name == name) return static_cast<int>(i);
  throw LookupError("no assembly named " + name);
}

namespace {

Relation equality_relation(const FinSet& s) {
  Relation rel;
  for (const Label& x : s) rel.insert({x, x});
  return rel;
}

} // namespace

EmbedReport embed_Ft(const FinCategory& c, const SetFunctor& s,
                     ModelKind kind) {
  Model m = build_model(c, s, kind);
  std::vector<Assembly> asms;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    asms.push_back({c.object_name(a), s.at(a), c.object_name(a),
                    equality_relation(s.at(a))});
  AsmFragment frag(std::move(m), std::move(asms));

  bool functorial = true;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    functorial &= s.map(c.identity(a)) == TotalFn::identity(s.at(a));
  for (FinCategory::Mor g = 0; g < c.num_morphisms(); ++g)
    for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f))
        functorial &=
            s.map(c.compose(g, f)) == compose_total_fn(s.map(g), s.map(f));
  for (FinCategory::Mor f = 0; f < c.num_morphisms(); ++f) {
    const auto& hom = frag.hom(c.dom(f), c.cod(f));
    functorial &= std::any_of(hom.begin(), hom.end(), [&](const TrackedFn& t) {
      return t.fn == s.map(f);
    });
  }

  bool inj_obj = true;
  for (int i = 0; i < frag.size(); ++i)
    for (int j = i + 1; j < frag.size(); ++j)
      inj_obj &= frag.assemblies()[i].type_name !=
                 frag.assemblies()[j].type_name;

  bool full = true;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    for (FinCategory::Obj b = 0; b < c.num_objects(); ++b)
      for (const TrackedFn& t : frag.hom(a, b)) {
        const auto arrows = c.hom(a, b);
        full &= std::any_of(arrows.begin(), arrows.end(),
                            [&](FinCategory::Mor h) {
                              return s.map(h) == t.fn;
                            });
      }

  bool faithful = true;
  for (FinCategory::Obj a = 0; a < c.num_objects(); ++a)
    for (FinCategory::Obj b = 0; b < c.num_objects(); ++b) {
      const auto arrows = c.hom(a, b);
      for (std::size_t p = 0; p < arrows.size(); ++p)
        for (std::size_t q = p + 1; q < arrows.size(); ++q)
          faithful &= s.map(arrows[p]) != s.map(arrows[q]);
    }

  return {std::move(frag), functorial, inj_obj, full, faithful,
          s.injective_on_arrows()};
}

Model model_over_fragment(const AsmFragment& frag) {
  std::vector<std::string> names;
  std::vector<FinSet> sets;
  for (const Assembly& a : frag.assemblies()) {
    names.push_back(a.name);
    sets.push_back(a.carrier);
  }
  std::vector<std::vector<std::vector<PartialFn>>> maps(
      frag.size(), std::vector<std::vector<PartialFn>>(frag.size()));
  for (int i = 0; i < frag.size(); ++i)
    for (int j = 0; j < frag.size(); ++j)
      for (const TrackedFn& t : frag.hom(i, j))
        maps[i][j].push_back(PartialFn::from_total(t.fn));
  Model m(std::move(names), std::move(sets), std::move(maps));
  ValidationReport axioms = check_model_axioms(m);
  if (!axioms.ok())
    throw HypothesisError("fragment model fails " +
                          axioms.violations().front().law + ": " +
                          axioms.violations().front().detail);
  return m;
}

Simulation delta_t(const AsmFragment& frag) {
  Model src = model_over_fragment(frag);
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (const Assembly& a : frag.assemblies()) {
    type_map.push_back(frag.model().type_index(a.type_name));
    realizes.push_back(a.realizes);
  }
  return Simulation(std::move(src), frag.model(), std::move(type_map),
                    std::move(realizes));
}

GammaT gamma_t(const Model& m) {
  if (!m.is_total())
    throw HypothesisError("gamma_t requires a total model");
  std::vector<Assembly> asms;
  for (int t = 0; t < m.num_types(); ++t)
    asms.push_back({m.type_name(t), m.datatype(t), m.type_name(t),
                    equality_relation(m.datatype(t))});
  AsmFragment frag(m, std::move(asms));
  Model over = model_over_fragment(frag);
  std::vector<int> type_map;
  std::vector<Relation> realizes;
  for (int t = 0; t < m.num_types(); ++t) {
    type_map.push_back(t);
    realizes.push_back(equality_relation(m.datatype(t)));
  }
  return {std::move(frag), Simulation(m, std::move(over), std::move(type_map),
                                      std::move(realizes))};
}

GammaDeltaReport check_gamma_delta_equiv(const Model& m) {
  GammaT gamma = gamma_t(m);
  Simulation delta = delta_t(gamma.fragment);
  GammaDeltaReport out;
  out.delta_gamma_exact =
      compose_simulations(delta, gamma.sim) == identity_simulation(m);
  out.equivalence = check_model_equivalence(gamma.sim, delta);
  return out;
}

} // namespace catcomp
