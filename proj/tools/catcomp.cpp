#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "catcomp/workspace.hpp"

using namespace catcomp;

namespace {

struct CommandResult {
  Json checks = Json::array();
  Json artifacts = Json::array();
  bool pass = true;
};

// A check entry flagged required=false is recorded but does not affect
// the exit code (used for findings that are reported, not asserted).
void push_check(CommandResult& r, Json entry, bool required = true) {
  if (required && !entry.at("pass").get<bool>()) r.pass = false;
  if (!required) entry["required"] = false;
  r.checks.push_back(std::move(entry));
}

Json violations_json(const ValidationReport& rep) {
  Json out = Json::array();
  for (const auto& v : rep.violations())
    out.push_back(Json{{"law", v.law}, {"detail", v.detail}});
  return out;
}

Json report_entry(const std::string& name, const ValidationReport& rep) {
  return Json{{"name", name},
              {"pass", rep.ok()},
              {"violations", violations_json(rep)}};
}

CommandResult run_validate(const Workspace& w, const std::string& what,
                           const std::string& name,
                           const std::string& category) {
  CommandResult r;
  if (what == "category")
    push_check(r, report_entry("category " + name,
                               validate_category(w.category(name))));
  else if (what == "functor")
    push_check(r, report_entry("functor " + name,
                               validate_functor(w.functor(name))));
  else if (what == "nat-trans")
    push_check(r, report_entry("nat-trans " + name,
                               validate_nat_trans(w.nat_trans(name))));
  else if (what == "model")
    push_check(r, report_entry("model " + name,
                               check_model_axioms(w.model(name))));
  else if (what == "simulation")
    push_check(r, report_entry("simulation " + name,
                               check_simulation(w.simulation(name))));
  else if (what == "base") {
    Base b = w.base(name);
    if (!category.empty() && !(b.category() == w.category(category)))
      throw TypeMismatchError("base '" + name + "' is not over category '" +
                              category + "'");
    auto rep = check_base(b);
    Json entry = report_entry("base " + name, rep);
    entry["logged_squares"] = b.pullback_log().size();
    push_check(r, std::move(entry));
  } else { // assembly
    const NamedAssembly& na = w.assembly(name);
    auto rep = check_assembly(w.model(na.model), na.assembly);
    Json unrealized = Json::array();
    for (const Label& x : rep.unrealized) unrealized.push_back(x);
    push_check(r, Json{{"name", "assembly " + name},
                       {"pass", rep.ok},
                       {"unrealized", unrealized}});
  }
  return r;
}

void push_axiom_checks(CommandResult& r, const Model& m) {
  auto rep = check_model_axioms(m);
  for (std::string law : {"CM1", "CM2"}) {
    Json fails = Json::array();
    for (const auto& v : rep.violations())
      if (v.law == law) fails.push_back(Json{{"law", v.law}, {"detail", v.detail}});
    push_check(r, Json{{"name", law}, {"pass", fails.empty()},
                       {"violations", fails}});
  }
}

CommandResult run_build_model(const Workspace& w, const std::string& category,
                              const std::string& functor,
                              const std::string& base, ModelKind kind,
                              const std::string& as) {
  CommandResult r;
  const FinCategory& c = w.category(category);
  const SetFunctor& s = w.functor(functor);
  Model m = base.empty() ? build_model(c, s, kind)
                         : build_base_model(c, s, w.base(base));
  std::string name = as;
  if (name.empty())
    name = base.empty()
               ? functor + (kind == ModelKind::total ? ".total" : ".partial")
               : functor + ".over." + base;
  push_axiom_checks(r, m);
  r.artifacts.push_back(model_doc(name, m));
  return r;
}

CommandResult run_build_hom(const Workspace& w, const std::string& category,
                            const std::string& object, const std::string& as) {
  CommandResult r;
  const FinCategory& c = w.category(category);
  SetFunctor h = hom_functor(c, c.object_index(object));
  std::string name = as.empty() ? category + ".hom." + object : as;
  push_check(r, report_entry("functor " + name, validate_functor(h)));
  r.artifacts.push_back(functor_doc(name, category, h));
  return r;
}

CommandResult run_build_opposite(const Workspace& w,
                                 const std::string& category,
                                 const std::string& as) {
  CommandResult r;
  FinCategory op = opposite(w.category(category));
  std::string name = as.empty() ? category + ".op" : as;
  push_check(r, report_entry("category " + name, validate_category(op)));
  r.artifacts.push_back(category_doc(name, op));
  return r;
}

AsmFragment fragment_of(const Workspace& w, const std::string& model,
                        const std::vector<std::string>& assemblies) {
  std::vector<Assembly> members;
  for (const std::string& aname : assemblies) {
    const NamedAssembly& na = w.assembly(aname);
    if (na.model != model)
      throw InvalidInputError("assembly '" + aname +
                              "' was declared over model '" + na.model +
                              "', not '" + model + "'");
    members.push_back(na.assembly);
  }
  return AsmFragment(w.model(model), std::move(members));
}

CommandResult run_build_fragment(const Workspace& w, const std::string& model,
                                 const std::vector<std::string>& assemblies,
                                 const std::string& as) {
  CommandResult r;
  AsmFragment frag = fragment_of(w, model, assemblies);
  std::size_t tracked = 0;
  for (int x = 0; x < frag.size(); ++x)
    for (int y = 0; y < frag.size(); ++y) tracked += frag.hom(x, y).size();
  std::string name = as.empty() ? model + ".fragment" : as;
  push_check(r, Json{{"name", "fragment " + name},
                     {"pass", true},
                     {"tracked_morphisms", tracked}});
  r.artifacts.push_back(fragment_doc(name, model, frag));
  return r;
}

CommandResult run_build_model_over_fragment(const Workspace& w,
                                            const std::string& fragment,
                                            const std::string& as) {
  CommandResult r;
  Model m = model_over_fragment(w.fragment(fragment));
  std::string name = as.empty() ? fragment + ".model" : as;
  push_axiom_checks(r, m);
  r.artifacts.push_back(model_doc(name, m));
  return r;
}

CommandResult run_check_tracking(const Workspace& w,
                                 const std::string& simulation) {
  CommandResult r;
  const Simulation& g = w.simulation(simulation);
  for (int s = 0; s < g.src().num_types(); ++s)
    for (int t = 0; t < g.src().num_types(); ++t)
      for (const PartialFn& f : g.src().maps(s, t)) {
        const PartialFn* tracker = nullptr;
        for (const PartialFn& fp :
             g.tgt().maps(g.map_type(s), g.map_type(t)))
          if (tracks(g, fp, f, s, t).tracked) {
            tracker = &fp;
            break;
          }
        Json entry{{"name", "map " + g.src().type_name(s) + " -> " +
                                g.src().type_name(t)},
                   {"pass", tracker != nullptr},
                   {"map", partialfn_json(f)}};
        entry["tracker"] = tracker ? partialfn_json(*tracker) : Json(nullptr);
        push_check(r, std::move(entry));
      }
  return r;
}

Json transformability_entry(const std::string& name, const Simulation& g,
                            const TransformabilityResult& t) {
  Json entry{{"name", name}, {"pass", t.transformable}};
  if (t.transformable) {
    Json witnesses = Json::array();
    for (const PartialFn& f : t.witnesses) witnesses.push_back(partialfn_json(f));
    entry["witnesses"] = witnesses;
  } else {
    entry["failing_type"] = g.src().type_name(*t.failing_type);
  }
  return entry;
}

CommandResult run_check_transformable(const Workspace& w,
                                      const std::string& from,
                                      const std::string& to) {
  CommandResult r;
  const Simulation& g = w.simulation(from);
  const Simulation& d = w.simulation(to);
  push_check(r, transformability_entry(from + " <= " + to, g,
                                       is_transformable(g, d)));
  return r;
}

CommandResult run_check_equivalence(const Workspace& w,
                                    const std::string& forward,
                                    const std::string& backward) {
  CommandResult r;
  const Simulation& g = w.simulation(forward);
  const Simulation& d = w.simulation(backward);
  EquivalenceReport rep = check_model_equivalence(g, d);
  const std::string dg = backward + "." + forward;
  const std::string gd = forward + "." + backward;
  push_check(r, transformability_entry(dg + " <= identity", g, rep.dg_le_iota));
  push_check(r, transformability_entry("identity <= " + dg, g, rep.iota_le_dg));
  push_check(r, transformability_entry(gd + " <= identity", d, rep.gd_le_iota));
  push_check(r, transformability_entry("identity <= " + gd, d, rep.iota_le_gd));
  return r;
}

CommandResult run_check_gamma_delta(const Workspace& w,
                                    const std::string& model) {
  CommandResult r;
  GammaDeltaReport rep = check_gamma_delta_equiv(w.model(model));
  push_check(r, Json{{"name", "delta.gamma = identity"},
                     {"pass", rep.delta_gamma_exact}});
  // The reverse round trip is an unproved remark: its verdict is
  // recorded as a finding rather than enforced.
  push_check(r, Json{{"name", "gamma.delta ~ identity"},
                     {"pass", rep.equivalence.equivalent()}},
             /*required=*/false);
  return r;
}

CommandResult run_check_embed(const Workspace& w, const std::string& category,
                              const std::string& functor, ModelKind kind) {
  CommandResult r;
  EmbedReport rep = embed_Ft(w.category(category), w.functor(functor), kind);
  push_check(r, Json{{"name", "functorial"}, {"pass", rep.functorial}});
  push_check(r, Json{{"name", "injective-on-objects"},
                     {"pass", rep.injective_on_objects}});
  push_check(r, Json{{"name", "full"}, {"pass", rep.full}});
  push_check(r, Json{{"name", "faithful"}, {"pass", rep.faithful}});
  push_check(r, Json{{"name", "embedding"}, {"pass", rep.embedding()}});
  push_check(r, Json{{"name", "functor-injective-on-arrows"},
                     {"pass", rep.s_injective_on_arrows}},
             /*required=*/false);
  return r;
}

CommandResult run_check_preserves(const Workspace& w,
                                  const std::string& functor) {
  CommandResult r;
  const SetFunctor& s = w.functor(functor);
  PreservationReport rep = preserves_pullbacks(s);
  Json failing = Json::array();
  for (const CatPullback& sq : rep.failing)
    failing.push_back(square_json(s.source(), sq));
  push_check(r, Json{{"name", "pullbacks-preserved"},
                     {"pass", rep.pullbacks_preserved},
                     {"failing", failing}});
  Json failing_monos = Json::array();
  for (FinCategory::Mor f : rep.failing_monos)
    failing_monos.push_back(s.source().morphism_name(f));
  push_check(r, Json{{"name", "monos-preserved"},
                     {"pass", rep.monos_preserved},
                     {"failing", failing_monos}});
  return r;
}

CommandResult run_laws(const Workspace& w) {
  CommandResult r;
  for (const auto& [name, c] : w.categories())
    push_check(r, report_entry("category " + name, validate_category(c)));
  for (const auto& [name, s] : w.functors())
    push_check(r, report_entry("functor " + name, validate_functor(s)));
  for (const auto& [name, n] : w.nat_transes())
    push_check(r, report_entry("nat-trans " + name, validate_nat_trans(n)));
  for (const auto& [name, b] : w.bases()) {
    Base copy = b;
    push_check(r, report_entry("base " + name, check_base(copy)));
  }
  for (const auto& [name, m] : w.models())
    push_check(r, report_entry("model " + name, check_model_axioms(m)));
  for (const auto& [name, g] : w.simulations())
    push_check(r, report_entry("simulation " + name, check_simulation(g)));
  for (const auto& [name, na] : w.assemblies()) {
    auto rep = check_assembly(w.model(na.model), na.assembly);
    Json unrealized = Json::array();
    for (const Label& x : rep.unrealized) unrealized.push_back(x);
    push_check(r, Json{{"name", "assembly " + name},
                       {"pass", rep.ok},
                       {"unrealized", unrealized}});
  }
  for (const auto& [name, frag] : w.fragments()) {
    Json entry{{"name", "fragment " + name}};
    try {
      Model m = model_over_fragment(frag);
      auto rep = check_model_axioms(m);
      entry["pass"] = rep.ok();
      entry["violations"] = violations_json(rep);
    } catch (const Error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
    }
    push_check(r, std::move(entry));
  }
  return r;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify computability models over finite categories"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> files;
  std::string wsdir;
  std::string out;
  bool stable = false;
  std::size_t max_morphisms = kDefaultMaxMorphisms;
  std::size_t max_set = kDefaultMaxSet;
  app.add_option("files", files, "JSON document files");
  app.add_option("--workspace", wsdir, "directory of *.json documents");
  app.add_option("--out", out, "write the report to this path");
  app.add_flag("--stable", stable,
               "omit timing so identical inputs give identical bytes");
  app.add_option("--max-morphisms", max_morphisms,
                 "reject categories with more morphisms")
      ->envname("CATCOMP_MAX_MORPHISMS");
  app.add_option("--max-set", max_set, "reject sets with more elements")
      ->envname("CATCOMP_MAX_SET");

  std::string command;
  Json arguments = Json::object();
  std::function<CommandResult(const Workspace&)> runner;

  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* validate =
      app.add_subcommand("validate", "run the law checks for one document");
  validate->fallthrough();
  validate->require_subcommand(1);
  struct {
    std::string name, category;
  } v[7];
  const char* v_kinds[7] = {"category", "functor", "nat-trans", "model",
                            "simulation", "base", "assembly"};
  for (int k = 0; k < 7; ++k) {
    CLI::App* sub = leaf(validate, v_kinds[k], "");
    std::string kind = v_kinds[k];
    auto* name_opt = sub->add_option("--name", v[k].name, "document name");
    if (kind == "base") {
      name_opt->description("base name (alias --base)");
      sub->add_option("--base", v[k].name, "base name")
          ->excludes(name_opt);
      sub->add_option("--category", v[k].category,
                      "cross-check the base's category");
    } else {
      name_opt->required();
    }
    sub->callback([&, k, kind] {
      if (v[k].name.empty())
        throw CLI::RequiredError("--name");
      command = "validate " + kind;
      arguments["name"] = v[k].name;
      if (!v[k].category.empty()) arguments["category"] = v[k].category;
      runner = [&, k, kind](const Workspace& w) {
        return run_validate(w, kind, v[k].name, v[k].category);
      };
    });
  }

  CLI::App* build =
      app.add_subcommand("build", "run a construction and emit the artifact");
  build->fallthrough();
  build->require_subcommand(1);
  struct {
    std::string category, functor, base, as;
  } bt, bp, bb;
  for (auto [sub_name, opts, kind] :
       {std::tuple{"total", &bt, ModelKind::total},
        std::tuple{"partial", &bp, ModelKind::partial},
        std::tuple{"base-model", &bb, ModelKind::total}}) {
    CLI::App* sub = leaf(build, sub_name, "");
    sub->add_option("--category", opts->category)->required();
    sub->add_option("--functor", opts->functor)->required();
    if (std::string(sub_name) == "base-model")
      sub->add_option("--base", opts->base)->required();
    sub->add_option("--as", opts->as, "name for the emitted document");
    std::string label = sub_name;
    sub->callback([&, opts, kind, label] {
      command = "build " + label;
      arguments["category"] = opts->category;
      arguments["functor"] = opts->functor;
      if (!opts->base.empty()) arguments["base"] = opts->base;
      runner = [&, opts, kind](const Workspace& w) {
        return run_build_model(w, opts->category, opts->functor, opts->base,
                               kind, opts->as);
      };
    });
  }

  struct {
    std::string category, object, as;
  } bh;
  CLI::App* b_hom = leaf(build, "hom-functor", "");
  b_hom->add_option("--category", bh.category)->required();
  b_hom->add_option("--object", bh.object)->required();
  b_hom->add_option("--as", bh.as);
  b_hom->callback([&] {
    command = "build hom-functor";
    arguments["category"] = bh.category;
    arguments["object"] = bh.object;
    runner = [&](const Workspace& w) {
      return run_build_hom(w, bh.category, bh.object, bh.as);
    };
  });

  struct {
    std::string category, as;
  } bo;
  CLI::App* b_op = leaf(build, "opposite", "");
  b_op->add_option("--category", bo.category)->required();
  b_op->add_option("--as", bo.as);
  b_op->callback([&] {
    command = "build opposite";
    arguments["category"] = bo.category;
    runner = [&](const Workspace& w) {
      return run_build_opposite(w, bo.category, bo.as);
    };
  });

  struct {
    std::string model, as;
    std::vector<std::string> assemblies;
  } bf;
  CLI::App* b_frag = leaf(build, "asm-fragment", "");
  b_frag->add_option("--model", bf.model)->required();
  b_frag->add_option("--assembly", bf.assemblies, "repeatable")->required();
  b_frag->add_option("--as", bf.as);
  b_frag->callback([&] {
    command = "build asm-fragment";
    arguments["model"] = bf.model;
    arguments["assemblies"] = bf.assemblies;
    runner = [&](const Workspace& w) {
      return run_build_fragment(w, bf.model, bf.assemblies, bf.as);
    };
  });

  struct {
    std::string fragment, as;
  } bm;
  CLI::App* b_mof = leaf(build, "model-over-fragment", "");
  b_mof->add_option("--fragment", bm.fragment)->required();
  b_mof->add_option("--as", bm.as);
  b_mof->callback([&] {
    command = "build model-over-fragment";
    arguments["fragment"] = bm.fragment;
    runner = [&](const Workspace& w) {
      return run_build_model_over_fragment(w, bm.fragment, bm.as);
    };
  });

  CLI::App* check =
      app.add_subcommand("check", "verify a relation between documents");
  check->fallthrough();
  check->require_subcommand(1);

  struct {
    std::string simulation;
  } ct;
  CLI::App* c_track = leaf(check, "tracking", "");
  c_track->add_option("--simulation", ct.simulation)->required();
  c_track->callback([&] {
    command = "check tracking";
    arguments["simulation"] = ct.simulation;
    runner = [&](const Workspace& w) {
      return run_check_tracking(w, ct.simulation);
    };
  });

  struct {
    std::string from, to;
  } cf;
  CLI::App* c_trans = leaf(check, "transformable", "");
  c_trans->add_option("--from", cf.from)->required();
  c_trans->add_option("--to", cf.to)->required();
  c_trans->callback([&] {
    command = "check transformable";
    arguments["from"] = cf.from;
    arguments["to"] = cf.to;
    runner = [&](const Workspace& w) {
      return run_check_transformable(w, cf.from, cf.to);
    };
  });

  struct {
    std::string forward, backward;
  } ce;
  CLI::App* c_equiv = leaf(check, "equivalence", "");
  c_equiv->add_option("--forward", ce.forward)->required();
  c_equiv->add_option("--backward", ce.backward)->required();
  c_equiv->callback([&] {
    command = "check equivalence";
    arguments["forward"] = ce.forward;
    arguments["backward"] = ce.backward;
    runner = [&](const Workspace& w) {
      return run_check_equivalence(w, ce.forward, ce.backward);
    };
  });

  struct {
    std::string model;
  } cg;
  CLI::App* c_gd = leaf(check, "gamma-delta", "");
  c_gd->add_option("--model", cg.model)->required();
  c_gd->callback([&] {
    command = "check gamma-delta";
    arguments["model"] = cg.model;
    runner = [&](const Workspace& w) {
      return run_check_gamma_delta(w, cg.model);
    };
  });

  struct {
    std::string category, functor, kind = "total";
  } cb;
  CLI::App* c_embed = leaf(check, "embed-ft", "");
  c_embed->add_option("--category", cb.category)->required();
  c_embed->add_option("--functor", cb.functor)->required();
  c_embed->add_option("--kind", cb.kind, "total or partial")
      ->check(CLI::IsMember({"total", "partial"}));
  c_embed->callback([&] {
    command = "check embed-ft";
    arguments["category"] = cb.category;
    arguments["functor"] = cb.functor;
    arguments["kind"] = cb.kind;
    runner = [&](const Workspace& w) {
      return run_check_embed(w, cb.category, cb.functor,
                             cb.kind == "total" ? ModelKind::total
                                                : ModelKind::partial);
    };
  });

  struct {
    std::string functor;
  } cp;
  CLI::App* c_pp = leaf(check, "preserves-pullbacks", "");
  c_pp->add_option("--functor", cp.functor)->required();
  c_pp->callback([&] {
    command = "check preserves-pullbacks";
    arguments["functor"] = cp.functor;
    runner = [&](const Workspace& w) {
      return run_check_preserves(w, cp.functor);
    };
  });

  CLI::App* laws =
      app.add_subcommand("laws", "validate every document in the workspace");
  laws->fallthrough();
  laws->callback([&] {
    command = "laws";
    runner = [](const Workspace& w) { return run_laws(w); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Json report;
  report["tool"] = "catcomp";
  report["version"] = "0.1.0";
  report["command"] = command;
  report["arguments"] = arguments;
  report["options"] = Json{{"max-morphisms", max_morphisms},
                           {"max-set", max_set},
                           {"stable", stable}};

  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  std::string error_type;
  try {
    Workspace w = load_workspace(
        files, wsdir.empty() ? std::nullopt : std::optional(wsdir),
        Limits{max_morphisms, max_set});
    CommandResult r = runner(w);
    report["checks"] = r.checks;
    if (!r.artifacts.empty()) report["artifacts"] = r.artifacts;
    report["pass"] = r.pass;
    exit_code = r.pass ? 0 : 1;
  } catch (const HypothesisError& e) {
    // A construction refused its inputs: a failed check, with the
    // refusal as the counterexample.
    report["checks"] = Json::array(
        {Json{{"name", command}, {"pass", false}, {"hypothesis", e.what()}}});
    report["pass"] = false;
    exit_code = 1;
  } catch (const Error& e) {
    if (dynamic_cast<const TypeMismatchError*>(&e)) error_type = "type-mismatch";
    else if (dynamic_cast<const LookupError*>(&e)) error_type = "lookup";
    else if (dynamic_cast<const LimitError*>(&e)) error_type = "limit";
    else error_type = "invalid-input";
    report["error"] = Json{{"type", error_type}, {"message", e.what()}};
    report["pass"] = false;
    exit_code = 2;
  }
  if (!stable) {
    auto dt = std::chrono::steady_clock::now() - t0;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }

  std::string text = report.dump(2) + "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return exit_code;
}
