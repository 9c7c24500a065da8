#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commaforge/commaforge.hpp"

using json = nlohmann::ordered_json;
using namespace commaforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  bool json = false;
  Budget budget;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Workspace load(const std::string& path) { return parse(slurp(path)); }

void emit(const Options& opts, const json& doc, const std::string& text) {
  if (opts.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

CategoryRef index_by_name(const std::string& name) {
  if (name == "one") return fixtures::index_one();
  if (name == "two") return fixtures::index_two();
  if (name == "two_d") return fixtures::index_two_discrete();
  throw CLI::ValidationError("--index", "expected one, two or two_d");
}

json functor_json(const Functor& F) {
  json j;
  j["src"] = F.src()->name();
  j["dst"] = F.dst()->name();
  j["obj"] = json::object();
  for (const auto& [a, fa] : F.obj_map()) j["obj"][a] = fa;
  j["arr"] = json::object();
  for (const auto& [f, ff] : F.arr_map()) j["arr"][f] = ff;
  return j;
}

json nat_json(const NatTrans& t) {
  json j;
  j["src"] = t.source_functor().src()->name();
  j["dst"] = t.source_functor().dst()->name();
  j["at"] = json::object();
  for (const auto& [a, c] : t.components()) j["at"][a] = c;
  return j;
}

std::string functor_text(const Functor& F) {
  std::ostringstream os;
  os << F.src()->name() << " -> " << F.dst()->name() << "\n";
  for (const auto& [a, fa] : F.obj_map()) os << "  obj " << a << " |-> " << fa << "\n";
  for (const auto& [f, ff] : F.arr_map()) os << "  arr " << f << " |-> " << ff << "\n";
  return os.str();
}

std::string nat_text(const NatTrans& t) {
  std::ostringstream os;
  os << t.source_functor().src()->name() << " => over " << t.source_functor().dst()->name()
     << "\n";
  for (const auto& [a, c] : t.components()) os << "  at " << a << ": " << c << "\n";
  return os.str();
}

int cmd_validate(const Options& opts, const std::string& file) {
  Workspace ws = load(file);
  json j;
  j["command"] = "validate";
  j["ok"] = true;
  j["categories"] = ws.category_order();
  j["functors"] = ws.functor_order();
  j["nats"] = ws.nat_order();
  j["adjunctions"] = ws.adjunction_order();
  std::ostringstream os;
  os << "workspace ok: " << ws.category_order().size() << " categories, "
     << ws.functor_order().size() << " functors, " << ws.nat_order().size()
     << " transformations, " << ws.adjunction_order().size() << " adjunctions\n";
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_level(const Options& opts, const std::string& file, const std::string& name,
              std::size_t n) {
  Workspace ws = load(file);
  LevelTower tower(ws.category(name), opts.budget);
  CategoryRef level = tower.level(n);
  json j;
  j["command"] = "level";
  j["ok"] = true;
  j["category"] = name;
  j["n"] = n;
  j["objects"] = level->object_count();
  j["arrows"] = level->arrow_count();
  std::ostringstream os;
  os << "level " << n << " of " << name << ": " << level->object_count() << " objects, "
     << level->arrow_count() << " arrows\n";
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_peano(const Options& opts, std::size_t n) {
  CategoryRef p = peano(n, opts.budget);
  json j;
  j["command"] = "peano";
  j["ok"] = true;
  j["n"] = n;
  j["objects"] = p->object_count();
  j["arrows"] = p->arrow_count();
  std::ostringstream os;
  if (n == 0) {
    j["leaf_count"] = 0;
    os << "peano(0): empty category\n";
  } else {
    LevelTower tower(fixtures::terminal_category(), opts.budget);
    std::size_t leaves = tower.label(n, tower.level(n)->arrows().front()).leaf_count();
    j["leaf_count"] = leaves;
    os << "peano(" << n << "): " << p->object_count() << " object, " << p->arrow_count()
       << " arrow, leaf-count " << leaves << "\n";
  }
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_naturals_report(const Options& opts, std::size_t max_n) {
  json j;
  j["command"] = "naturals-report";
  j["ok"] = true;
  j["rows"] = json::array();
  std::ostringstream os;
  LevelTower tower(fixtures::terminal_category(), opts.budget);
  for (std::size_t n = 0; n <= max_n; ++n) {
    CategoryRef p = peano(n, opts.budget);
    json row;
    row["n"] = n;
    row["objects"] = p->object_count();
    row["arrows"] = p->arrow_count();
    if (n == 0) {
      row["leaf_count"] = 0;
      os << "n=0: empty category\n";
    } else {
      std::size_t leaves = tower.label(n, tower.level(n)->arrows().front()).leaf_count();
      row["leaf_count"] = leaves;
      os << "n=" << n << ": " << p->object_count() << " object, " << p->arrow_count()
         << " arrow, leaf-count " << leaves << "\n";
    }
    j["rows"].push_back(row);
  }
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_lift(const Options& opts, const std::string& file, const std::string& functor,
             const std::string& nat, std::size_t times) {
  Workspace ws = load(file);
  json j;
  j["command"] = "lift";
  j["ok"] = true;
  j["times"] = times;
  std::ostringstream os;
  if (!functor.empty()) {
    Functor cur = ws.functor_named(functor);
    for (std::size_t i = 0; i < times; ++i) cur = comma_lift_functor(cur, opts.budget);
    j["functor"] = functor;
    j["result"] = functor_json(cur);
    os << "lifted functor " << functor << " (" << times << "x): " << functor_text(cur);
  } else {
    NatTrans cur = ws.nat_named(nat);
    for (std::size_t i = 0; i < times; ++i) cur = comma_lift_nat(cur, opts.budget);
    j["nat"] = nat;
    j["result"] = nat_json(cur);
    os << "lifted transformation " << nat << " (" << times << "x): " << nat_text(cur);
  }
  emit(opts, j, os.str());
  return kExitOk;
}

json certificate_json(const LimitCertificate& cert) {
  json j;
  j["apex"] = cert.cone.apex;
  j["legs"] = json::object();
  for (const auto& [aj, leg] : cert.cone.legs) j["legs"][aj] = leg;
  j["cones"] = cert.mediators.size();
  return j;
}

int cmd_limit(const Options& opts, const std::string& file, const std::string& diagram,
              std::size_t level, bool colimit_mode) {
  Workspace ws = load(file);
  const Functor& d = ws.functor_named(diagram);
  json j;
  j["command"] = colimit_mode ? "colimit" : "limit";
  j["diagram"] = diagram;
  std::ostringstream os;
  std::optional<LimitCertificate> cert;
  if (colimit_mode)
    cert = colimit(d);
  else if (level <= 1)
    cert = limit(d);
  else
    cert = propagate_limit(d, level, opts.budget);
  if (!cert) {
    j["ok"] = true;
    j["exists"] = false;
    os << (colimit_mode ? "colimit" : "limit") << " of " << diagram << ": none\n";
    emit(opts, j, os.str());
    return kExitOk;
  }
  j["ok"] = true;
  j["exists"] = true;
  if (!colimit_mode) j["level"] = level;
  j["certificate"] = certificate_json(*cert);
  os << (colimit_mode ? "colimit" : "limit") << " of " << diagram;
  if (!colimit_mode && level > 1) os << " at level " << level;
  os << ": apex " << cert->cone.apex << " (" << cert->mediators.size() << " cones mediated)\n";
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_adjoint_check(const Options& opts, const std::string& file, const std::string& name) {
  Workspace ws = load(file);
  ValidationReport report = check_adjunction(ws.adjunction_named(name));
  json j;
  j["command"] = "adjoint-check";
  j["ok"] = report.ok();
  j["adjunction"] = name;
  std::ostringstream os;
  os << "adjunction " << name << ": " << report.summary() << "\n";
  emit(opts, j, os.str());
  return report.ok() ? kExitOk : kExitValidation;
}

int cmd_lift_adjunction(const Options& opts, const std::string& file, const std::string& name,
                        std::size_t times) {
  Workspace ws = load(file);
  Adjunction cur = ws.adjunction_named(name);
  for (std::size_t i = 0; i < times; ++i) cur = lift_adjunction(cur, opts.budget);
  ValidationReport report = check_adjunction(cur);
  json j;
  j["command"] = "lift-adjunction";
  j["ok"] = report.ok();
  j["adjunction"] = name;
  j["times"] = times;
  j["left"] = cur.F.src()->name();
  j["right"] = cur.G.src()->name();
  std::ostringstream os;
  os << "lifted adjunction " << name << " (" << times << "x) between " << cur.F.src()->name()
     << " and " << cur.G.src()->name() << ": " << report.summary() << "\n";
  emit(opts, j, os.str());
  return report.ok() ? kExitOk : kExitValidation;
}

int cmd_propagate(const Options& opts, const std::string& file, const std::string& functor,
                  const std::string& nat, const std::string& diagonal,
                  const std::string& index_name, std::size_t n) {
  json j;
  j["command"] = "propagate";
  j["n"] = n;
  std::ostringstream os;
  if (!diagonal.empty()) {
    Workspace ws = load(file);
    CategoryRef base = ws.category(diagonal);
    CategoryRef idx = index_by_name(index_name.empty() ? "two" : index_name);
    Functor diag = general_diagonal(base, idx, 1, opts.budget);
    Functor prop = propagate_functor(diag, ascending_case(idx, base), n, opts.budget);
    ValidationReport report = validate_functor(prop);
    j["ok"] = report.ok();
    j["diagonal"] = diagonal;
    j["index"] = idx->name();
    j["src"] = prop.src()->name();
    j["dst"] = prop.dst()->name();
    os << "propagated diagonal of " << diagonal << " to level " << n << ": "
       << prop.src()->name() << " -> " << prop.dst()->name() << " (" << report.summary()
       << ")\n";
    emit(opts, j, os.str());
    return report.ok() ? kExitOk : kExitValidation;
  }
  Workspace ws = load(file);
  if (!functor.empty()) {
    Functor prop = propagate_functor(ws.functor_named(functor), basic_case(), n, opts.budget);
    ValidationReport report = validate_functor(prop);
    j["ok"] = report.ok();
    j["functor"] = functor;
    j["src"] = prop.src()->name();
    j["dst"] = prop.dst()->name();
    os << "propagated functor " << functor << " to level " << n << ": " << prop.src()->name()
       << " -> " << prop.dst()->name() << " (" << report.summary() << ")\n";
    emit(opts, j, os.str());
    return report.ok() ? kExitOk : kExitValidation;
  }
  NatTrans prop = propagate_nat(ws.nat_named(nat), basic_case(), n, opts.budget);
  ValidationReport report = validate_nat_trans(prop);
  j["ok"] = report.ok();
  j["nat"] = nat;
  j["src"] = prop.source_functor().src()->name();
  j["dst"] = prop.source_functor().dst()->name();
  os << "propagated transformation " << nat << " to level " << n << " over "
     << prop.source_functor().src()->name() << " (" << report.summary() << ")\n";
  emit(opts, j, os.str());
  return report.ok() ? kExitOk : kExitValidation;
}

int cmd_cs_act(const Options& opts, const std::string& file, const std::string& category,
               const std::string& functor, const std::string& nat, long long shift) {
  Workspace ws = load(file);
  LeveledConcept concept_ = [&] {
    if (!category.empty()) return LeveledConcept::make_category(ws.category(category));
    if (!functor.empty())
      return LeveledConcept::make_functor(ws.functor_named(functor), basic_case());
    return LeveledConcept::make_nat(ws.nat_named(nat), basic_case());
  }();
  LeveledConcept shifted = cs_act(CSElement{shift}, concept_, opts.budget);
  json j;
  j["command"] = "cs-act";
  j["ok"] = true;
  j["shift"] = shift;
  j["level"] = shifted.level();
  std::ostringstream os;
  const std::string name = !category.empty() ? category : (!functor.empty() ? functor : nat);
  os << "g_" << shift << " . " << name << ": now at level " << shifted.level() << "\n";
  if (shifted.kind() == ConceptKind::category) {
    j["objects"] = shifted.as_category()->object_count();
    j["arrows"] = shifted.as_category()->arrow_count();
    os << "  " << shifted.as_category()->object_count() << " objects, "
       << shifted.as_category()->arrow_count() << " arrows\n";
  }
  emit(opts, j, os.str());
  return kExitOk;
}

int cmd_iso2(const Options& opts, const std::string& file, const std::string& name) {
  Workspace ws = load(file);
  IsoWitness w = equivalence_level_two(ws.category(name), opts.budget);
  ValidationReport report = check_iso(w);
  json j;
  j["command"] = "iso-2";
  j["ok"] = report.ok();
  j["category"] = name;
  j["forward"] = w.forward.src()->name() + " -> " + w.forward.dst()->name();
  j["backward"] = w.backward.src()->name() + " -> " + w.backward.dst()->name();
  std::ostringstream os;
  os << "level-two equivalence of " << name << ": " << report.summary() << "\n";
  emit(opts, j, os.str());
  return report.ok() ? kExitOk : kExitValidation;
}

int cmd_dot(const Options& opts, const std::string& file, const std::string& name,
            bool identities) {
  Workspace ws = load(file);
  DotOptions dot_opts;
  dot_opts.include_identities = identities;
  std::string dot = emit_dot(*ws.category(name), dot_opts);
  json j;
  j["command"] = "dot";
  j["ok"] = true;
  j["category"] = name;
  j["dot"] = dot;
  emit(opts, j, dot);
  return kExitOk;
}

int classify(const Options& opts, const std::string& command, const std::string& kind,
             const std::string& message, int code) {
  if (opts.json) {
    json j;
    j["command"] = command;
    j["ok"] = false;
    j["error"] = kind;
    j["message"] = message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comma-forge: finite categories, arrow-category towers, and their preserved "
               "structure"};
  app.require_subcommand(1);

  Options opts;
  app.add_flag("--json", opts.json, "machine-readable output");
  app.add_option("--budget", opts.budget.max_arrows,
                 "max arrows per materialized category (default 20000)");

  std::string file, category, functor, nat, adjunction, diagram, diagonal, index_name;
  std::size_t n = 1, times = 1, level = 1, max_n = 8;
  long long shift = 0;
  bool identities = false;

  auto* validate_cmd = app.add_subcommand("validate", "load and validate a workspace");
  validate_cmd->add_option("file", file)->required();

  auto* level_cmd = app.add_subcommand("level", "materialize a tower level");
  level_cmd->add_option("file", file)->required();
  level_cmd->add_option("--category", category)->required();
  level_cmd->add_option("--n", n)->required();

  auto* peano_cmd = app.add_subcommand("peano", "the categorial natural n");
  peano_cmd->add_option("--n", n)->required();

  auto* naturals_cmd = app.add_subcommand("naturals-report", "peano table with leaf counts");
  naturals_cmd->add_option("--max", max_n);

  auto* lift_cmd = app.add_subcommand("lift", "comma-lift a functor or transformation");
  lift_cmd->add_option("file", file)->required();
  lift_cmd->add_option("--functor", functor);
  lift_cmd->add_option("--nat", nat);
  lift_cmd->add_option("--times", times);

  auto* limit_cmd = app.add_subcommand("limit", "limit certificate of a diagram");
  limit_cmd->add_option("file", file)->required();
  limit_cmd->add_option("--diagram", diagram)->required();
  limit_cmd->add_option("--level", level);

  auto* colimit_cmd = app.add_subcommand("colimit", "colimit certificate of a diagram");
  colimit_cmd->add_option("file", file)->required();
  colimit_cmd->add_option("--diagram", diagram)->required();

  auto* adjoint_cmd = app.add_subcommand("adjoint-check", "check an adjunction");
  adjoint_cmd->add_option("file", file)->required();
  adjoint_cmd->add_option("--adjunction", adjunction)->required();

  auto* lift_adj_cmd = app.add_subcommand("lift-adjunction", "comma-lift an adjunction");
  lift_adj_cmd->add_option("file", file)->required();
  lift_adj_cmd->add_option("--adjunction", adjunction)->required();
  lift_adj_cmd->add_option("--times", times);

  auto* prop_cmd = app.add_subcommand("propagate", "comma-propagate to level n");
  prop_cmd->add_option("file", file)->required();
  prop_cmd->add_option("--functor", functor);
  prop_cmd->add_option("--nat", nat);
  prop_cmd->add_option("--diagonal", diagonal);
  prop_cmd->add_option("--index", index_name);
  prop_cmd->add_option("--n", n)->required();

  auto* cs_cmd = app.add_subcommand("cs-act", "apply a category-symmetry element");
  cs_cmd->add_option("file", file)->required();
  cs_cmd->add_option("--category", category);
  cs_cmd->add_option("--functor", functor);
  cs_cmd->add_option("--nat", nat);
  cs_cmd->add_option("--shift", shift)->required();

  auto* iso_cmd = app.add_subcommand("iso-2", "the level-two equivalence");
  iso_cmd->add_option("file", file)->required();
  iso_cmd->add_option("--category", category)->required();

  auto* dot_cmd = app.add_subcommand("dot", "emit Graphviz DOT");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_option("--category", category)->required();
  dot_cmd->add_flag("--identities", identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (validate_cmd->parsed()) return cmd_validate(opts, file);
    if (level_cmd->parsed()) return cmd_level(opts, file, category, n);
    if (peano_cmd->parsed()) return cmd_peano(opts, n);
    if (naturals_cmd->parsed()) return cmd_naturals_report(opts, max_n);
    if (lift_cmd->parsed()) {
      if (functor.empty() == nat.empty())
        throw CLI::ValidationError("lift", "exactly one of --functor/--nat is required");
      return cmd_lift(opts, file, functor, nat, times);
    }
    if (limit_cmd->parsed()) return cmd_limit(opts, file, diagram, level, false);
    if (colimit_cmd->parsed()) return cmd_limit(opts, file, diagram, 1, true);
    if (adjoint_cmd->parsed()) return cmd_adjoint_check(opts, file, adjunction);
    if (lift_adj_cmd->parsed()) return cmd_lift_adjunction(opts, file, adjunction, times);
    if (prop_cmd->parsed()) {
      if ((functor.empty() ? 0 : 1) + (nat.empty() ? 0 : 1) + (diagonal.empty() ? 0 : 1) != 1)
        throw CLI::ValidationError("propagate",
                                   "exactly one of --functor/--nat/--diagonal is required");
      return cmd_propagate(opts, file, functor, nat, diagonal, index_name, n);
    }
    if (cs_cmd->parsed()) {
      if ((category.empty() ? 0 : 1) + (functor.empty() ? 0 : 1) + (nat.empty() ? 0 : 1) != 1)
        throw CLI::ValidationError("cs-act",
                                   "exactly one of --category/--functor/--nat is required");
      return cmd_cs_act(opts, file, category, functor, nat, shift);
    }
    if (iso_cmd->parsed()) return cmd_iso2(opts, file, category);
    if (dot_cmd->parsed()) return cmd_dot(opts, file, category, identities);
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    return classify(opts, command, "usage", e.what(), kExitUsage);
  } catch (const SizeBudgetExceeded& e) {
    return classify(opts, command, "budget", e.what(), kExitBudget);
  } catch (const SyntaxError& e) {
    return classify(opts, command, "syntax", e.what(), kExitValidation);
  } catch (const UnknownReference& e) {
    return classify(opts, command, "reference", e.what(), kExitValidation);
  } catch (const ValidationFailure& e) {
    return classify(opts, command, "validation", e.what(), kExitValidation);
  } catch (const UndefinedAction& e) {
    return classify(opts, command, "undefined-action", e.what(), kExitValidation);
  } catch (const Error& e) {
    return classify(opts, command, "engine", e.what(), kExitValidation);
  }
}
