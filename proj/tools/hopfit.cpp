// Command-line frontend: validation, enumeration, property checks, chain
// reports, the census, the verification suite, and the symbolic criteria.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hopfit/census.hpp"
#include "hopfit/io.hpp"
#include "hopfit/properties.hpp"
#include "hopfit/suite.hpp"
#include "hopfit/symbolic.hpp"

namespace {

using namespace hopfit;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

int verdict_exit(const Verdict& v) {
  return v.status == Status::Fails ? kExitFailure : kExitPass;
}

void print_verdict(const std::string& property, const Verdict& v, bool json) {
  if (json) {
    std::cout << to_json(property, v).dump(2) << "\n";
    return;
  }
  std::cout << property << ": " << to_string(v.status) << "\n";
  if (!v.witness.is_null()) {
    std::cout << "witness: " << v.witness.dump() << "\n";
  }
  if (!v.certificate.is_null()) {
    if (property == "fitting" && v.certificate.contains("per_endo")) {
      std::cout << "per-endomorphism indices (fitting_n, ker, im):\n";
      for (const Json& row : v.certificate["per_endo"]) {
        std::cout << "  ";
        for (const auto& x : row["endo"]) std::cout << x.get<int>() << " ";
        std::cout << "-> " << row["fitting_n"].get<int>() << " "
                  << row["ker_index"].get<int>() << " "
                  << row["im_index"].get<int>() << "\n";
      }
    } else {
      std::cout << "certificate: " << v.certificate.dump() << "\n";
    }
  }
}

int cmd_validate(const std::string& path, bool json) {
  const std::string kind = classify_file(path);
  if (kind == "monoid") {
    const FiniteMonoid m = read_monoid(path);
    if (json) {
      std::cout << Json{{"kind", "monoid"},
                        {"size", m.size()},
                        {"identity", m.identity()},
                        {"commutative", m.is_commutative()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "valid monoid: size " << m.size() << ", identity "
                << m.identity()
                << (m.is_commutative() ? ", commutative" : "") << "\n";
    }
  } else {
    const FiniteAct a = read_act(path);
    if (json) {
      std::cout << Json{{"kind", "act"},
                        {"size", a.size()},
                        {"monoid_size", a.monoid().size()},
                        {"zeros", a.zeros()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "valid act: size " << a.size() << " over monoid of size "
                << a.monoid().size() << ", zeros [";
      for (std::size_t i = 0; i < a.zeros().size(); ++i) {
        std::cout << (i ? " " : "") << a.zeros()[i];
      }
      std::cout << "]\n";
    }
  }
  return kExitPass;
}

int cmd_endos(const std::string& path, int cap, bool json) {
  const FiniteAct a = read_act(path);
  const auto endos = enumerate_endomorphisms(a, cap);
  if (json) {
    Json out = Json::array();
    for (const ActHom& f : endos) out.push_back(f.map());
    std::cout << Json{{"count", endos.size()}, {"endomorphisms", out}}.dump(2)
              << "\n";
  } else {
    for (const ActHom& f : endos) std::cout << format_hom(f) << "\n";
    std::cout << "# " << endos.size() << " endomorphisms\n";
  }
  return kExitPass;
}

int cmd_con(const std::string& path, int cap, bool json) {
  const FiniteAct a = read_act(path);
  const auto cons = enumerate_congruences(a, cap);
  if (json) {
    Json out = Json::array();
    for (const Congruence& rho : cons) out.push_back(rho.block_of());
    std::cout << Json{{"count", cons.size()}, {"congruences", out}}.dump(2)
              << "\n";
  } else {
    for (const Congruence& rho : cons) {
      std::cout << format_congruence(rho) << "\n";
    }
    std::cout << "# " << cons.size() << " congruences\n";
  }
  return kExitPass;
}

int cmd_quotient(const std::string& path, const std::string& cong_text,
                 bool json) {
  const FiniteAct a = read_act(path);
  const Congruence rho = parse_congruence(a, cong_text);
  const auto [q, nat] = quotient_act(a, rho);
  if (json) {
    std::cout << Json{{"size", q.size()},
                      {"action", q.action()},
                      {"natural_map", nat.map()}}
                     .dump(2)
              << "\n";
  } else {
    write_act(std::cout, q, "<monoid>");
    std::cout << format_hom(nat) << "  # natural surjection\n";
  }
  return kExitPass;
}

int cmd_check(const std::string& property, const std::string& path, int cap,
              bool cancellative_only, bool json) {
  const FiniteAct a = read_act(path);
  const std::map<std::string, std::function<Verdict()>> checks = {
      {"hopfian", [&] { return is_hopfian(a, cap); }},
      {"cohopfian", [&] { return is_cohopfian(a, cap); }},
      {"strongly-hopfian", [&] { return is_strongly_hopfian(a, cap); }},
      {"strongly-cohopfian", [&] { return is_strongly_cohopfian(a, cap); }},
      {"fitting", [&] { return is_fitting(a, cap); }},
      {"dedekind-finite", [&] { return is_dedekind_finite(a, 4, cap); }},
      {"torsion-free", [&] { return is_torsion_free(a, cancellative_only); }},
      {"quasi-injective", [&] { return is_quasi_injective(a, cap); }},
      {"quasi-projective", [&] { return is_quasi_projective(a, cap); }},
      {"quasi-retractable", [&] { return is_quasi_retractable(a, cap); }},
      {"quasi-coretractable", [&] { return is_quasi_coretractable(a, cap); }},
      {"strongly-duo", [&] { return is_strongly_duo(a, cap); }},
      {"uniform",
       [&] {
         return is_uniform(a, cap)
                    ? Verdict::holds(Json{{"via", "subact scan"}})
                    : Verdict::fails(nullptr);
       }},
      {"mono-uniform",
       [&] {
         return is_mono_uniform(a, cap)
                    ? Verdict::holds(Json{{"via", "endomorphism scan"}})
                    : Verdict::fails(nullptr);
       }},
  };
  const auto it = checks.find(property);
  if (it == checks.end()) {
    std::string known;
    for (const auto& [name, fn] : checks) known += " " + name;
    throw ValidationError("unknown property '" + property + "'; one of:" +
                          known);
  }
  const Verdict v = it->second();
  print_verdict(property, v, json);
  return verdict_exit(v);
}

int cmd_stab(const std::string& path, const std::string& endo_text,
             bool json) {
  const FiniteAct a = read_act(path);
  const ActHom f = parse_endo(a, endo_text);
  const StabilizationReport r = stabilization(f);
  if (json) {
    Json log = Json::array();
    for (const auto& step : r.chain_log) {
      log.push_back(Json{{"ker_blocks", step.ker_blocks},
                         {"image_size", step.image_size}});
    }
    std::cout << Json{{"endo", f.map()},
                      {"ker_index", r.ker_index},
                      {"im_index", r.im_index},
                      {"fitting_n", r.fitting_n},
                      {"chain", log}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << format_hom(f) << "\n"
              << "ker_index: " << r.ker_index << "\n"
              << "im_index: " << r.im_index << "\n"
              << "fitting_n: " << r.fitting_n << "\n"
              << "chain (n: ker blocks, image size):\n";
    for (std::size_t i = 0; i < r.chain_log.size(); ++i) {
      std::cout << "  " << i + 1 << ": " << r.chain_log[i].ker_blocks << " "
                << r.chain_log[i].image_size << "\n";
    }
  }
  return kExitPass;
}

Json census_json(int max_order, int max_size) {
  Json monoids = Json::object();
  Json acts = Json::object();
  for (int order = 1; order <= max_order; ++order) {
    const auto ms = enumerate_monoids(order);
    monoids[std::to_string(order)] = ms.size();
    for (const FiniteMonoid& m : ms) {
      auto mp = std::make_shared<const FiniteMonoid>(m);
      Json per_size = Json::object();
      for (int size = 1; size <= max_size; ++size) {
        per_size[std::to_string(size)] = enumerate_acts(mp, size).size();
      }
      acts[monoid_key(m)] = std::move(per_size);
    }
  }
  return Json{{"schema", 1}, {"monoids", monoids}, {"acts", acts}};
}

int cmd_census(int max_order, int max_size, bool json) {
  const Json out = census_json(max_order, max_size);
  if (json) {
    std::cout << out.dump(1) << "\n";
  } else {
    for (const auto& [order, count] : out["monoids"].items()) {
      std::cout << "monoids of order " << order << ": " << count << "\n";
    }
    for (const auto& [key, sizes] : out["acts"].items()) {
      std::cout << key << ":";
      for (const auto& [size, count] : sizes.items()) {
        std::cout << " " << count << " acts of size " << size << ";";
      }
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int cmd_suite(const CensusScope& scope, int jobs, bool json, bool timing) {
  const SuiteReport report = run_suite(scope, jobs);
  if (json) {
    std::cout << report.to_json(timing).dump(2) << "\n";
  } else {
    for (const SuiteRow& row : report.rows) {
      const char* status = !row.skipped.empty() ? "SKIP"
                           : row.failures.empty() ? "PASS"
                                                  : "FAIL";
      std::cout << status << " " << row.id << " (" << row.tag << ")"
                << " instances=" << row.instances
                << " vacuous=" << row.vacuous
                << " failures=" << row.failures.size();
      if (!row.skipped.empty()) std::cout << " [" << row.skipped << "]";
      std::cout << "\n";
      for (const Json& f : row.failures) {
        std::cout << "    " << f.dump() << "\n";
      }
    }
    std::cout << (report.passed() ? "suite passed" : "suite FAILED") << " ("
              << report.rows.size() << " rows, " << report.failure_count()
              << " failures)\n";
  }
  if (!report.passed()) return kExitFailure;
  if (report.any_skipped()) return kExitCapExceeded;
  return kExitPass;
}

int cmd_symbolic(const std::string& backend_spec, const std::string& criterion,
                 const std::vector<std::string>& args, const Budget& budget,
                 bool json) {
  const auto backend = make_backend(backend_spec);
  Verdict v;
  if (criterion == "right-hopfian") {
    v = monoid_right_hopfian(*backend, budget);
  } else if (criterion == "right-cohopfian") {
    v = monoid_right_cohopfian(*backend, budget);
  } else if (criterion == "right-invertible") {
    if (args.size() != 1) throw ValidationError("needs one element argument");
    v = right_invertible(*backend, args[0], budget);
  } else if (criterion == "left-cancellative") {
    if (args.size() != 1) throw ValidationError("needs one element argument");
    v = left_cancellative(*backend, args[0], budget);
  } else if (criterion == "strongly-hopfian-element") {
    if (args.size() != 1) throw ValidationError("needs one element argument");
    v = strongly_hopfian_element(*backend, args[0], budget);
  } else if (criterion == "strongly-cohopfian-element") {
    if (args.size() != 2) {
      throw ValidationError("needs two element arguments: z x");
    }
    v = strongly_cohopfian_element(*backend, args[0], args[1], budget);
  } else {
    throw ValidationError(
        "unknown criterion '" + criterion +
        "'; one of: right-hopfian right-cohopfian right-invertible "
        "left-cancellative strongly-hopfian-element "
        "strongly-cohopfian-element");
  }
  print_verdict(backend->name() + " " + criterion, v, json);
  return verdict_exit(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for Hopfian, co-Hopfian and Fitting "
               "properties of acts over monoids"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string path, cong_text, endo_text, property;
  std::string backend_spec, criterion;
  std::vector<std::string> element_args;
  bool cancellative_only = false;
  bool no_timing = false;
  int jobs = 1;
  int cap = kDefaultEnumCap;
  CensusScope scope;

  auto* validate = app.add_subcommand("validate", "check a monoid or act file");
  validate->add_option("file", path)->required();

  auto* endos = app.add_subcommand("endos", "list the endomorphisms of an act");
  endos->add_option("file", path)->required();
  endos->add_option("--max-act-size", cap, "enumeration guard");

  auto* con = app.add_subcommand("con", "list the congruences of an act");
  con->add_option("file", path)->required();
  con->add_option("--max-act-size", cap, "enumeration guard");

  auto* quotient = app.add_subcommand("quotient", "quotient by a congruence");
  quotient->add_option("file", path)->required();
  quotient->add_option("--cong", cong_text, "block ids, e.g. \"0 0 1\"")
      ->required();

  auto* check = app.add_subcommand("check", "decide a property of an act");
  check->add_option("property", property)->required();
  check->add_option("file", path)->required();
  check->add_flag("--cancellative-only", cancellative_only,
                  "restrict the torsion-free scan to right-cancellable s");
  check->add_option("--max-act-size", cap, "enumeration guard");

  auto* stab = app.add_subcommand("stab", "chain indices of an endomorphism");
  stab->add_option("file", path)->required();
  stab->add_option("--endo", endo_text, "a:b pairs, e.g. \"2:1 1:0 0:0\"")
      ->required();

  auto* census = app.add_subcommand("census", "enumerate small monoids and acts");
  census->add_option("--max-monoid-order", scope.max_monoid_order);
  census->add_option("--max-act-size", scope.max_act_size);

  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->add_option("--max-monoid-order", scope.max_monoid_order);
  suite->add_option("--max-act-size", scope.max_act_size);
  suite->add_flag("--catalog", scope.catalog_only,
                  "use the named catalog instead of the census");
  suite->add_option("--jobs", jobs, "worker threads for the precomputation");
  suite->add_flag("--no-timing", no_timing, "omit wall_ms from JSON output");

  Budget budget;
  auto* symbolic =
      app.add_subcommand("symbolic", "semi-decide a monoid-element criterion");
  symbolic->add_option("backend", backend_spec,
                       "finite:<file>, nat-add, free:<k>, bicyclic")
      ->required();
  symbolic->add_option("criterion", criterion)->required();
  symbolic->add_option("args", element_args, "element arguments");
  symbolic->add_option("--max-norm", budget.max_norm);
  symbolic->add_option("--max-n", budget.max_n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path, json);
    if (endos->parsed()) return cmd_endos(path, cap, json);
    if (con->parsed()) return cmd_con(path, cap, json);
    if (quotient->parsed()) return cmd_quotient(path, cong_text, json);
    if (check->parsed()) {
      return cmd_check(property, path, cap, cancellative_only, json);
    }
    if (stab->parsed()) return cmd_stab(path, endo_text, json);
    if (census->parsed()) {
      return cmd_census(scope.max_monoid_order, scope.max_act_size, json);
    }
    if (suite->parsed()) return cmd_suite(scope, jobs, json, !no_timing);
    if (symbolic->parsed()) {
      return cmd_symbolic(backend_spec, criterion, element_args, budget, json);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitPass;
}
