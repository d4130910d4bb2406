#include "hopfit/suite.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <thread>

#include "hopfit/io.hpp"
#include "hopfit/properties.hpp"
#include "hopfit/symbolic.hpp"

namespace hopfit {

namespace {

bool ok(const Verdict& v) { return v.status == Status::Holds; }

// Everything the rows consume, precomputed once per act.
struct ActCtx {
  std::string label;
  int monoid_index = -1;
  FiniteAct act;
  bool is_regular = false;

  std::vector<ActHom> endos;
  std::vector<Congruence> cons;
  std::vector<Subact> subacts;
  std::vector<bool> subact_essential;
  std::vector<bool> subact_fully_invariant;

  Verdict hopfian, cohopfian, strongly_hopfian, strongly_cohopfian, fitting;
  Verdict torsion_free, quasi_injective, quasi_projective, quasi_retractable,
      quasi_coretractable, strongly_duo, essential_image;
  std::optional<Verdict> dedekind;
  bool uniform = false;
  bool mono_uniform = false;
  bool cyclic = false;

  // per congruence: {hopfian, cohopfian, strongly hopfian, strongly
  // cohopfian, fitting} of the factor act
  std::vector<std::array<bool, 5>> factor;

  explicit ActCtx(FiniteAct a) : act(std::move(a)) {}
};

struct MonoidCtx {
  MonoidPtr monoid;
  std::string key;
  std::vector<int> acts;  // indices into the context vector
  int regular = -1;       // context index of S_S
};

struct Universe {
  CensusScope scope;
  std::vector<MonoidCtx> monoids;
  std::vector<ActCtx> acts;
};

void fill_ctx(ActCtx& c) {
  const FiniteAct& a = c.act;
  c.endos = enumerate_endomorphisms(a);
  c.cons = enumerate_congruences(a);
  c.subacts = enumerate_subacts(a);
  for (const Subact& b : c.subacts) {
    c.subact_essential.push_back(is_essential(b));
    c.subact_fully_invariant.push_back(is_fully_invariant(b));
  }
  c.hopfian = is_hopfian(a);
  c.cohopfian = is_cohopfian(a);
  c.strongly_hopfian = is_strongly_hopfian(a);
  c.strongly_cohopfian = is_strongly_cohopfian(a);
  c.fitting = is_fitting(a);
  c.torsion_free = is_torsion_free(a);
  c.quasi_injective = is_quasi_injective(a);
  c.quasi_projective = is_quasi_projective(a);
  c.quasi_retractable = is_quasi_retractable(a);
  c.quasi_coretractable = is_quasi_coretractable(a);
  c.strongly_duo = is_strongly_duo(a);
  c.essential_image = maps_essential_to_essential(a);
  if (a.designated_zero()) c.dedekind = is_dedekind_finite(a);
  c.uniform = is_uniform(a);
  c.mono_uniform = is_mono_uniform(a);
  c.cyclic = is_cyclic(a);
  for (const Congruence& rho : c.cons) {
    const FiniteAct q = quotient_act(a, rho).first;
    c.factor.push_back({ok(is_hopfian(q)), ok(is_cohopfian(q)),
                        ok(is_strongly_hopfian(q)),
                        ok(is_strongly_cohopfian(q)), ok(is_fitting(q))});
  }
}

Universe build_universe(const CensusScope& scope, int jobs) {
  scope.check();
  Universe u;
  u.scope = scope;
  if (scope.catalog_only) {
    for (const CatalogEntry& entry : catalog_acts()) {
      const MonoidPtr m = entry.act.monoid_ptr();
      int mi = -1;
      for (std::size_t i = 0; i < u.monoids.size(); ++i) {
        if (*u.monoids[i].monoid == *m) {
          mi = static_cast<int>(i);
          break;
        }
      }
      if (mi == -1) {
        mi = static_cast<int>(u.monoids.size());
        u.monoids.push_back({m, monoid_key(*m), {}, -1});
      }
      ActCtx ctx(entry.act);
      ctx.label = entry.name;
      ctx.monoid_index = mi;
      ctx.is_regular = entry.act == regular_act(m);
      u.monoids[mi].acts.push_back(static_cast<int>(u.acts.size()));
      if (ctx.is_regular) {
        u.monoids[mi].regular = static_cast<int>(u.acts.size());
      }
      u.acts.push_back(std::move(ctx));
    }
  } else {
    for (int order = 1; order <= scope.max_monoid_order; ++order) {
      for (FiniteMonoid& m : enumerate_monoids(order)) {
        auto mp = std::make_shared<const FiniteMonoid>(std::move(m));
        MonoidCtx mc{mp, monoid_key(*mp), {}, -1};
        const int mi = static_cast<int>(u.monoids.size());
        {
          ActCtx ctx(regular_act(mp));
          ctx.label = mc.key + ":regular";
          ctx.monoid_index = mi;
          ctx.is_regular = true;
          mc.regular = static_cast<int>(u.acts.size());
          mc.acts.push_back(mc.regular);
          u.acts.push_back(std::move(ctx));
        }
        for (int size = 1; size <= scope.max_act_size; ++size) {
          int index = 0;
          for (FiniteAct& a : enumerate_acts(mp, size)) {
            ActCtx ctx(std::move(a));
            ctx.label = mc.key + ":act" + std::to_string(size) + "." +
                        std::to_string(index++);
            ctx.monoid_index = mi;
            mc.acts.push_back(static_cast<int>(u.acts.size()));
            u.acts.push_back(std::move(ctx));
          }
        }
        u.monoids.push_back(std::move(mc));
      }
    }
  }
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (ActCtx& c : u.acts) fill_ctx(c);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < u.acts.size(); i += jobs) {
          fill_ctx(u.acts[i]);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }
  return u;
}

// ---------------------------------------------------------------------------
// row implementations

using RowFn = std::function<void(SuiteRow&, const Universe&)>;

struct RowSpec {
  const char* id;
  const char* tag;
  const char* statement;
  RowFn fn;
};

Json act_ref(const ActCtx& c) { return Json{{"act", c.label}}; }

void row_regular_zeros(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    const ActCtx& reg = u.acts[mc.regular];
    std::vector<Element> expect;
    for (Element x = 0; x < mc.monoid->size(); ++x) {
      bool fixed = true;
      for (Element s = 0; s < mc.monoid->size(); ++s) {
        if (mc.monoid->mul(x, s) != x) {
          fixed = false;
          break;
        }
      }
      if (fixed) expect.push_back(x);
    }
    if (reg.act.zeros() != expect) {
      row.failures.push_back(Json{{"monoid", mc.key},
                                  {"zeros", reg.act.zeros()},
                                  {"expected", expect}});
    }
  }
}

void row_quotient_kernel_roundtrip(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (const Congruence& rho : c.cons) {
      ++row.instances;
      const auto [q, nat] = quotient_act(c.act, rho);
      if (!(kernel(nat) == rho)) {
        Json f = act_ref(c);
        f["congruence"] = rho.block_of();
        row.failures.push_back(std::move(f));
      }
    }
  }
}

void row_lattice_laws(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    const Congruence delta = diagonal(c.act);
    const Congruence nabla = universal(c.act);
    for (const Congruence& r : c.cons) {
      ++row.instances;
      const bool neutral = join(r, delta) == r && meet(r, nabla) == r &&
                           join(r, nabla) == nabla && meet(r, delta) == delta &&
                           join(r, r) == r;
      if (!neutral) {
        Json f = act_ref(c);
        f["congruence"] = r.block_of();
        f["law"] = "identity/absorption/idempotence";
        row.failures.push_back(std::move(f));
      }
    }
    for (const Congruence& r : c.cons) {
      for (const Congruence& s : c.cons) {
        ++row.instances;
        if (!(join(r, s) == join(s, r))) {
          Json f = act_ref(c);
          f["law"] = "commutativity";
          f["r"] = r.block_of();
          f["s"] = s.block_of();
          row.failures.push_back(std::move(f));
        }
      }
    }
    for (const Congruence& r : c.cons) {
      for (const Congruence& s : c.cons) {
        for (const Congruence& t : c.cons) {
          ++row.instances;
          if (!(join(join(r, s), t) == join(r, join(s, t)))) {
            Json f = act_ref(c);
            f["law"] = "associativity";
            row.failures.push_back(std::move(f));
          }
        }
      }
    }
  }
}

void row_generated_regeneration(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (const Congruence& rho : c.cons) {
      ++row.instances;
      std::vector<std::pair<Element, Element>> pairs;
      for (const auto& block : rho.blocks()) {
        for (std::size_t i = 1; i < block.size(); ++i) {
          pairs.emplace_back(block[i - 1], block[i]);
        }
      }
      if (!(generated_by(c.act, pairs) == rho)) {
        Json f = act_ref(c);
        f["congruence"] = rho.block_of();
        row.failures.push_back(std::move(f));
      }
    }
  }
}

void row_join_oracle(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (const Congruence& r : c.cons) {
      for (const Congruence& s : c.cons) {
        ++row.instances;
        // brute-force least upper bound over the enumerated lattice
        const Congruence* least = nullptr;
        for (const Congruence& t : c.cons) {
          if (!r.refines(t) || !s.refines(t)) continue;
          if (!least || t.refines(*least)) least = &t;
        }
        const Congruence j = join(r, s);
        if (!least || !(j == *least)) {
          Json f = act_ref(c);
          f["r"] = r.block_of();
          f["s"] = s.block_of();
          f["join"] = j.block_of();
          f["oracle"] = least ? Json(least->block_of()) : Json(nullptr);
          row.failures.push_back(std::move(f));
        }
      }
    }
  }
}

void row_endos_are_translations(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    const ActCtx& reg = u.acts[mc.regular];
    bool good = static_cast<int>(reg.endos.size()) == mc.monoid->size();
    for (const ActHom& f : reg.endos) {
      if (!good) break;
      const ActHom lambda = translation(reg.act, f(mc.monoid->identity()));
      good = f.map() == lambda.map();
    }
    if (!good) {
      row.failures.push_back(Json{{"monoid", mc.key},
                                  {"endos", reg.endos.size()},
                                  {"expected", mc.monoid->size()}});
    }
  }
}

void row_hom_theorem(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (const ActHom& f : c.endos) {
      ++row.instances;
      const FiniteAct q = quotient_act(c.act, kernel(f)).first;
      const FiniteAct im = image(f).as_act();
      if (!find_isomorphism(q, im)) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_endo_inj_iff_surj(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (const ActHom& f : c.endos) {
      ++row.instances;
      if (is_injective(f) != is_surjective(f)) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_equivariance_recheck(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    const int n = c.act.monoid().size();
    for (const ActHom& f : c.endos) {
      ++row.instances;
      for (Element x = 0; x < c.act.size(); ++x) {
        for (int s = 0; s < n; ++s) {
          if (f.map()[c.act.act(x, s)] != c.act.act(f.map()[x], s)) {
            Json fail = act_ref(c);
            fail["endo"] = f.map();
            row.failures.push_back(std::move(fail));
          }
        }
      }
    }
  }
}

void row_subact_closure_count(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    const int n = c.act.monoid().size();
    for (const Subact& b : c.subacts) {
      ++row.instances;
      for (Element x : b.members()) {
        for (int s = 0; s < n; ++s) {
          if (!b.contains(c.act.act(x, s))) {
            Json fail = act_ref(c);
            fail["subact"] = b.members();
            row.failures.push_back(std::move(fail));
          }
        }
      }
    }
    if (2 * c.act.size() <= kDefaultEnumCap) {
      ++row.instances;
      const FiniteAct doubled = coproduct(c.act, c.act);
      const long long count = static_cast<long long>(c.subacts.size());
      const long long expect = (count + 1) * (count + 1) - 1;
      const long long got =
          static_cast<long long>(enumerate_subacts(doubled).size());
      if (got != expect) {
        Json fail = act_ref(c);
        fail["coproduct_subacts"] = got;
        fail["expected"] = expect;
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_essential_defcheck(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (std::size_t bi = 0; bi < c.subacts.size(); ++bi) {
      ++row.instances;
      const Subact& b = c.subacts[bi];
      // definitional route: through the natural maps of every congruence
      bool by_maps = true;
      for (const Congruence& rho : c.cons) {
        const ActHom nat = quotient_act(c.act, rho).second;
        bool mono_on_b = true;
        for (std::size_t i = 0; i < b.members().size() && mono_on_b; ++i) {
          for (std::size_t j = i + 1; j < b.members().size(); ++j) {
            if (nat(b.members()[i]) == nat(b.members()[j])) {
              mono_on_b = false;
              break;
            }
          }
        }
        if (mono_on_b && !is_injective(nat)) {
          by_maps = false;
          break;
        }
      }
      if (by_maps != c.subact_essential[bi]) {
        Json fail = act_ref(c);
        fail["subact"] = b.members();
        fail["by_congruence_scan"] = static_cast<bool>(c.subact_essential[bi]);
        fail["by_natural_maps"] = by_maps;
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_decompose(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    const auto parts = decompose_indecomposable(c.act);
    std::vector<bool> seen(c.act.size(), false);
    bool good = true;
    for (const Subact& p : parts) {
      for (Element x : p.members()) {
        if (seen[x]) good = false;
        seen[x] = true;
      }
      if (decompose_indecomposable(p.as_act()).size() != 1) good = false;
    }
    for (bool s : seen) {
      if (!s) good = false;
    }
    // reassembling the components must give the act back
    FiniteAct glued = parts.front().as_act();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      glued = coproduct(glued, parts[i].as_act());
    }
    if (!find_isomorphism(glued, c.act)) good = false;
    if (!good) {
      Json fail = act_ref(c);
      fail["components"] = parts.size();
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_canonical_fixpoint(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    const FiniteMonoid canon = canonical_form(*mc.monoid);
    if (!(canonical_form(canon) == canon) ||
        monoid_key(canon) != monoid_key(*mc.monoid)) {
      row.failures.push_back(Json{{"monoid", mc.key}});
    }
  }
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    const FiniteAct canon = canonical_form(c.act);
    if (!(canonical_form(canon) == canon)) {
      row.failures.push_back(act_ref(c));
    }
    if (!u.scope.catalog_only && !c.is_regular && !(canon == c.act)) {
      // census output must already be canonical
      Json fail = act_ref(c);
      fail["reason"] = "census act not a canonicalization fixpoint";
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_symbolic_finite_consistency(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    const auto backend = finite_backend(mc.monoid);
    const Budget budget{1, mc.monoid->size() + 1};
    const ActCtx& reg = u.acts[mc.regular];
    const bool hop = ok(monoid_right_hopfian(*backend, budget));
    const bool cohop = ok(monoid_right_cohopfian(*backend, budget));
    if (hop != ok(reg.hopfian) || cohop != ok(reg.cohopfian)) {
      row.failures.push_back(Json{{"monoid", mc.key},
                                  {"element_route", Json{{"hopfian", hop},
                                                         {"cohopfian", cohop}}},
                                  {"endo_route",
                                   Json{{"hopfian", ok(reg.hopfian)},
                                        {"cohopfian", ok(reg.cohopfian)}}}});
    }
  }
}

void row_symbolic_witness_reverify(SuiteRow& row, const Universe&) {
  struct Probe {
    const char* backend;
    const char* what;
    Budget budget;
  };
  const std::vector<Probe> probes = {
      {"bicyclic", "right-hopfian", {3, 3}},
      {"nat-add", "right-cohopfian", {6, 4}},
      {"free:2", "right-cohopfian", {4, 3}},
  };
  for (const Probe& p : probes) {
    ++row.instances;
    const auto s = make_backend(p.backend);
    const Verdict v = p.what == std::string("right-hopfian")
                          ? monoid_right_hopfian(*s, p.budget)
                          : monoid_right_cohopfian(*s, p.budget);
    if (v.status != Status::Fails) {
      row.failures.push_back(Json{{"backend", p.backend},
                                  {"probe", p.what},
                                  {"status", to_string(v.status)}});
      continue;
    }
    const std::string x = v.witness.at("x");
    if (p.what == std::string("right-hopfian")) {
      // x must be right invertible yet not left cancellative
      const std::string y = v.witness.at("right_inverse");
      const std::string a = v.witness.at("pair").at("a");
      const std::string b = v.witness.at("pair").at("b");
      const bool good = s->multiply(x, y) == s->identity() && a != b &&
                        s->multiply(x, a) == s->multiply(x, b);
      if (!good) {
        row.failures.push_back(
            Json{{"backend", p.backend}, {"bad_witness", v.witness}});
      }
    } else {
      if (!s->valid_element(x)) {
        row.failures.push_back(
            Json{{"backend", p.backend}, {"bad_witness", v.witness}});
      }
    }
  }
  // per-n witnesses of the chain-condition probe re-multiply correctly
  {
    ++row.instances;
    const auto s = bicyclic_backend();
    const Budget budget{5, 3};
    const Verdict v = strongly_hopfian_element(*s, "b", budget);
    if (v.status != Status::Fails) {
      row.failures.push_back(
          Json{{"backend", "bicyclic"},
               {"probe", "strongly-hopfian-element b"},
               {"status", to_string(v.status)}});
    } else {
      for (const Json& item : v.witness) {
        const int n = item.at("n");
        std::string xn = s->identity();
        for (int i = 0; i < n; ++i) xn = s->multiply(xn, "b");
        const std::string xn1 = s->multiply(xn, "b");
        const std::string cs = item.at("s");
        const std::string ct = item.at("t");
        if (!(s->multiply(xn1, cs) == s->multiply(xn1, ct) &&
              s->multiply(xn, cs) != s->multiply(xn, ct))) {
          row.failures.push_back(
              Json{{"backend", "bicyclic"}, {"bad_witness", item}});
        }
      }
    }
  }
}

void row_symbolic_budget_monotone(SuiteRow& row, const Universe&) {
  const std::vector<std::string> backends = {"bicyclic", "nat-add", "free:2"};
  const std::vector<Budget> budgets = {{3, 1}, {4, 2}, {6, 4}};
  for (const std::string& name : backends) {
    const auto s = make_backend(name);
    Status hop = Status::Unknown, cohop = Status::Unknown;
    for (const Budget& b : budgets) {
      ++row.instances;
      const Status h = monoid_right_hopfian(*s, b).status;
      const Status ch = monoid_right_cohopfian(*s, b).status;
      const auto flipped = [](Status before, Status now) {
        return (before == Status::Holds && now == Status::Fails) ||
               (before == Status::Fails && now == Status::Holds);
      };
      if (flipped(hop, h) || flipped(cohop, ch)) {
        row.failures.push_back(Json{{"backend", name},
                                    {"max_norm", b.max_norm},
                                    {"max_n", b.max_n}});
      }
      if (h != Status::Unknown) hop = h;
      if (ch != Status::Unknown) cohop = ch;
    }
  }
}

void row_bicyclic_associative(SuiteRow& row, const Universe&) {
  const auto s = bicyclic_backend();
  const auto elements = s->enumerate(4);
  for (const std::string& x : elements) {
    for (const std::string& y : elements) {
      const std::string xy = s->multiply(x, y);
      for (const std::string& z : elements) {
        ++row.instances;
        if (s->multiply(xy, z) != s->multiply(x, s->multiply(y, z))) {
          row.failures.push_back(Json{{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
}

void row_three_way(SuiteRow& row, const Universe& u, bool ker) {
  for (const ActCtx& c : u.acts) {
    for (const ActHom& f : c.endos) {
      ++row.instances;
      const RouteAgreement r = ker ? kernel_routes(f) : image_routes(f);
      if (!r.agree() || !r.stationary) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        fail["stationary"] = r.stationary;
        fail["one_step"] = r.one_step;
        fail["congruence_identity"] = r.identity;
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_fitting_iff(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    const bool expected =
        ok(c.strongly_hopfian) && ok(c.strongly_cohopfian);
    if (ok(c.fitting) != expected) {
      Json fail = act_ref(c);
      fail["fitting"] = to_string(c.fitting.status);
      fail["strongly_hopfian"] = to_string(c.strongly_hopfian.status);
      fail["strongly_cohopfian"] = to_string(c.strongly_cohopfian.status);
      row.failures.push_back(std::move(fail));
    }
    for (const ActHom& f : c.endos) {
      ++row.instances;
      const StabilizationReport r = stabilization(f);
      if (r.fitting_n < std::max(r.ker_index, r.im_index) || r.fitting_n < 1) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        fail["fitting_n"] = r.fitting_n;
        fail["ker_index"] = r.ker_index;
        fail["im_index"] = r.im_index;
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_noetherian_artinian_fitting(SuiteRow& row, const Universe& u) {
  // finite acts satisfy both chain conditions outright, so the hypothesis is
  // pigeonhole-forced; the conclusion is still computed
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    ++row.vacuous;
    if (!ok(c.fitting)) {
      Json fail = act_ref(c);
      fail["fitting"] = to_string(c.fitting.status);
      row.failures.push_back(std::move(fail));
    }
  }
}

bool factorization_exists(const ActCtx& c, const ActHom& f, bool gamma_inside) {
  const int m = c.act.size();
  ActHom fn = f;
  for (int n = 1; n <= m; ++n) {
    const ActHom fn1 = compose(f, fn);
    for (const ActHom& gamma : c.endos) {
      bool match = true;
      for (Element x = 0; x < m && match; ++x) {
        // gamma_inside: f^n = f^(n+1) o gamma; otherwise f^n = gamma o f^(n+1)
        const Element lhs = fn(x);
        const Element rhs =
            gamma_inside ? fn1(gamma(x)) : gamma(fn1(x));
        match = lhs == rhs;
      }
      if (match) return true;
    }
    fn = fn1;
  }
  return false;
}

void row_quasi_projective_factorization(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!ok(c.quasi_projective)) continue;
    for (const ActHom& f : c.endos) {
      ++row.instances;
      if (!factorization_exists(c, f, true)) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_quasi_injective_factorization(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!ok(c.quasi_injective)) continue;
    for (const ActHom& f : c.endos) {
      ++row.instances;
      if (!factorization_exists(c, f, false)) {
        Json fail = act_ref(c);
        fail["endo"] = f.map();
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_commutative_cyclic_fitting(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    if (!mc.monoid->is_commutative()) continue;
    for (int ai : mc.acts) {
      const ActCtx& c = u.acts[ai];
      if (!c.cyclic) continue;
      if (ok(c.quasi_injective) && ok(c.strongly_hopfian)) {
        ++row.instances;
        if (!ok(c.strongly_cohopfian) || !ok(c.fitting)) {
          Json fail = act_ref(c);
          fail["case"] = "quasi-injective strongly hopfian";
          row.failures.push_back(std::move(fail));
        }
      }
      if (ok(c.quasi_projective) && ok(c.strongly_cohopfian)) {
        ++row.instances;
        if (!ok(c.strongly_hopfian) || !ok(c.fitting)) {
          Json fail = act_ref(c);
          fail["case"] = "quasi-projective strongly cohopfian";
          row.failures.push_back(std::move(fail));
        }
      }
    }
  }
}

void row_cyclic_cohopfian_equivalence(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    bool all_cohopfian = true, all_strong = true, all_qr_strong = true,
         all_qp_strong = true;
    for (int ai : mc.acts) {
      const ActCtx& c = u.acts[ai];
      if (!c.cyclic) continue;
      all_cohopfian &= ok(c.cohopfian);
      all_strong &= ok(c.strongly_cohopfian);
      if (ok(c.quasi_retractable)) all_qr_strong &= ok(c.strongly_cohopfian);
      if (ok(c.quasi_projective)) all_qp_strong &= ok(c.strongly_cohopfian);
    }
    const ActCtx& reg = u.acts[mc.regular];
    const bool regular_strong = ok(reg.strongly_cohopfian);
    // element condition over every pair (z, x), through the finite backend
    const auto backend = finite_backend(mc.monoid);
    const Budget budget{1, mc.monoid->size() + 1};
    bool element_condition = true;
    for (Element z = 0; z < mc.monoid->size() && element_condition; ++z) {
      for (Element x = 0; x < mc.monoid->size(); ++x) {
        if (!ok(strongly_cohopfian_element(*backend, std::to_string(z),
                                           std::to_string(x), budget))) {
          element_condition = false;
          break;
        }
      }
    }
    const bool all_equal =
        all_cohopfian == all_strong && all_strong == all_qr_strong &&
        all_qr_strong == all_qp_strong && all_qp_strong == regular_strong &&
        regular_strong == element_condition;
    if (!all_equal) {
      row.failures.push_back(Json{{"monoid", mc.key},
                                  {"cyclic_cohopfian", all_cohopfian},
                                  {"cyclic_strongly", all_strong},
                                  {"cyclic_qr_strongly", all_qr_strong},
                                  {"cyclic_qp_strongly", all_qp_strong},
                                  {"regular_strongly", regular_strong},
                                  {"element_condition", element_condition}});
    }
  }
}

void row_fg_cohopfian_equivalence(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    bool all_cohopfian = true, all_strong = true, all_qr_strong = true,
         all_qp_strong = true;
    for (int ai : mc.acts) {
      const ActCtx& c = u.acts[ai];
      all_cohopfian &= ok(c.cohopfian);
      all_strong &= ok(c.strongly_cohopfian);
      if (ok(c.quasi_retractable)) all_qr_strong &= ok(c.strongly_cohopfian);
      if (ok(c.quasi_projective)) all_qp_strong &= ok(c.strongly_cohopfian);
    }
    if (!(all_cohopfian == all_strong && all_strong == all_qr_strong &&
          all_qr_strong == all_qp_strong)) {
      row.failures.push_back(Json{{"monoid", mc.key}});
    }
  }
}

void row_factor_cohopfian(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    bool all_cohopfian = true, all_strong = true;
    for (const auto& f : c.factor) {
      all_cohopfian &= f[1];
      all_strong &= f[3];
    }
    if (all_cohopfian != all_strong) {
      Json fail = act_ref(c);
      fail["factor_cohopfian"] = all_cohopfian;
      fail["factor_strongly_cohopfian"] = all_strong;
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_factor_fitting(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    ++row.instances;
    bool all_both = true, all_fitting = true;
    for (const auto& f : c.factor) {
      all_both &= f[0] && f[1];
      all_fitting &= f[4];
    }
    if (all_both != all_fitting) {
      Json fail = act_ref(c);
      fail["factor_hopfian_and_cohopfian"] = all_both;
      fail["factor_fitting"] = all_fitting;
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_fg_fitting_equivalence(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    bool all_both = true, all_fitting = true, all_strong_both = true;
    for (int ai : mc.acts) {
      const ActCtx& c = u.acts[ai];
      all_both &= ok(c.hopfian) && ok(c.cohopfian);
      all_fitting &= ok(c.fitting);
      all_strong_both &= ok(c.strongly_hopfian) && ok(c.strongly_cohopfian);
    }
    if (!(all_both == all_fitting && all_fitting == all_strong_both)) {
      row.failures.push_back(Json{{"monoid", mc.key}});
    }
  }
}

void row_cyclic_fitting_equivalence(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    ++row.instances;
    bool all_both = true, all_fitting = true, all_strong_both = true;
    for (int ai : mc.acts) {
      const ActCtx& c = u.acts[ai];
      if (!c.cyclic) continue;
      all_both &= ok(c.hopfian) && ok(c.cohopfian);
      all_fitting &= ok(c.fitting);
      all_strong_both &= ok(c.strongly_hopfian) && ok(c.strongly_cohopfian);
    }
    if (!(all_both == all_fitting && all_fitting == all_strong_both)) {
      row.failures.push_back(Json{{"monoid", mc.key}});
    }
  }
}

void row_hopfian_dedekind(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.dedekind) continue;
    if (ok(c.hopfian) || ok(c.cohopfian)) {
      ++row.instances;
      ++row.vacuous;  // hopficity is pigeonhole-forced on finite acts
      if (!ok(*c.dedekind)) {
        row.failures.push_back(act_ref(c));
      }
    }
  }
}

void row_th25(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.dedekind || !ok(c.torsion_free) || !ok(c.quasi_coretractable)) {
      continue;
    }
    ++row.instances;
    const bool b1 = ok(*c.dedekind);
    const bool b2 = ok(c.cohopfian);
    const bool b3 = c.mono_uniform;
    const bool b4 = ok(c.essential_image);
    if (!(b1 == b2 && b2 == b3 && b3 == b4)) {
      Json fail = act_ref(c);
      fail["dedekind"] = b1;
      fail["cohopfian"] = b2;
      fail["mono_uniform"] = b3;
      fail["essential_image"] = b4;
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_te26(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.dedekind || !ok(c.torsion_free) || !ok(c.quasi_retractable)) {
      continue;
    }
    ++row.instances;
    if (ok(*c.dedekind) != ok(c.hopfian)) {
      Json fail = act_ref(c);
      fail["dedekind"] = ok(*c.dedekind);
      fail["hopfian"] = ok(c.hopfian);
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_co214(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!ok(c.torsion_free)) continue;
    ++row.instances;
    ++row.vacuous;  // both sides pigeonhole-forced on finite acts
    const bool rhs = c.mono_uniform && ok(c.quasi_coretractable);
    if (ok(c.cohopfian) != rhs) {
      row.failures.push_back(act_ref(c));
    }
  }
}

void row_co255(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.dedekind || !ok(c.torsion_free) || !ok(c.quasi_injective)) {
      continue;
    }
    ++row.instances;
    bool ess_fi_cohopfian = true;
    bool ess_fi_dedekind = true;
    for (std::size_t bi = 0; bi < c.subacts.size(); ++bi) {
      if (!c.subact_essential[bi] || !c.subact_fully_invariant[bi]) continue;
      const FiniteAct sub = c.subacts[bi].as_act();
      ess_fi_cohopfian &= ok(is_cohopfian(sub));
      if (sub.designated_zero()) {
        ess_fi_dedekind &= ok(is_dedekind_finite(sub));
      }
    }
    const bool b2 = ok(c.cohopfian);
    if (!(b2 == ess_fi_cohopfian && ok(*c.dedekind) == ess_fi_dedekind)) {
      Json fail = act_ref(c);
      fail["cohopfian"] = b2;
      fail["essential_fully_invariant_cohopfian"] = ess_fi_cohopfian;
      fail["dedekind"] = ok(*c.dedekind);
      fail["essential_fully_invariant_dedekind"] = ess_fi_dedekind;
      row.failures.push_back(std::move(fail));
    }
  }
}

void row_co266(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.dedekind || !ok(c.torsion_free) || !ok(c.quasi_projective)) {
      continue;
    }
    ++row.instances;
    if (ok(*c.dedekind) != ok(c.hopfian)) {
      row.failures.push_back(act_ref(c));
    }
  }
}

void row_pr23(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (ok(c.quasi_retractable) && ok(c.cohopfian)) {
      ++row.instances;
      ++row.vacuous;
      if (!ok(c.hopfian)) {
        Json fail = act_ref(c);
        fail["case"] = "retractable cohopfian not hopfian";
        row.failures.push_back(std::move(fail));
      }
    }
    if (ok(c.quasi_coretractable) && ok(c.hopfian)) {
      ++row.instances;
      ++row.vacuous;
      if (!ok(c.cohopfian)) {
        Json fail = act_ref(c);
        fail["case"] = "coretractable hopfian not cohopfian";
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_strongly_duo_cohopfian(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!ok(c.strongly_duo)) continue;
    ++row.instances;
    if (!ok(c.cohopfian)) {
      row.failures.push_back(act_ref(c));
    }
  }
}

void row_commutative_right_hopfian(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    if (!mc.monoid->is_commutative()) continue;
    ++row.instances;
    const auto backend = finite_backend(mc.monoid);
    const Budget budget{1, mc.monoid->size() + 1};
    const Verdict v = monoid_right_hopfian(*backend, budget);
    if (!ok(v) || !ok(u.acts[mc.regular].hopfian)) {
      row.failures.push_back(
          Json{{"monoid", mc.key}, {"status", to_string(v.status)}});
    }
  }
}

void row_mono_uniform_right_hopfian(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    const ActCtx& reg = u.acts[mc.regular];
    if (!reg.mono_uniform) continue;
    ++row.instances;
    ++row.vacuous;  // mono-uniformity is pigeonhole-forced on finite acts
    if (!ok(reg.hopfian)) {
      row.failures.push_back(Json{{"monoid", mc.key}});
    }
  }
}

void row_uniform_mono_uniform(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (c.uniform) {
      ++row.instances;
      if (!c.mono_uniform) {
        Json fail = act_ref(c);
        fail["case"] = "uniform";
        row.failures.push_back(std::move(fail));
      }
    }
    if (ok(c.cohopfian)) {
      ++row.instances;
      ++row.vacuous;
      if (!c.mono_uniform) {
        Json fail = act_ref(c);
        fail["case"] = "cohopfian";
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

void row_fully_invariant_extension(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    for (std::size_t bi = 0; bi < c.subacts.size(); ++bi) {
      if (!c.subact_fully_invariant[bi]) continue;
      ++row.instances;
      const FiniteAct sub = c.subacts[bi].as_act();
      const FiniteAct quot = quotient_act(c.act, rees(c.subacts[bi])).first;
      const bool hyp_h = ok(is_hopfian(sub)) && ok(is_hopfian(quot));
      const bool hyp_c = ok(is_cohopfian(sub)) && ok(is_cohopfian(quot));
      if ((hyp_h && !ok(c.hopfian)) || (hyp_c && !ok(c.cohopfian))) {
        Json fail = act_ref(c);
        fail["subact"] = c.subacts[bi].members();
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

// act pairs over one monoid with a small coproduct, for the coproduct rows
std::vector<std::pair<int, int>> coproduct_pairs(const Universe& u,
                                                 const MonoidCtx& mc,
                                                 bool indecomposable_only) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < mc.acts.size(); ++i) {
    const ActCtx& a = u.acts[mc.acts[i]];
    if (indecomposable_only && decompose_indecomposable(a.act).size() != 1) {
      continue;
    }
    for (std::size_t j = i; j < mc.acts.size(); ++j) {
      const ActCtx& b = u.acts[mc.acts[j]];
      if (indecomposable_only &&
          decompose_indecomposable(b.act).size() != 1) {
        continue;
      }
      if (a.act.size() + b.act.size() > 6) continue;
      pairs.emplace_back(mc.acts[i], mc.acts[j]);
      if (pairs.size() >= 20) return pairs;
    }
  }
  return pairs;
}

void row_coproduct_components(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    for (const auto& [ai, bi] : coproduct_pairs(u, mc, false)) {
      ++row.instances;
      ++row.vacuous;  // hopficity of the coproduct is pigeonhole-forced
      const ActCtx& a = u.acts[ai];
      const ActCtx& b = u.acts[bi];
      const FiniteAct cp = coproduct(a.act, b.act);
      const bool cp_h = ok(is_hopfian(cp));
      const bool cp_c = ok(is_cohopfian(cp));
      if ((cp_h && !(ok(a.hopfian) && ok(b.hopfian))) ||
          (cp_c && !(ok(a.cohopfian) && ok(b.cohopfian)))) {
        row.failures.push_back(
            Json{{"monoid", mc.key}, {"a", a.label}, {"b", b.label}});
      }
    }
  }
}

void row_indecomposable_coproduct(SuiteRow& row, const Universe& u) {
  for (const MonoidCtx& mc : u.monoids) {
    for (const auto& [ai, bi] : coproduct_pairs(u, mc, true)) {
      ++row.instances;
      const ActCtx& a = u.acts[ai];
      const ActCtx& b = u.acts[bi];
      const FiniteAct cp = coproduct(a.act, b.act);
      const bool both_h = ok(a.hopfian) && ok(b.hopfian);
      const bool both_c = ok(a.cohopfian) && ok(b.cohopfian);
      if (ok(is_hopfian(cp)) != both_h || ok(is_cohopfian(cp)) != both_c) {
        row.failures.push_back(
            Json{{"monoid", mc.key}, {"a", a.label}, {"b", b.label}});
      }
    }
  }
}

void row_le211(SuiteRow& row, const Universe& u) {
  for (const ActCtx& c : u.acts) {
    if (!c.act.designated_zero()) continue;
    for (const Subact& b : c.subacts) {
      ++row.instances;
      const FiniteAct quot = quotient_act(c.act, rees(b)).first;
      const bool iso = find_isomorphism(c.act, quot).has_value();
      const bool expect =
          b.size() == 1 && c.act.is_zero(b.members().front());
      if (iso != expect) {
        Json fail = act_ref(c);
        fail["subact"] = b.members();
        fail["isomorphic"] = iso;
        row.failures.push_back(std::move(fail));
      }
    }
  }
}

std::vector<RowSpec> make_rows() {
  return {
      {"regular-act-zeros", "invariant:core-algebra",
       "zeros of S_S are exactly the elements with x*s = x for all s",
       row_regular_zeros},
      {"quotient-kernel-roundtrip", "invariant:core-algebra",
       "kernel of the natural surjection of rho equals rho",
       row_quotient_kernel_roundtrip},
      {"congruence-lattice-laws", "invariant:congruences",
       "join is associative, commutative, idempotent; diagonal neutral, "
       "universal absorbing",
       row_lattice_laws},
      {"congruence-regeneration", "invariant:congruences",
       "every congruence is generated by block-spanning pairs",
       row_generated_regeneration},
      {"join-oracle", "invariant:congruences",
       "join(r, s) equals the brute-force least upper bound in Con(A)",
       row_join_oracle},
      {"endos-are-translations", "invariant:morphisms",
       "End(S_S) = { lambda_a : a in S }, one per element",
       row_endos_are_translations},
      {"hom-theorem", "invariant:morphisms",
       "A / ker f is isomorphic to Im f for every endomorphism",
       row_hom_theorem},
      {"endo-injective-iff-surjective", "invariant:morphisms",
       "on a finite act an endomorphism is injective iff surjective",
       row_endo_inj_iff_surj},
      {"equivariance-recheck", "invariant:morphisms",
       "every enumerated endomorphism satisfies f(a*s) = f(a)*s",
       row_equivariance_recheck},
      {"subact-closure-and-coproduct-count", "invariant:subacts",
       "enumerated subacts are closed; |Sub(A + A)| = (|Sub A|+1)^2 - 1",
       row_subact_closure_count},
      {"essential-definitional-crosscheck", "invariant:subacts",
       "congruence-scan essentiality matches the natural-map quantifier",
       row_essential_defcheck},
      {"decompose-components", "invariant:subacts",
       "components are disjoint, cover the act, are connected and "
       "indecomposable, and reassemble to the act",
       row_decompose},
      {"census-canonical-fixpoint", "invariant:harness",
       "re-canonicalizing census output is the identity; no duplicates",
       row_canonical_fixpoint},
      {"symbolic-finite-consistency", "invariant:symbolic",
       "finite-backend element criteria agree with the endomorphism "
       "verdicts on S_S",
       row_symbolic_finite_consistency},
      {"symbolic-witness-reverify", "invariant:symbolic",
       "every Fails witness re-verifies by direct multiplication",
       row_symbolic_witness_reverify},
      {"symbolic-budget-monotone", "invariant:symbolic",
       "enlarging the budget never flips Holds and Fails",
       row_symbolic_budget_monotone},
      {"bicyclic-normal-form-associative", "invariant:symbolic",
       "the c^i b^j product rule associates on all norm <= 4 triples",
       row_bicyclic_associative},
      {"strong-hopfian-three-way", "pr3.1",
       "kernel-chain stationarity, one-step equality, and "
       "ker f^n ^ rees(Im f^n) = diagonal agree for every endomorphism",
       [](SuiteRow& r, const Universe& u) { row_three_way(r, u, true); }},
      {"strong-cohopfian-three-way", "pr3.2",
       "image-chain stationarity, one-step equality, and "
       "ker f^n v rees(Im f^n) = universal agree for every endomorphism",
       [](SuiteRow& r, const Universe& u) { row_three_way(r, u, false); }},
      {"fitting-iff-strong-both", "te3.3",
       "Fitting iff strongly Hopfian and strongly co-Hopfian; "
       "fitting_n >= max(ker_index, im_index)",
       row_fitting_iff},
      {"noetherian-artinian-fitting", "pr3.33",
       "acts with both chain conditions are Fitting",
       row_noetherian_artinian_fitting},
      {"quasi-projective-factorization", "pr3.4",
       "quasi-projective: every f has n, gamma with f^n = f^(n+1) o gamma",
       row_quasi_projective_factorization},
      {"quasi-injective-factorization", "pr3.4",
       "quasi-injective: every f has n, gamma with f^n = gamma o f^(n+1)",
       row_quasi_injective_factorization},
      {"commutative-cyclic-fitting", "pr3.44",
       "over commutative monoids, cyclic quasi-injective strongly Hopfian "
       "acts are strongly co-Hopfian and Fitting (and dually)",
       row_commutative_cyclic_fitting},
      {"cyclic-strongly-cohopfian-equivalence", "co3.7",
       "all-cyclic co-Hopficity conditions, S_S strongly co-Hopfian, and "
       "the element condition x^n z = x^(n+1) t are equivalent",
       row_cyclic_cohopfian_equivalence},
      {"fg-strongly-cohopfian-equivalence", "co3.6",
       "the finitely-generated co-Hopficity conditions are equivalent",
       row_fg_cohopfian_equivalence},
      {"factor-cohopfian-iff-strongly", "pr3.5",
       "all factor acts co-Hopfian iff all factor acts strongly co-Hopfian",
       row_factor_cohopfian},
      {"factor-hopfian-cohopfian-iff-fitting", "pr3.8",
       "all factor acts Hopfian and co-Hopfian iff all factor acts Fitting",
       row_factor_fitting},
      {"fg-fitting-equivalence", "co3.9",
       "all acts Hopfian+co-Hopfian iff all Fitting iff all strongly both",
       row_fg_fitting_equivalence},
      {"cyclic-fitting-equivalence", "co3.10",
       "the same equivalence over cyclic acts",
       row_cyclic_fitting_equivalence},
      {"hopfian-implies-dedekind", "co2.4",
       "Hopfian or co-Hopfian acts with zero are Dedekind-finite",
       row_hopfian_dedekind},
      {"torsion-free-coretractable-equivalence", "th2.5",
       "torsion free quasi-coretractable: Dedekind-finite, co-Hopfian, "
       "mono-uniform, essential-image-preserving are equivalent",
       row_th25},
      {"torsion-free-retractable-equivalence", "te2.6",
       "torsion free quasi-retractable: Dedekind-finite iff Hopfian",
       row_te26},
      {"torsion-free-cohopfian-iff", "co2.14",
       "torsion free: co-Hopfian iff mono-uniform and quasi-coretractable",
       row_co214},
      {"quasi-injective-dedekind-equivalence", "co2.55",
       "torsion free quasi-injective: co-Hopfian iff essential fully "
       "invariant subacts co-Hopfian (and Dedekind-finite likewise)",
       row_co255},
      {"quasi-projective-dedekind-equivalence", "co2.66",
       "torsion free quasi-projective: Dedekind-finite iff Hopfian",
       row_co266},
      {"retractable-hopficity-transfer", "pr2.3",
       "quasi-retractable co-Hopfian is Hopfian; quasi-coretractable "
       "Hopfian is co-Hopfian",
       row_pr23},
      {"strongly-duo-implies-cohopfian", "pr2.1",
       "strongly duo acts are co-Hopfian", row_strongly_duo_cohopfian},
      {"commutative-right-hopfian", "pr2.1",
       "commutative monoids are right Hopfian", row_commutative_right_hopfian},
      {"mono-uniform-right-hopfian", "pr2.33",
       "S_S mono-uniform implies S right Hopfian",
       row_mono_uniform_right_hopfian},
      {"uniform-implies-mono-uniform", "pr2.33",
       "uniform or co-Hopfian acts are mono-uniform",
       row_uniform_mono_uniform},
      {"fully-invariant-extension", "pr2.2",
       "B fully invariant with B and A/B Hopfian (co-Hopfian) forces A "
       "Hopfian (co-Hopfian)",
       row_fully_invariant_extension},
      {"coproduct-components-hopfian", "pr2.2",
       "a Hopfian (co-Hopfian) coproduct has Hopfian (co-Hopfian) parts",
       row_coproduct_components},
      {"indecomposable-coproduct-iff", "pr2.2",
       "for indecomposable parts, the coproduct is Hopfian (co-Hopfian) "
       "iff both parts are",
       row_indecomposable_coproduct},
      {"rees-quotient-iso-only-zero", "le2.11",
       "A = A/B only for one-element zero subacts B",
       row_le211},
  };
}

}  // namespace

bool SuiteReport::passed() const { return failure_count() == 0; }

long long SuiteReport::failure_count() const {
  long long total = 0;
  for (const SuiteRow& r : rows) {
    total += static_cast<long long>(r.failures.size());
  }
  return total;
}

bool SuiteReport::any_skipped() const {
  for (const SuiteRow& r : rows) {
    if (!r.skipped.empty()) return true;
  }
  return false;
}

Json SuiteReport::to_json(bool include_timing) const {
  Json rows_json = Json::array();
  long long skipped = 0;
  for (const SuiteRow& r : rows) {
    Json row{{"id", r.id},
             {"tag", r.tag},
             {"statement", r.statement},
             {"instances", r.instances},
             {"vacuous", r.vacuous},
             {"failures", r.failures},
             {"skipped", r.skipped}};
    if (include_timing) row["wall_ms"] = r.wall_ms;
    rows_json.push_back(std::move(row));
    if (!r.skipped.empty()) ++skipped;
  }
  return Json{{"schema", 1},
              {"scope", Json{{"max_monoid_order", scope.max_monoid_order},
                             {"max_act_size", scope.max_act_size},
                             {"catalog_only", scope.catalog_only}}},
              {"rows", rows_json},
              {"summary", Json{{"rows", rows.size()},
                               {"failures", failure_count()},
                               {"skipped", skipped},
                               {"passed", passed()}}}};
}

SuiteReport run_suite(const CensusScope& scope, int jobs) {
  const Universe u = build_universe(scope, jobs);
  SuiteReport report;
  report.scope = scope;
  for (const RowSpec& spec : make_rows()) {
    SuiteRow row;
    row.id = spec.id;
    row.tag = spec.tag;
    row.statement = spec.statement;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.fn(row, u);
    } catch (const CapExceeded& e) {
      row.skipped = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hopfit
