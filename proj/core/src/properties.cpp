#include "hopfit/properties.hpp"

#include <algorithm>
#include <set>

namespace hopfit {

namespace {

// Kernels and images of f, f^2, ..., f^(m+1).
struct Chains {
  std::vector<Congruence> kers;
  std::vector<Subact> images;
};

Chains compute_chains(const ActHom& f) {
  const int m = f.source().size();
  Chains c;
  ActHom p = f;
  for (int n = 1; n <= m + 1; ++n) {
    c.kers.push_back(kernel(p));
    c.images.push_back(image(p));
    if (n <= m) p = compose(f, p);
  }
  return c;
}

bool split_at(const Chains& c, int n) {
  const Congruence k_im = rees(c.images[n - 1]);
  return join(c.kers[n - 1], k_im).is_universal() &&
         meet(c.kers[n - 1], k_im).is_diagonal();
}

}  // namespace

StabilizationReport stabilization(const ActHom& f) {
  if (!(f.source() == f.target())) {
    throw ValidationError("stabilization needs an endomorphism");
  }
  const int m = f.source().size();
  const Chains c = compute_chains(f);
  StabilizationReport r{f, 0, 0, -1, {}};
  for (int n = 1; n <= m; ++n) {
    if (c.kers[n - 1] == c.kers[n]) {
      r.ker_index = n;
      break;
    }
  }
  for (int n = 1; n <= m; ++n) {
    if (c.images[n - 1].members() == c.images[n].members()) {
      r.im_index = n;
      break;
    }
  }
  for (int n = 1; n <= m; ++n) {
    if (split_at(c, n)) {
      r.fitting_n = n;
      break;
    }
  }
  for (int n = 0; n <= m; ++n) {
    r.chain_log.push_back(
        {c.kers[n].block_count(), c.images[n].size()});
  }
  return r;
}

Verdict is_hopfian(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  int surjective = 0;
  for (const ActHom& f : endos) {
    if (!is_surjective(f)) continue;
    ++surjective;
    if (!is_injective(f)) {
      return Verdict::fails(Json{{"endo", f.map()}});
    }
  }
  return Verdict::holds(Json{{"endomorphisms", endos.size()},
                             {"surjective_checked", surjective}});
}

Verdict is_cohopfian(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  int injective = 0;
  for (const ActHom& f : endos) {
    if (!is_injective(f)) continue;
    ++injective;
    if (!is_surjective(f)) {
      return Verdict::fails(Json{{"endo", f.map()}});
    }
  }
  return Verdict::holds(
      Json{{"endomorphisms", endos.size()}, {"injective_checked", injective}});
}

namespace {

// The three equivalent conditions for one endomorphism; ker = true checks the
// kernel-chain family, ker = false the image-chain family.
struct ThreeWay {
  bool stationary;  // chain constant from some n through the carrier bound
  bool one_step;    // some n with equality at n, n+1
  bool identity;    // some n with the congruence identity
};

ThreeWay three_way(const Chains& c, int m, bool ker) {
  ThreeWay t{false, false, false};
  for (int n = 1; n <= m && !t.stationary; ++n) {
    bool flat = true;
    for (int k = n; k <= m; ++k) {
      const bool eq = ker ? c.kers[k - 1] == c.kers[k]
                          : c.images[k - 1].members() == c.images[k].members();
      if (!eq) {
        flat = false;
        break;
      }
    }
    t.stationary = flat;
  }
  for (int n = 1; n <= m && !t.one_step; ++n) {
    t.one_step = ker ? c.kers[n - 1] == c.kers[n]
                     : c.images[n - 1].members() == c.images[n].members();
  }
  for (int n = 1; n <= m && !t.identity; ++n) {
    const Congruence k_im = rees(c.images[n - 1]);
    t.identity = ker ? meet(c.kers[n - 1], k_im).is_diagonal()
                     : join(c.kers[n - 1], k_im).is_universal();
  }
  return t;
}

Verdict strongly_verdict(const FiniteAct& a, int cap, bool ker) {
  const auto endos = enumerate_endomorphisms(a, cap);
  const int m = a.size();
  for (const ActHom& f : endos) {
    const Chains c = compute_chains(f);
    const ThreeWay t = three_way(c, m, ker);
    if (t.stationary != t.one_step || t.one_step != t.identity) {
      return Verdict::fails(Json{{"internal_disagreement", true},
                                 {"endo", f.map()},
                                 {"stationary", t.stationary},
                                 {"one_step", t.one_step},
                                 {"congruence_identity", t.identity}});
    }
    if (!t.stationary) {
      return Verdict::fails(Json{{"endo", f.map()}});
    }
  }
  return Verdict::holds(Json{{"endomorphisms", endos.size()},
                             {"routes", "stationary, one-step, identity"}});
}

}  // namespace

RouteAgreement kernel_routes(const ActHom& f) {
  const Chains c = compute_chains(f);
  const ThreeWay t = three_way(c, f.source().size(), true);
  return {t.stationary, t.one_step, t.identity};
}

RouteAgreement image_routes(const ActHom& f) {
  const Chains c = compute_chains(f);
  const ThreeWay t = three_way(c, f.source().size(), false);
  return {t.stationary, t.one_step, t.identity};
}

Verdict is_strongly_hopfian(const FiniteAct& a, int cap) {
  return strongly_verdict(a, cap, true);
}

Verdict is_strongly_cohopfian(const FiniteAct& a, int cap) {
  return strongly_verdict(a, cap, false);
}

Verdict is_fitting(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  Json per_endo = Json::array();
  Verdict direct = Verdict::holds(nullptr);
  for (const ActHom& f : endos) {
    const StabilizationReport r = stabilization(f);
    per_endo.push_back(Json{{"endo", f.map()},
                            {"fitting_n", r.fitting_n},
                            {"ker_index", r.ker_index},
                            {"im_index", r.im_index}});
    if (r.fitting_n < 0 && direct.status == Status::Holds) {
      direct = Verdict::fails(Json{{"endo", f.map()},
                                   {"reason", "no n within carrier bound"}});
    }
  }
  const Verdict sh = is_strongly_hopfian(a, cap);
  const Verdict sch = is_strongly_cohopfian(a, cap);
  for (const Verdict* v : {&sh, &sch}) {
    if (v->status == Status::Fails && v->witness.contains("internal_disagreement")) {
      return *v;
    }
  }
  const bool expected =
      sh.status == Status::Holds && sch.status == Status::Holds;
  if ((direct.status == Status::Holds) != expected) {
    return Verdict::fails(Json{{"internal_disagreement", true},
                               {"direct", to_string(direct.status)},
                               {"strongly_hopfian", to_string(sh.status)},
                               {"strongly_cohopfian", to_string(sch.status)},
                               {"direct_witness", direct.witness}});
  }
  if (direct.status != Status::Holds) return direct;
  return Verdict::holds(Json{{"endomorphisms", endos.size()},
                             {"per_endo", per_endo},
                             {"crosscheck", "matches strongly hopfian and "
                                            "strongly cohopfian"}});
}

Verdict is_dedekind_finite(const FiniteAct& a, int bound, int cap) {
  if (!a.designated_zero()) {
    throw ValidationError("dedekind-finite needs an act with a zero element");
  }
  // |A +0 B| = |A| + |B| - 1 > |A| whenever |B| >= 2, so no such B can be
  // isomorphic to A.  One instance is constructed outright as evidence that
  // the non-shortcut path agrees.
  const FiniteAct b = null_act(a.monoid_ptr(), 2);
  const FiniteAct glued = coproduct0(a, b);
  const auto iso = find_isomorphism(a, glued, std::max(cap, a.size() + 1));
  if (iso.has_value()) {
    return Verdict::fails(Json{{"b_size", 2}, {"iso", iso->map()}});
  }
  return Verdict::holds(
      Json{{"rule", "size"},
           {"detail", "|A +0 B| = |A| + |B| - 1 > |A| for |B| >= 2"},
           {"bound", bound},
           {"spot_check",
            Json{{"b_size", 2}, {"glued_size", glued.size()}, {"iso", false}}}});
}

Verdict is_torsion_free(const FiniteAct& a, bool cancellative_only) {
  const int n = a.monoid().size();
  std::vector<int> candidates;
  for (int s = 0; s < n; ++s) {
    if (cancellative_only) {
      bool right_cancellable = true;
      for (int x = 0; x < n && right_cancellable; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (a.monoid().mul(x, s) == a.monoid().mul(y, s)) {
            right_cancellable = false;
            break;
          }
        }
      }
      if (!right_cancellable) continue;
    }
    candidates.push_back(s);
  }
  long long checked = 0;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = x + 1; y < a.size(); ++y) {
      for (int s : candidates) {
        ++checked;
        if (a.act(x, s) == a.act(y, s)) {
          return Verdict::fails(Json{{"a", x}, {"b", y}, {"s", s}});
        }
      }
    }
  }
  return Verdict::holds(
      Json{{"triples_checked", checked},
           {"mode", cancellative_only ? "cancellative-only" : "all-s"}});
}

Verdict is_quasi_injective(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  long long extended = 0;
  const auto subs = enumerate_subacts(a, cap);
  for (const Subact& b : subs) {
    // all restrictions of endomorphisms to b, for O(1) extension lookups
    std::set<std::vector<Element>> restrictions;
    for (const ActHom& h : endos) {
      std::vector<Element> r(b.size());
      for (int i = 0; i < b.size(); ++i) r[i] = h(b.members()[i]);
      restrictions.insert(std::move(r));
    }
    const FiniteAct b_act = b.as_act();
    for (const ActHom& f : enumerate_homs(b_act, a, cap)) {
      if (!restrictions.count(f.map())) {
        return Verdict::fails(
            Json{{"subact", b.members()}, {"hom", f.map()}});
      }
      ++extended;
    }
  }
  return Verdict::holds(
      Json{{"subacts", subs.size()}, {"homs_extended", extended}});
}

Verdict is_quasi_projective(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  long long pairs = 0;
  const auto cons = enumerate_congruences(a, cap);
  for (const Congruence& rho : cons) {
    const auto [q, nat] = quotient_act(a, rho);
    const auto homs = enumerate_homs(a, q, cap);
    for (const ActHom& g : homs) {
      if (!is_surjective(g)) continue;
      // all composites g o h, so each lift request is a lookup
      std::set<std::vector<Element>> composites;
      for (const ActHom& h : endos) {
        std::vector<Element> c(a.size());
        for (Element x = 0; x < a.size(); ++x) c[x] = g(h(x));
        composites.insert(std::move(c));
      }
      for (const ActHom& f : homs) {
        if (!composites.count(f.map())) {
          return Verdict::fails(Json{{"congruence", rho.blocks()},
                                     {"epi", g.map()},
                                     {"hom", f.map()}});
        }
        ++pairs;
      }
    }
  }
  return Verdict::holds(
      Json{{"congruences", cons.size()}, {"epi_hom_pairs", pairs}});
}

Verdict is_quasi_retractable(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  int surjective = 0;
  for (const ActHom& f : endos) {
    if (!is_surjective(f)) continue;
    ++surjective;
    bool found = false;
    for (const ActHom& g : endos) {
      bool identity = true;
      for (Element x = 0; x < a.size(); ++x) {
        if (f(g(x)) != x) {
          identity = false;
          break;
        }
      }
      if (identity) {
        found = true;
        break;
      }
    }
    if (!found) {
      return Verdict::fails(Json{{"endo", f.map()}});
    }
  }
  return Verdict::holds(Json{{"endomorphisms", endos.size()},
                             {"surjective_checked", surjective}});
}

Verdict is_quasi_coretractable(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  int injective = 0;
  for (const ActHom& f : endos) {
    if (!is_injective(f)) continue;
    ++injective;
    bool found = false;
    for (const ActHom& g : endos) {
      bool identity = true;
      for (Element x = 0; x < a.size(); ++x) {
        if (g(f(x)) != x) {
          identity = false;
          break;
        }
      }
      if (identity) {
        found = true;
        break;
      }
    }
    if (!found) {
      return Verdict::fails(Json{{"endo", f.map()}});
    }
  }
  return Verdict::holds(Json{{"endomorphisms", endos.size()},
                             {"injective_checked", injective}});
}

Verdict is_strongly_duo(const FiniteAct& a, int cap) {
  const auto subs = enumerate_subacts(a, cap);
  for (const Subact& b : subs) {
    const auto tr = trace(b.as_act(), a, cap);
    // the inclusion is always a hom, so the trace is never empty here
    if (!tr || tr->members() != b.members()) {
      return Verdict::fails(
          Json{{"subact", b.members()},
               {"trace", tr ? Json(tr->members()) : Json(nullptr)}});
    }
  }
  return Verdict::holds(Json{{"subacts", subs.size()}});
}

Verdict maps_essential_to_essential(const FiniteAct& a, int cap) {
  const auto endos = enumerate_endomorphisms(a, cap);
  std::vector<Subact> essential;
  for (const Subact& b : enumerate_subacts(a, cap)) {
    if (is_essential(b, cap)) essential.push_back(b);
  }
  long long checked = 0;
  for (const ActHom& f : endos) {
    if (!is_injective(f)) continue;
    for (const Subact& b : essential) {
      std::vector<Element> mapped;
      mapped.reserve(b.size());
      for (Element x : b.members()) mapped.push_back(f(x));
      ++checked;
      if (!is_essential(Subact(a, std::move(mapped)), cap)) {
        return Verdict::fails(
            Json{{"endo", f.map()}, {"subact", b.members()}});
      }
    }
  }
  return Verdict::holds(
      Json{{"essential_subacts", essential.size()}, {"images_checked", checked}});
}

}  // namespace hopfit
