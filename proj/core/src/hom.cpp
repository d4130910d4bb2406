#include "hopfit/hom.hpp"

#include <algorithm>
#include <string>

namespace hopfit {

ActHom::ActHom(FiniteAct source, FiniteAct target, std::vector<Element> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)) {
  if (!(source_.monoid() == target_.monoid())) {
    throw ValidationError("hom endpoints live over different monoids");
  }
  if (static_cast<int>(map_.size()) != source_.size()) {
    throw ValidationError("hom map has " + std::to_string(map_.size()) +
                          " entries, source size is " +
                          std::to_string(source_.size()));
  }
  for (Element v : map_) {
    if (v < 0 || v >= target_.size()) {
      throw ValidationError("hom value " + std::to_string(v) +
                            " out of range");
    }
  }
  const int n = source_.monoid().size();
  for (Element a = 0; a < source_.size(); ++a) {
    for (int s = 0; s < n; ++s) {
      if (map_[source_.act(a, s)] != target_.act(map_[a], s)) {
        throw ValidationError("not equivariant at (a,s) = (" +
                              std::to_string(a) + "," + std::to_string(s) +
                              "): f(a*s) = " +
                              std::to_string(map_[source_.act(a, s)]) +
                              ", f(a)*s = " +
                              std::to_string(target_.act(map_[a], s)));
      }
    }
  }
}

ActHom identity_hom(const FiniteAct& a) {
  std::vector<Element> map(a.size());
  for (int i = 0; i < a.size(); ++i) map[i] = i;
  return ActHom(a, a, std::move(map));
}

ActHom translation(const FiniteAct& a, Element elem) {
  ElementIndex checked(elem, a.size(), "act element");
  const FiniteAct source = regular_act(a.monoid_ptr());
  std::vector<Element> map(source.size());
  for (int s = 0; s < source.size(); ++s) map[s] = a.act(checked, s);
  return ActHom(source, a, std::move(map));
}

ActHom compose(const ActHom& f, const ActHom& g) {
  if (!(g.target() == f.source())) {
    throw ValidationError("compose: inner target differs from outer source");
  }
  std::vector<Element> map(g.source().size());
  for (int i = 0; i < g.source().size(); ++i) map[i] = f(g(i));
  return ActHom(g.source(), f.target(), std::move(map));
}

ActHom power(const ActHom& f, int n) {
  if (!(f.source() == f.target())) {
    throw ValidationError("power: not an endomorphism");
  }
  if (n < 1) {
    throw ValidationError("power: exponent must be >= 1");
  }
  ActHom out = f;
  for (int i = 1; i < n; ++i) out = compose(f, out);
  return out;
}

bool is_injective(const ActHom& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (Element v : f.map()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_surjective(const ActHom& f) {
  std::vector<bool> hit(f.target().size(), false);
  int count = 0;
  for (Element v : f.map()) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count == f.target().size();
}

Subact image(const ActHom& f) {
  std::vector<Element> members(f.map());
  return Subact(f.target(), std::move(members));
}

std::vector<Element> generating_set(const FiniteAct& a) {
  const int m = a.size();
  const int n = a.monoid().size();
  std::vector<bool> covered(m, false);
  std::vector<Element> gens;
  for (Element x = 0; x < m; ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    // close the covered set under the action
    std::vector<Element> stack{x};
    covered[x] = true;
    while (!stack.empty()) {
      const Element y = stack.back();
      stack.pop_back();
      for (int s = 0; s < n; ++s) {
        const Element v = a.act(y, s);
        if (!covered[v]) {
          covered[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return gens;
}

namespace {

// Orders every source element as g.s for some generator g; used to propagate
// candidate generator images.
struct Expression {
  Element generator;
  int via;  // monoid element with generator * via = element
};

std::vector<Expression> express_by_generators(const FiniteAct& a,
                                              const std::vector<Element>& gens) {
  const int n = a.monoid().size();
  const Element e = a.monoid().identity();
  std::vector<Expression> expr(a.size(), Expression{-1, -1});
  std::vector<Element> queue;
  for (Element g : gens) {
    expr[g] = {g, e};
    queue.push_back(g);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (int s = 0; s < n; ++s) {
      const Element v = a.act(x, s);
      if (expr[v].generator == -1) {
        expr[v] = {expr[x].generator, a.monoid().mul(expr[x].via, s)};
        queue.push_back(v);
      }
    }
  }
  return expr;
}

}  // namespace

std::vector<ActHom> enumerate_homs(const FiniteAct& source,
                                   const FiniteAct& target, int cap) {
  if (source.size() > cap || target.size() > cap) {
    throw CapExceeded("act size", std::max(source.size(), target.size()), cap,
                      "--max-act-size");
  }
  const std::vector<Element> gens = generating_set(source);
  const auto expr = express_by_generators(source, gens);
  const int m = source.size();
  const int n = source.monoid().size();
  const int k = static_cast<int>(gens.size());

  std::vector<ActHom> out;
  std::vector<Element> choice(k, 0);
  std::vector<Element> map(m);
  while (true) {
    // propagate generator images and verify equivariance
    std::vector<int> gen_index(m, -1);
    for (int i = 0; i < k; ++i) gen_index[gens[i]] = i;
    bool ok = true;
    for (Element x = 0; x < m && ok; ++x) {
      const Expression& ex = expr[x];
      map[x] = target.act(choice[gen_index[ex.generator]], ex.via);
    }
    for (Element x = 0; x < m && ok; ++x) {
      for (int s = 0; s < n; ++s) {
        if (map[source.act(x, s)] != target.act(map[x], s)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(source, target, map);
    // next assignment
    int i = k - 1;
    while (i >= 0 && choice[i] == target.size() - 1) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[i];
  }
  std::sort(out.begin(), out.end(), [](const ActHom& p, const ActHom& q) {
    return p.map() < q.map();
  });
  return out;
}

std::vector<ActHom> enumerate_endomorphisms(const FiniteAct& a, int cap) {
  return enumerate_homs(a, a, cap);
}

std::optional<Subact> trace(const FiniteAct& b, const FiniteAct& a, int cap) {
  const auto homs = enumerate_homs(b, a, cap);
  if (homs.empty()) return std::nullopt;
  std::vector<Element> members;
  for (const ActHom& phi : homs) {
    members.insert(members.end(), phi.map().begin(), phi.map().end());
  }
  return Subact(a, std::move(members));
}

namespace {

bool extend_bijection(const FiniteAct& a, const FiniteAct& b,
                      std::vector<Element>& map, std::vector<bool>& used,
                      Element next) {
  const int m = a.size();
  const int n = a.monoid().size();
  if (next == m) return true;
  for (Element v = 0; v < m; ++v) {
    if (used[v]) continue;
    map[next] = v;
    bool ok = true;
    // check every action constraint both of whose endpoints are now decided
    for (int s = 0; s < n && ok; ++s) {
      const Element xs = a.act(next, s);
      if (xs <= next && map[xs] != b.act(v, s)) ok = false;
    }
    for (Element x = 0; x < next && ok; ++x) {
      for (int s = 0; s < n; ++s) {
        if (a.act(x, s) == next && v != b.act(map[x], s)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      used[v] = true;
      if (extend_bijection(a, b, map, used, next + 1)) return true;
      used[v] = false;
    }
  }
  map[next] = -1;
  return false;
}

}  // namespace

std::optional<ActHom> find_isomorphism(const FiniteAct& a, const FiniteAct& b,
                                       int cap) {
  if (!(a.monoid() == b.monoid())) {
    throw ValidationError("isomorphism search needs acts over one monoid");
  }
  if (a.size() > cap || b.size() > cap) {
    throw CapExceeded("act size", std::max(a.size(), b.size()), cap,
                      "--max-act-size");
  }
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (!extend_bijection(a, b, map, used, 0)) return std::nullopt;
  return ActHom(a, b, std::move(map));
}

}  // namespace hopfit
