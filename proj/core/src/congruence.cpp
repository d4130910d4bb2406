#include "hopfit/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hopfit {

namespace detail {
std::atomic<bool> corrupt_join_for_tests{false};
}

namespace {

// Relabel block ids by first occurrence; returns the block count.
int canonicalize(std::vector<int>& block_of) {
  std::vector<int> relabel(block_of.size(), -1);
  int next = 0;
  for (int& id : block_of) {
    if (relabel[id] == -1) relabel[id] = next++;
    id = relabel[id];
  }
  return next;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

// Closes a partition under a ~ b => a.s ~ b.s and returns it canonicalized.
std::vector<int> translation_closure(const FiniteAct& a, UnionFind uf) {
  const int m = a.size();
  const int n = a.monoid().size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < m; ++x) {
      for (Element y = x + 1; y < m; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int s = 0; s < n; ++s) {
          if (uf.unite(a.act(x, s), a.act(y, s))) changed = true;
        }
      }
    }
  }
  std::vector<int> block_of(m);
  for (int x = 0; x < m; ++x) block_of[x] = uf.find(x);
  canonicalize(block_of);
  return block_of;
}

}  // namespace

Congruence::Congruence(FiniteAct act, std::vector<int> block_of)
    : act_(std::move(act)), block_of_(std::move(block_of)) {
  const int m = act_.size();
  if (static_cast<int>(block_of_.size()) != m) {
    throw ValidationError("partition has " + std::to_string(block_of_.size()) +
                          " entries, carrier size is " + std::to_string(m));
  }
  for (int id : block_of_) {
    if (id < 0 || id >= m) {
      throw ValidationError("block id " + std::to_string(id) +
                            " out of range");
    }
  }
  block_count_ = canonicalize(block_of_);
  const int n = act_.monoid().size();
  for (Element a = 0; a < m; ++a) {
    for (Element b = a + 1; b < m; ++b) {
      if (block_of_[a] != block_of_[b]) continue;
      for (int s = 0; s < n; ++s) {
        if (block_of_[act_.act(a, s)] != block_of_[act_.act(b, s)]) {
          throw ValidationError(
              "not right compatible at (a,b,s) = (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(s) + "): a*s = " +
              std::to_string(act_.act(a, s)) + " and b*s = " +
              std::to_string(act_.act(b, s)) + " land in different blocks");
        }
      }
    }
  }
}

Congruence Congruence::from_blocks(
    FiniteAct act, const std::vector<std::vector<Element>>& blocks) {
  std::vector<int> block_of(act.size(), -1);
  int id = 0;
  for (const auto& block : blocks) {
    for (Element a : block) {
      if (a < 0 || a >= act.size() || block_of[a] != -1) {
        throw ValidationError("blocks do not form a partition");
      }
      block_of[a] = id;
    }
    ++id;
  }
  for (int v : block_of) {
    if (v == -1) throw ValidationError("blocks do not cover the carrier");
  }
  return Congruence(std::move(act), std::move(block_of));
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out(block_count_);
  for (Element a = 0; a < act_.size(); ++a) out[block_of_[a]].push_back(a);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<int> rep(block_count_, -1);
  for (Element a = 0; a < act_.size(); ++a) {
    const int id = block_of_[a];
    if (rep[id] == -1) rep[id] = a;
    if (other.block_of_[a] != other.block_of_[rep[id]]) return false;
  }
  return true;
}

Congruence diagonal(const FiniteAct& a) {
  std::vector<int> block_of(a.size());
  std::iota(block_of.begin(), block_of.end(), 0);
  return Congruence(a, std::move(block_of));
}

Congruence universal(const FiniteAct& a) {
  return Congruence(a, std::vector<int>(a.size(), 0));
}

Congruence rees(const Subact& b) {
  const FiniteAct& a = b.act();
  std::vector<int> block_of(a.size());
  std::iota(block_of.begin(), block_of.end(), 0);
  const int target = b.members().front();
  for (Element x : b.members()) block_of[x] = target;
  return Congruence(a, std::move(block_of));
}

Congruence kernel(const ActHom& f) {
  std::vector<int> block_of(f.map().begin(), f.map().end());
  return Congruence(f.source(), std::move(block_of));
}

Congruence meet(const Congruence& r, const Congruence& s) {
  if (!(r.act() == s.act())) {
    throw ValidationError("meet of congruences on different acts");
  }
  const int m = r.act().size();
  std::vector<int> block_of(m);
  for (Element a = 0; a < m; ++a) {
    block_of[a] = r.block_of()[a] * m + s.block_of()[a];
  }
  // re-densify before the validating constructor bounds-checks the ids
  std::vector<int> seen(m * m, -1);
  int next = 0;
  for (int& id : block_of) {
    if (seen[id] == -1) seen[id] = next++;
    id = seen[id];
  }
  return Congruence(r.act(), std::move(block_of));
}

Congruence join(const Congruence& r, const Congruence& s) {
  if (!(r.act() == s.act())) {
    throw ValidationError("join of congruences on different acts");
  }
  if (detail::corrupt_join_for_tests.load()) {
    return meet(r, s);
  }
  const int m = r.act().size();
  UnionFind uf(m);
  std::vector<int> first_r(m, -1), first_s(m, -1);
  for (Element a = 0; a < m; ++a) {
    int& fr = first_r[r.block_of()[a]];
    if (fr == -1) fr = a; else uf.unite(fr, a);
    int& fs = first_s[s.block_of()[a]];
    if (fs == -1) fs = a; else uf.unite(fs, a);
  }
  return Congruence(r.act(), translation_closure(r.act(), std::move(uf)));
}

Congruence generated_by(const FiniteAct& a,
                        const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(a.size());
  for (const auto& [x, y] : pairs) {
    ElementIndex cx(x, a.size());
    ElementIndex cy(y, a.size());
    uf.unite(cx, cy);
  }
  return Congruence(a, translation_closure(a, std::move(uf)));
}

std::vector<Congruence> enumerate_congruences(const FiniteAct& a, int cap) {
  const int m = a.size();
  if (m > cap) {
    throw CapExceeded("act size", m, cap, "--max-act-size");
  }
  const int n = a.monoid().size();
  std::vector<Congruence> out;
  std::vector<int> rgs(m, 0);

  auto compatible = [&]() {
    for (Element x = 0; x < m; ++x) {
      for (Element y = x + 1; y < m; ++y) {
        if (rgs[x] != rgs[y]) continue;
        for (int s = 0; s < n; ++s) {
          if (rgs[a.act(x, s)] != rgs[a.act(y, s)]) return false;
        }
      }
    }
    return true;
  };

  // depth-first over restricted growth strings; emitted in string order
  auto rec = [&](auto&& self, int pos, int maxid) -> void {
    if (pos == m) {
      if (compatible()) out.emplace_back(a, rgs);
      return;
    }
    for (int id = 0; id <= maxid + 1; ++id) {
      rgs[pos] = id;
      self(self, pos + 1, std::max(maxid, id));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::pair<FiniteAct, ActHom> quotient_act(const FiniteAct& a,
                                          const Congruence& rho) {
  if (!(rho.act() == a)) {
    throw ValidationError("congruence does not live on this act");
  }
  const int k = rho.block_count();
  const int n = a.monoid().size();
  std::vector<Element> rep(k, -1);
  for (Element x = 0; x < a.size(); ++x) {
    if (rep[rho.block_of()[x]] == -1) rep[rho.block_of()[x]] = x;
  }
  std::vector<std::vector<Element>> action(k, std::vector<Element>(n));
  for (int b = 0; b < k; ++b) {
    for (int s = 0; s < n; ++s) {
      action[b][s] = rho.block_of()[a.act(rep[b], s)];
    }
  }
  FiniteAct q(a.monoid_ptr(), std::move(action));
  std::vector<Element> nat(rho.block_of().begin(), rho.block_of().end());
  ActHom surj(a, q, std::move(nat));
  return {std::move(q), std::move(surj)};
}

}  // namespace hopfit
