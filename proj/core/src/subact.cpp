#include "hopfit/subact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hopfit {

Subact::Subact(FiniteAct act, std::vector<Element> members)
    : act_(std::move(act)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (members_.empty()) {
    throw ValidationError("subact is empty");
  }
  const int m = act_.size();
  const int n = act_.monoid().size();
  for (Element a : members_) {
    if (a < 0 || a >= m) {
      throw ValidationError("subact member " + std::to_string(a) +
                            " out of range");
    }
    for (int s = 0; s < n; ++s) {
      const Element v = act_.act(a, s);
      if (!std::binary_search(members_.begin(), members_.end(), v)) {
        throw ValidationError("subact not closed: " + std::to_string(a) +
                              "*" + std::to_string(s) + " = " +
                              std::to_string(v) + " is outside");
      }
    }
  }
}

bool Subact::contains(Element a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

FiniteAct Subact::as_act() const {
  const int n = act_.monoid().size();
  std::vector<int> index_of(act_.size(), -1);
  for (int i = 0; i < size(); ++i) index_of[members_[i]] = i;
  std::vector<std::vector<Element>> action(size(), std::vector<Element>(n));
  for (int i = 0; i < size(); ++i) {
    for (int s = 0; s < n; ++s) {
      action[i][s] = index_of[act_.act(members_[i], s)];
    }
  }
  return FiniteAct(act_.monoid_ptr(), std::move(action));
}

Subact generated_subact(const FiniteAct& a, const std::vector<Element>& xs) {
  if (xs.empty()) {
    throw ValidationError("generated_subact needs at least one generator");
  }
  const int n = a.monoid().size();
  std::vector<bool> in(a.size(), false);
  std::vector<Element> stack;
  for (Element x : xs) {
    if (x < 0 || x >= a.size()) {
      throw ValidationError("generator " + std::to_string(x) +
                            " out of range");
    }
    if (!in[x]) {
      in[x] = true;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (int s = 0; s < n; ++s) {
      const Element v = a.act(x, s);
      if (!in[v]) {
        in[v] = true;
        stack.push_back(v);
      }
    }
  }
  std::vector<Element> members;
  for (Element x = 0; x < a.size(); ++x) {
    if (in[x]) members.push_back(x);
  }
  return Subact(a, std::move(members));
}

std::vector<Subact> enumerate_subacts(const FiniteAct& a, int cap) {
  const int m = a.size();
  if (m > cap) {
    throw CapExceeded("act size", m, cap, "--max-act-size");
  }
  const int n = a.monoid().size();
  std::vector<Subact> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool closed = true;
    for (int x = 0; x < m && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (int s = 0; s < n; ++s) {
        if (!(mask >> a.act(x, s) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Element> members;
    for (int x = 0; x < m; ++x) {
      if (mask >> x & 1) members.push_back(x);
    }
    out.emplace_back(a, std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const Subact& p, const Subact& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p.members() < q.members();
  });
  return out;
}

FiniteAct coproduct(const FiniteAct& a, const FiniteAct& b) {
  if (!(a.monoid() == b.monoid())) {
    throw ValidationError("coproduct operands live over different monoids");
  }
  const int n = a.monoid().size();
  std::vector<std::vector<Element>> action;
  action.reserve(a.size() + b.size());
  for (int x = 0; x < a.size(); ++x) action.push_back(a.action()[x]);
  for (int x = 0; x < b.size(); ++x) {
    std::vector<Element> row(n);
    for (int s = 0; s < n; ++s) row[s] = a.size() + b.act(x, s);
    action.push_back(std::move(row));
  }
  return FiniteAct(a.monoid_ptr(), std::move(action));
}

FiniteAct coproduct0(const FiniteAct& a, const FiniteAct& b) {
  if (!(a.monoid() == b.monoid())) {
    throw ValidationError("coproduct0 operands live over different monoids");
  }
  const auto za = a.designated_zero();
  const auto zb = b.designated_zero();
  if (!za || !zb) {
    throw ValidationError("coproduct0 needs a zero element in each operand");
  }
  const int n = a.monoid().size();
  // b's elements, skipping its zero, renumbered after a's carrier.
  std::vector<int> embed_b(b.size(), -1);
  int next = a.size();
  for (int x = 0; x < b.size(); ++x) {
    embed_b[x] = (x == *zb) ? *za : next++;
  }
  std::vector<std::vector<Element>> action;
  action.reserve(a.size() + b.size() - 1);
  for (int x = 0; x < a.size(); ++x) action.push_back(a.action()[x]);
  for (int x = 0; x < b.size(); ++x) {
    if (x == *zb) continue;
    std::vector<Element> row(n);
    for (int s = 0; s < n; ++s) row[s] = embed_b[b.act(x, s)];
    action.push_back(std::move(row));
  }
  return FiniteAct(a.monoid_ptr(), std::move(action));
}

std::vector<Subact> decompose_indecomposable(const FiniteAct& a) {
  const int m = a.size();
  const int n = a.monoid().size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < m; ++x) {
    for (int s = 0; s < n; ++s) {
      const int rx = find(x);
      const int ry = find(a.act(x, s));
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  std::vector<std::vector<Element>> groups(m);
  for (int x = 0; x < m; ++x) groups[find(x)].push_back(x);
  std::vector<Subact> out;
  for (int r = 0; r < m; ++r) {
    if (!groups[r].empty()) out.emplace_back(a, std::move(groups[r]));
  }
  return out;
}

}  // namespace hopfit
