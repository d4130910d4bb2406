#include "hopfit/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfit {

namespace {

// Applies sigma to a multiplication table: new[sx][sy] = sigma(old[x][y]).
std::vector<Element> relabel_table(const std::vector<std::vector<Element>>& t,
                                   const std::vector<int>& sigma) {
  const int n = static_cast<int>(t.size());
  std::vector<Element> flat(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      flat[sigma[x] * n + sigma[y]] = sigma[t[x][y]];
    }
  }
  return flat;
}

// Least flattened table over relabelings sending the identity to 0.
std::vector<Element> canonical_monoid_table(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (i != m.identity()) rest.push_back(i);
  }
  std::vector<int> perm(rest.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best;
  do {
    std::vector<int> sigma(n);
    sigma[m.identity()] = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      sigma[rest[i]] = 1 + perm[i];
    }
    std::vector<Element> flat = relabel_table(m.table(), sigma);
    if (best.empty() || flat < best) best = std::move(flat);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<Element>> unflatten(const std::vector<Element>& flat,
                                            int rows, int cols) {
  std::vector<std::vector<Element>> table(rows, std::vector<Element>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) table[r][c] = flat[r * cols + c];
  }
  return table;
}

// Least flattened action table over carrier relabelings.
std::vector<Element> canonical_act_table(const FiniteAct& a) {
  const int m = a.size();
  const int n = a.monoid().size();
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Element> best;
  do {
    std::vector<Element> flat(m * n);
    for (int x = 0; x < m; ++x) {
      for (int s = 0; s < n; ++s) {
        flat[sigma[x] * n + s] = sigma[a.act(x, s)];
      }
    }
    if (best.empty() || flat < best) best = std::move(flat);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace

FiniteMonoid canonical_form(const FiniteMonoid& m) {
  return FiniteMonoid(unflatten(canonical_monoid_table(m), m.size(), m.size()),
                      0);
}

FiniteAct canonical_form(const FiniteAct& a) {
  return FiniteAct(
      a.monoid_ptr(),
      unflatten(canonical_act_table(a), a.size(), a.monoid().size()));
}

std::string monoid_key(const FiniteMonoid& m) {
  const auto flat = canonical_monoid_table(m);
  const int n = m.size();
  std::ostringstream os;
  os << n << "/0/";
  for (int r = 0; r < n; ++r) {
    if (r) os << ";";
    for (int c = 0; c < n; ++c) {
      if (c) os << " ";
      os << flat[r * n + c];
    }
  }
  return os.str();
}

std::vector<FiniteMonoid> enumerate_monoids(int order) {
  if (order < 1) {
    throw ValidationError("monoid order must be positive");
  }
  if (order > kMaxMonoidOrderCap) {
    throw CapExceeded("monoid order", order, kMaxMonoidOrderCap,
                      "--max-monoid-order");
  }
  const int n = order;
  // identity pinned at 0, so only the (n-1)^2 lower cells are free
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i) {
    table[0][i] = i;
    table[i][0] = i;
  }
  std::set<std::vector<Element>> canonical;

  auto associative = [&]() {
    for (int x = 1; x < n; ++x) {
      for (int y = 1; y < n; ++y) {
        const Element xy = table[x][y];
        for (int z = 1; z < n; ++z) {
          if (table[xy][z] != table[x][table[y][z]]) return false;
        }
      }
    }
    return true;
  };

  const int cells = (n - 1) * (n - 1);
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      if (associative()) {
        canonical.insert(
            canonical_monoid_table(FiniteMonoid(table, 0)));
      }
      return;
    }
    const int x = 1 + cell / (n - 1);
    const int y = 1 + cell % (n - 1);
    for (Element v = 0; v < n; ++v) {
      table[x][y] = v;
      self(self, cell + 1);
    }
  };
  rec(rec, 0);

  std::vector<FiniteMonoid> out;
  for (const auto& flat : canonical) {
    out.emplace_back(unflatten(flat, n, n), 0);
  }
  return out;
}

std::vector<FiniteAct> enumerate_acts(MonoidPtr m, int size) {
  if (size < 1) {
    throw ValidationError("act size must be positive");
  }
  if (size > kMaxActSizeCap) {
    throw CapExceeded("act size", size, kMaxActSizeCap, "--max-act-size");
  }
  const int n = m->size();
  const Element e = m->identity();
  std::vector<std::vector<Element>> action(size, std::vector<Element>(n, -1));
  for (int a = 0; a < size; ++a) action[a][e] = a;

  // free cells in row-major order, skipping the identity column
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < size; ++a) {
    for (int s = 0; s < n; ++s) {
      if (s != e) cells.emplace_back(a, s);
    }
  }

  // a partial table stays viable iff no fully-assigned compatibility triple
  // is violated; cheap enough at these sizes to recheck after each assignment
  auto consistent = [&]() {
    for (int a = 0; a < size; ++a) {
      for (int s = 0; s < n; ++s) {
        const Element as = action[a][s];
        if (as < 0) continue;
        for (int t = 0; t < n; ++t) {
          const Element lhs = action[as][t];
          const Element rhs = action[a][m->mul(s, t)];
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
        }
      }
    }
    return true;
  };

  std::set<std::vector<Element>> canonical;
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      FiniteAct act(m, action);
      canonical.insert(canonical_act_table(act));
      return;
    }
    const auto [a, s] = cells[cell];
    for (Element v = 0; v < size; ++v) {
      action[a][s] = v;
      if (consistent()) self(self, cell + 1);
    }
    action[a][s] = -1;
  };
  rec(rec, 0);

  std::vector<FiniteAct> out;
  for (const auto& flat : canonical) {
    out.emplace_back(m, unflatten(flat, size, n));
  }
  return out;
}

std::vector<CatalogEntry> catalog_acts() {
  std::vector<CatalogEntry> out;
  const MonoidPtr triv = trivial_monoid();
  out.push_back({"theta", one_element_act(triv)});
  out.push_back({"trivial2", null_act(triv, 2)});
  out.push_back({"chain3", null_act(triv, 3)});
  out.push_back({"t2-regular", regular_act(t2_monoid())});
  out.push_back({"e7-regular", regular_act(e7_monoid())});
  return out;
}

}  // namespace hopfit
