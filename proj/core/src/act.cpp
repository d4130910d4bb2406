#include "hopfit/act.hpp"

#include <algorithm>
#include <string>

namespace hopfit {

FiniteAct::FiniteAct(MonoidPtr monoid, std::vector<std::vector<Element>> action)
    : monoid_(std::move(monoid)), action_(std::move(action)) {
  if (!monoid_) {
    throw ValidationError("act has no monoid");
  }
  const int m = static_cast<int>(action_.size());
  const int n = monoid_->size();
  if (m == 0) {
    throw ValidationError("act carrier is empty");
  }
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(action_[a].size()) != n) {
      throw ValidationError("action row " + std::to_string(a) + " has " +
                            std::to_string(action_[a].size()) + " entries, " +
                            "monoid size is " + std::to_string(n));
    }
    for (int s = 0; s < n; ++s) {
      if (action_[a][s] < 0 || action_[a][s] >= m) {
        throw ValidationError("action entry (" + std::to_string(a) + "," +
                              std::to_string(s) + ") = " +
                              std::to_string(action_[a][s]) + " out of range");
      }
    }
  }
  const Element e = monoid_->identity();
  for (int a = 0; a < m; ++a) {
    if (action_[a][e] != a) {
      throw ValidationError("unitality fails at a = " + std::to_string(a) +
                            ": a*e = " + std::to_string(action_[a][e]));
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (action_[action_[a][s]][t] != action_[a][monoid_->mul(s, t)]) {
          throw ValidationError(
              "compatibility fails at (a,s,t) = (" + std::to_string(a) + "," +
              std::to_string(s) + "," + std::to_string(t) + "): (a*s)*t = " +
              std::to_string(action_[action_[a][s]][t]) + ", a*(s*t) = " +
              std::to_string(action_[a][monoid_->mul(s, t)]));
        }
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    bool fixed = true;
    for (int s = 0; s < n; ++s) {
      if (action_[a][s] != a) {
        fixed = false;
        break;
      }
    }
    if (fixed) zeros_.push_back(a);
  }
}

bool FiniteAct::is_zero(Element a) const {
  return std::binary_search(zeros_.begin(), zeros_.end(), a);
}

std::optional<Element> FiniteAct::designated_zero() const {
  if (zeros_.empty()) return std::nullopt;
  return zeros_.front();
}

FiniteAct regular_act(MonoidPtr m) {
  std::vector<std::vector<Element>> action = m->table();
  return FiniteAct(std::move(m), std::move(action));
}

FiniteAct one_element_act(MonoidPtr m) { return null_act(std::move(m), 1); }

FiniteAct null_act(MonoidPtr m, int size) {
  std::vector<std::vector<Element>> action(
      size, std::vector<Element>(m->size()));
  for (int a = 0; a < size; ++a) {
    std::fill(action[a].begin(), action[a].end(), a);
  }
  return FiniteAct(std::move(m), std::move(action));
}

bool is_cyclic(const FiniteAct& a) {
  const int m = a.size();
  const int n = a.monoid().size();
  for (Element g = 0; g < m; ++g) {
    std::vector<bool> hit(m, false);
    int count = 0;
    for (int s = 0; s < n; ++s) {
      const Element v = a.act(g, s);
      if (!hit[v]) {
        hit[v] = true;
        ++count;
      }
    }
    if (count == m) return true;
  }
  return false;
}

}  // namespace hopfit
