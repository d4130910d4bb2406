#pragma once

#include <optional>
#include <vector>

#include "hopfit/monoid.hpp"

namespace hopfit {

// A finite right act over a finite monoid, given by its full action table
// (action[a][s] = a.s).  Unitality and compatibility are checked on
// construction; the zero elements are derived once and cached.
class FiniteAct {
 public:
  FiniteAct(MonoidPtr monoid, std::vector<std::vector<Element>> action);

  int size() const { return static_cast<int>(action_.size()); }
  const FiniteMonoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }
  Element act(Element a, Element s) const { return action_[a][s]; }
  const std::vector<std::vector<Element>>& action() const { return action_; }

  // Elements fixed by every monoid element, in increasing order.
  const std::vector<Element>& zeros() const { return zeros_; }
  bool is_zero(Element a) const;

  // Lowest-index zero, if any; the zero used by the Act-with-zero operations.
  std::optional<Element> designated_zero() const;

  // Structural equality: same monoid table and same action table.
  bool operator==(const FiniteAct& other) const {
    return action_ == other.action_ &&
           (monoid_ == other.monoid_ || *monoid_ == *other.monoid_);
  }

 private:
  MonoidPtr monoid_;
  std::vector<std::vector<Element>> action_;
  std::vector<Element> zeros_;
};

// The right regular act S_S: carrier = monoid elements, action = multiplication.
FiniteAct regular_act(MonoidPtr m);

// The one-element act over m.
FiniteAct one_element_act(MonoidPtr m);

// `size` elements all fixed by every monoid element.
FiniteAct null_act(MonoidPtr m, int size);

// True when some element generates the whole act.
bool is_cyclic(const FiniteAct& a);

}  // namespace hopfit
