#pragma once

#include <vector>

#include "hopfit/act.hpp"

namespace hopfit {

// A nonempty action-closed subset of an act's carrier.  Members are kept
// sorted; closure is checked on construction.
class Subact {
 public:
  Subact(FiniteAct act, std::vector<Element> members);

  const FiniteAct& act() const { return act_; }
  const std::vector<Element>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Element a) const;

  // The subact as a standalone act; carrier index i corresponds to
  // members()[i] in the parent.
  FiniteAct as_act() const;

  bool operator==(const Subact& other) const {
    return members_ == other.members_ && act_ == other.act_;
  }

 private:
  FiniteAct act_;
  std::vector<Element> members_;
};

// Least closed superset of xs.
Subact generated_subact(const FiniteAct& a, const std::vector<Element>& xs);

// Every nonempty action-closed subset, ordered by (size, members).
std::vector<Subact> enumerate_subacts(const FiniteAct& a,
                                      int cap = kDefaultEnumCap);

// Disjoint union: elements of a keep their indices, elements of b follow.
FiniteAct coproduct(const FiniteAct& a, const FiniteAct& b);

// Disjoint union with the designated zeros identified.  Elements of a keep
// their indices; non-zero elements of b follow in increasing order, and b's
// designated zero maps to a's.
FiniteAct coproduct0(const FiniteAct& a, const FiniteAct& b);

// Maximal connected components under a ~ a.s; each is an indecomposable
// subact and the act is their coproduct.  Ordered by least member.
std::vector<Subact> decompose_indecomposable(const FiniteAct& a);

}  // namespace hopfit
