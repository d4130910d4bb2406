#pragma once

#include <atomic>
#include <utility>
#include <vector>

#include "hopfit/hom.hpp"
#include "hopfit/subact.hpp"

namespace hopfit {

// An action-compatible partition of an act's carrier.  Stored as a
// restricted-growth string: blocks are numbered by first occurrence, so the
// representative of each block is its least member and equal partitions have
// equal vectors.  Compatibility is checked on construction.
class Congruence {
 public:
  Congruence(FiniteAct act, std::vector<int> block_of);

  static Congruence from_blocks(FiniteAct act,
                                const std::vector<std::vector<Element>>& blocks);

  const FiniteAct& act() const { return act_; }
  const std::vector<int>& block_of() const { return block_of_; }
  int block_count() const { return block_count_; }
  std::vector<std::vector<Element>> blocks() const;

  bool related(Element a, Element b) const {
    return block_of_[a] == block_of_[b];
  }
  bool is_diagonal() const { return block_count_ == act_.size(); }
  bool is_universal() const { return block_count_ == 1; }

  // Every class of this congruence contained in a class of `other`.
  bool refines(const Congruence& other) const;

  bool operator==(const Congruence& other) const {
    return block_of_ == other.block_of_ && act_ == other.act_;
  }

 private:
  FiniteAct act_;
  std::vector<int> block_of_;
  int block_count_ = 0;
};

Congruence diagonal(const FiniteAct& a);
Congruence universal(const FiniteAct& a);

// The Rees congruence: one block is the subact, everything else singleton.
Congruence rees(const Subact& b);

// Preimage classes of f as a congruence on the source.
Congruence kernel(const ActHom& f);

Congruence meet(const Congruence& r, const Congruence& s);

// Least congruence containing both: union-find merge of the two partitions
// followed by translation closure.
Congruence join(const Congruence& r, const Congruence& s);

// Least congruence relating every given pair.
Congruence generated_by(const FiniteAct& a,
                        const std::vector<std::pair<Element, Element>>& pairs);

// Every congruence on a: restricted-growth-string partition enumeration with
// a compatibility filter.  Ordered by block string.
std::vector<Congruence> enumerate_congruences(const FiniteAct& a,
                                              int cap = kDefaultEnumCap);

// The quotient act together with the natural surjection; the kernel of the
// returned surjection is exactly rho.
std::pair<FiniteAct, ActHom> quotient_act(const FiniteAct& a,
                                          const Congruence& rho);

namespace detail {
// Suite mutation hook: when set, join() drops its closure step.  Used by the
// harness tests to prove a seeded bug surfaces as a proposition failure.
extern std::atomic<bool> corrupt_join_for_tests;
}  // namespace detail

}  // namespace hopfit
