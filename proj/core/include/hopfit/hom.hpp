#pragma once

#include <optional>
#include <vector>

#include "hopfit/subact.hpp"

namespace hopfit {

// An equivariant map between acts over the same monoid.  Equivariance is
// checked on construction.
class ActHom {
 public:
  ActHom(FiniteAct source, FiniteAct target, std::vector<Element> map);

  const FiniteAct& source() const { return source_; }
  const FiniteAct& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element a) const { return map_[a]; }

  bool operator==(const ActHom& other) const {
    return map_ == other.map_ && source_ == other.source_ &&
           target_ == other.target_;
  }

 private:
  FiniteAct source_;
  FiniteAct target_;
  std::vector<Element> map_;
};

ActHom identity_hom(const FiniteAct& a);

// The translation lambda_a : S_S -> A, s |-> a.s.
ActHom translation(const FiniteAct& a, Element elem);

// f after g.
ActHom compose(const ActHom& f, const ActHom& g);

// n-fold iterate of an endomorphism, n >= 1.
ActHom power(const ActHom& f, int n);

bool is_injective(const ActHom& f);
bool is_surjective(const ActHom& f);

// The image as a subact of the target.
Subact image(const ActHom& f);

// A greedily chosen minimal generating set, in increasing element order.
std::vector<Element> generating_set(const FiniteAct& a);

// All equivariant maps source -> target, found by backtracking over the
// images of a generating set; sorted by map vector.
std::vector<ActHom> enumerate_homs(const FiniteAct& source,
                                   const FiniteAct& target,
                                   int cap = kDefaultEnumCap);

std::vector<ActHom> enumerate_endomorphisms(const FiniteAct& a,
                                            int cap = kDefaultEnumCap);

// Union of phi(B) over all homomorphisms phi : B -> A, as a subact of A.
// Empty result (no homomorphisms at all) comes back as nullopt.
std::optional<Subact> trace(const FiniteAct& b, const FiniteAct& a,
                            int cap = kDefaultEnumCap);

// Lexicographically least equivariant bijection a -> b, if any.
std::optional<ActHom> find_isomorphism(const FiniteAct& a, const FiniteAct& b,
                                       int cap = kDefaultEnumCap);

}  // namespace hopfit
