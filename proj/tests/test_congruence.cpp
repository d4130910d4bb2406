#include <doctest.h>

#include <random>

#include "hopfit/congruence.hpp"

using namespace hopfit;

namespace {

// small random acts over t2 for the property-style checks: a random
// idempotent map is exactly a valid t2 action
FiniteAct random_t2_act(std::mt19937& rng, int size) {
  std::uniform_int_distribution<int> pick(0, size - 1);
  while (true) {
    std::vector<std::vector<Element>> action(size, std::vector<Element>(2));
    for (int a = 0; a < size; ++a) {
      action[a][0] = a;
      action[a][1] = pick(rng);
    }
    bool idempotent = true;
    for (int a = 0; a < size; ++a) {
      if (action[action[a][1]][1] != action[a][1]) {
        idempotent = false;
        break;
      }
    }
    if (idempotent) return FiniteAct(t2_monoid(), std::move(action));
  }
}

}  // namespace

TEST_CASE("diagonal and universal block counts") {
  const FiniteAct theta = one_element_act(trivial_monoid());
  CHECK(diagonal(theta) == universal(theta));
  const FiniteAct a = null_act(trivial_monoid(), 3);
  CHECK(diagonal(a).block_count() == 3);
  CHECK(universal(a).block_count() == 1);
}

TEST_CASE("rees congruence cases") {
  const FiniteAct t2 = regular_act(t2_monoid());
  // singleton zero subact collapses to the diagonal
  CHECK(rees(Subact(t2, {1})) == diagonal(t2));
  CHECK(rees(Subact(t2, {0, 1})) == universal(t2));
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(rees(Subact(e7, {1, 2})).blocks() ==
        std::vector<std::vector<Element>>{{0}, {1, 2}});
}

TEST_CASE("subact closure is enforced by rees input type") {
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK_THROWS_AS(Subact(e7, {1}), ValidationError);  // a*b = b escapes
}

TEST_CASE("kernels") {
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(kernel(identity_hom(t2)) == diagonal(t2));
  CHECK(kernel(translation(t2, 1)) == universal(t2));  // lambda_e collapses
  const FiniteAct chain = null_act(trivial_monoid(), 3);
  const ActHom to_zero(chain, chain, {0, 0, 0});
  CHECK(kernel(to_zero) == universal(chain));
}

TEST_CASE("join and meet on a three-element trivial act") {
  const FiniteAct a = null_act(trivial_monoid(), 3);
  const Congruence rho = Congruence::from_blocks(a, {{0, 1}, {2}});
  const Congruence sigma = Congruence::from_blocks(a, {{1, 2}, {0}});
  CHECK(join(rho, sigma) == universal(a));  // chase 0 ~ 1 ~ 2
  CHECK(meet(rho, sigma) == diagonal(a));
  CHECK(join(rho, diagonal(a)) == rho);
  CHECK(meet(rho, universal(a)) == rho);
}

TEST_CASE("join and meet reject mismatched acts") {
  const FiniteAct a = null_act(trivial_monoid(), 3);
  const FiniteAct b = null_act(trivial_monoid(), 2);
  CHECK_THROWS_AS(join(diagonal(a), diagonal(b)), ValidationError);
  CHECK_THROWS_AS(meet(diagonal(a), diagonal(b)), ValidationError);
}

TEST_CASE("generated_by") {
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(generated_by(t2, {}) == diagonal(t2));
  CHECK(generated_by(t2, {{0, 1}}) == universal(t2));
  const FiniteAct a = null_act(trivial_monoid(), 3);
  CHECK(generated_by(a, {{0, 1}, {1, 2}, {0, 2}}) == universal(a));
  CHECK(generated_by(a, {{2, 0}}) ==
        Congruence::from_blocks(a, {{0, 2}, {1}}));
}

TEST_CASE("non-congruence partitions are rejected with a witness pair") {
  // e sends 0,1,2 to 0,0,2; relating 1 and 2 breaks under s = e
  const FiniteAct a(t2_monoid(), {{0, 0}, {1, 0}, {2, 2}});
  CHECK_THROWS_WITH_AS(Congruence::from_blocks(a, {{0}, {1, 2}}),
                       doctest::Contains("not right compatible"),
                       ValidationError);
}

TEST_CASE("enumerate_congruences on the catalog") {
  CHECK(enumerate_congruences(one_element_act(trivial_monoid())).size() == 1);
  CHECK(enumerate_congruences(null_act(trivial_monoid(), 2)).size() == 2);
  CHECK(enumerate_congruences(regular_act(t2_monoid())).size() == 2);
  // trivial action: every partition is compatible, Bell(3) = 5
  CHECK(enumerate_congruences(null_act(trivial_monoid(), 3)).size() == 5);
}

TEST_CASE("enumeration cap guard") {
  const FiniteAct big = null_act(trivial_monoid(), 9);
  CHECK_THROWS_AS(enumerate_congruences(big), CapExceeded);
  CHECK(enumerate_congruences(big, 9).size() > 0);
}

TEST_CASE("quotient-kernel roundtrip and join oracle on random acts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const FiniteAct a = random_t2_act(rng, 4);
    const auto cons = enumerate_congruences(a);
    for (const Congruence& rho : cons) {
      CHECK(kernel(quotient_act(a, rho).second) == rho);
    }
    for (const Congruence& rho : cons) {
      for (const Congruence& sigma : cons) {
        const Congruence j = join(rho, sigma);
        // brute-force least upper bound over the enumerated lattice
        const Congruence* least = nullptr;
        for (const Congruence& tau : cons) {
          if (!rho.refines(tau) || !sigma.refines(tau)) continue;
          if (!least || tau.refines(*least)) least = &tau;
        }
        REQUIRE(least != nullptr);
        CHECK(j == *least);
      }
    }
  }
}

TEST_CASE("corrupting join is visible and reversible") {
  const FiniteAct a = null_act(trivial_monoid(), 3);
  const Congruence rho = Congruence::from_blocks(a, {{0, 1}, {2}});
  const Congruence sigma = Congruence::from_blocks(a, {{1, 2}, {0}});
  detail::corrupt_join_for_tests = true;
  CHECK(join(rho, sigma) == diagonal(a));  // degraded to the meet
  detail::corrupt_join_for_tests = false;
  CHECK(join(rho, sigma) == universal(a));
}
