#include <doctest.h>

#include "hopfit/structure.hpp"

using namespace hopfit;

TEST_CASE("generated subacts") {
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(generated_subact(e7, {0, 1, 2}).members() ==
        std::vector<Element>{0, 1, 2});
  CHECK(generated_subact(e7, {1}).members() == std::vector<Element>{1, 2});
  CHECK(generated_subact(e7, {0}).members() == std::vector<Element>{0, 1, 2});
  CHECK_THROWS_AS(generated_subact(e7, {}), ValidationError);
  CHECK_THROWS_AS(generated_subact(e7, {5}), ValidationError);
}

TEST_CASE("subact enumeration") {
  // {a} is not closed (a*b = b), so e7's S_S has exactly {a,b} and itself
  const FiniteAct e7 = regular_act(e7_monoid());
  const auto subs = enumerate_subacts(e7);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].members() == std::vector<Element>{1, 2});
  CHECK(subs[1].members() == std::vector<Element>{0, 1, 2});
  // trivial action: every nonempty subset is closed
  CHECK(enumerate_subacts(null_act(trivial_monoid(), 2)).size() == 3);
  CHECK_THROWS_AS(enumerate_subacts(null_act(trivial_monoid(), 9)),
                  CapExceeded);
}

TEST_CASE("sub-as-act reindexes") {
  const FiniteAct e7 = regular_act(e7_monoid());
  const FiniteAct ab = Subact(e7, {1, 2}).as_act();
  CHECK(ab.size() == 2);
  // inside {a, b}: x*a = a and x*b = b
  CHECK(ab.action() == std::vector<std::vector<Element>>{{0, 0, 1}, {1, 0, 1}});
}

TEST_CASE("fully invariant subacts") {
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(is_fully_invariant(Subact(e7, {0, 1, 2})));
  CHECK(is_fully_invariant(Subact(e7, {1, 2})));  // endos are translations
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(is_fully_invariant(Subact(t2, {1})));  // the zero subact
  const FiniteAct pair = null_act(trivial_monoid(), 2);
  CHECK(!is_fully_invariant(Subact(pair, {0})));  // the swap endo moves it
}

TEST_CASE("essential subacts") {
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(is_essential(Subact(t2, {0, 1})));
  const FiniteAct pair = null_act(trivial_monoid(), 2);
  CHECK(!is_essential(Subact(pair, {0})));  // the universal congruence
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(!is_essential(Subact(e7, {1, 2})));  // ker lambda_a meets it trivially
}

TEST_CASE("uniform and mono-uniform") {
  CHECK(is_uniform(one_element_act(trivial_monoid())));
  CHECK(!is_uniform(null_act(trivial_monoid(), 2)));
  CHECK(!is_uniform(regular_act(e7_monoid())));
  // pigeonhole: injective endomorphisms of a finite act are onto
  CHECK(is_mono_uniform(null_act(trivial_monoid(), 2)));
  CHECK(is_mono_uniform(regular_act(e7_monoid())));
  CHECK(is_mono_uniform(regular_act(t2_monoid())));
}

TEST_CASE("coproducts") {
  const MonoidPtr triv = trivial_monoid();
  const FiniteAct theta = one_element_act(triv);
  CHECK(coproduct(theta, theta).size() == 2);
  CHECK(coproduct0(theta, theta).size() == 1);
  const FiniteAct a = null_act(triv, 3);
  const FiniteAct b = null_act(triv, 2);
  CHECK(coproduct0(a, b).size() == 4);
  const auto iso = find_isomorphism(coproduct0(a, theta), a);
  CHECK(iso.has_value());
  CHECK_THROWS_AS(coproduct(a, null_act(t2_monoid(), 2)), ValidationError);
  // e7's regular act has no zero
  CHECK_THROWS_AS(coproduct0(regular_act(e7_monoid()),
                             one_element_act(e7_monoid())),
                  ValidationError);
}

TEST_CASE("indecomposable decomposition") {
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(decompose_indecomposable(e7).size() == 1);  // 1*a and 1*b connect all
  const FiniteAct pair = null_act(trivial_monoid(), 2);
  const auto parts = decompose_indecomposable(pair);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].members() == std::vector<Element>{0});
  CHECK(parts[1].members() == std::vector<Element>{1});
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(decompose_indecomposable(t2).size() == 1);
}
