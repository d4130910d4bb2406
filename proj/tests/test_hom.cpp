#include <doctest.h>

#include "hopfit/congruence.hpp"
#include "hopfit/hom.hpp"

using namespace hopfit;

TEST_CASE("translations") {
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK(translation(t2, 0).map() == std::vector<Element>{0, 1});  // identity
  CHECK(translation(t2, 1).map() == std::vector<Element>{1, 1});  // lambda_e
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(translation(e7, 1).map() == std::vector<Element>{1, 1, 2});
  CHECK_THROWS_AS(translation(t2, 7), ValidationError);
}

TEST_CASE("equivariance is checked at construction") {
  const FiniteAct t2 = regular_act(t2_monoid());
  CHECK_THROWS_WITH_AS(ActHom(t2, t2, {1, 0}),
                       doctest::Contains("not equivariant"), ValidationError);
}

TEST_CASE("endomorphism counts on the catalog") {
  CHECK(enumerate_endomorphisms(null_act(trivial_monoid(), 2)).size() == 4);
  const auto t2_endos = enumerate_endomorphisms(regular_act(t2_monoid()));
  REQUIRE(t2_endos.size() == 2);
  CHECK(t2_endos[0].map() == std::vector<Element>{0, 1});
  CHECK(t2_endos[1].map() == std::vector<Element>{1, 1});
  // endomorphisms of S_S are translations, one per element
  const FiniteAct e7 = regular_act(e7_monoid());
  const auto e7_endos = enumerate_endomorphisms(e7);
  REQUIRE(e7_endos.size() == 3);
  for (const ActHom& f : e7_endos) {
    CHECK(f.map() == translation(e7, f(0)).map());
  }
}

TEST_CASE("homs from the one-element act pick out zeros") {
  const FiniteAct theta_t2 = one_element_act(t2_monoid());
  const FiniteAct t2 = regular_act(t2_monoid());
  const auto to_t2 = enumerate_homs(theta_t2, t2);
  REQUIRE(to_t2.size() == 1);
  CHECK(to_t2[0].map() == std::vector<Element>{1});
  const FiniteAct theta_e7 = one_element_act(e7_monoid());
  CHECK(enumerate_homs(theta_e7, regular_act(e7_monoid())).empty());
}

TEST_CASE("composition and powers") {
  const FiniteAct t2 = regular_act(t2_monoid());
  const ActHom id = identity_hom(t2);
  CHECK(power(id, 5) == id);
  const ActHom le = translation(t2, 1);
  CHECK(power(le, 2) == le);  // e*e = e
  CHECK(compose(le, le) == le);
  CHECK_THROWS_AS(power(le, 0), ValidationError);
  const FiniteAct theta = one_element_act(t2_monoid());
  const ActHom collapse(t2, theta, {0, 0});
  CHECK_THROWS_AS(power(collapse, 2), ValidationError);
  CHECK_THROWS_AS(compose(collapse, collapse), ValidationError);
}

TEST_CASE("images along a three-step chain") {
  const FiniteAct a = null_act(trivial_monoid(), 3);
  const ActHom f(a, a, {0, 0, 1});
  CHECK(image(f).members() == std::vector<Element>{0, 1});
  CHECK(image(power(f, 2)).members() == std::vector<Element>{0});
  CHECK(!is_injective(f));
  CHECK(!is_surjective(f));
  CHECK(is_injective(identity_hom(a)));
  CHECK(is_surjective(identity_hom(a)));
}

TEST_CASE("trace") {
  const FiniteAct e7 = regular_act(e7_monoid());
  const auto full = trace(e7, e7);
  REQUIRE(full.has_value());
  CHECK(full->members() == std::vector<Element>{0, 1, 2});
  // {a, b} only admits the inclusion, so its trace is itself
  const Subact ab(e7, {1, 2});
  const auto tr = trace(ab.as_act(), e7);
  REQUIRE(tr.has_value());
  CHECK(tr->members() == std::vector<Element>{1, 2});
  // no homomorphism from the one-element act into a zero-less act
  CHECK(!trace(one_element_act(e7_monoid()), e7).has_value());
  // with zeros, the trace of the one-element act is the zero subact
  const FiniteAct t2 = regular_act(t2_monoid());
  const auto tz = trace(one_element_act(t2_monoid()), t2);
  REQUIRE(tz.has_value());
  CHECK(tz->members() == std::vector<Element>{1});
}

TEST_CASE("isomorphism search") {
  const FiniteAct t2 = regular_act(t2_monoid());
  const auto self = find_isomorphism(t2, t2);
  REQUIRE(self.has_value());
  CHECK(self->map() == std::vector<Element>{0, 1});  // lexicographically least
  CHECK(!find_isomorphism(t2, one_element_act(t2_monoid())).has_value());
  // same carrier size over t2 but a different action
  CHECK(!find_isomorphism(t2, null_act(t2_monoid(), 2)).has_value());
  CHECK_THROWS_AS(
      find_isomorphism(t2, null_act(trivial_monoid(), 2)), ValidationError);
}

TEST_CASE("generating sets are small and generate") {
  const FiniteAct e7 = regular_act(e7_monoid());
  CHECK(generating_set(e7) == std::vector<Element>{0});  // 1 generates S_S
  const FiniteAct a = null_act(trivial_monoid(), 3);
  CHECK(generating_set(a).size() == 3);
}

TEST_CASE("enumerated homs are equivariant and deterministic") {
  const FiniteAct a(t2_monoid(), {{0, 0}, {1, 0}, {2, 2}});
  const auto endos = enumerate_endomorphisms(a);
  for (const ActHom& f : endos) {
    for (Element x = 0; x < a.size(); ++x) {
      for (Element s = 0; s < 2; ++s) {
        CHECK(f.map()[a.act(x, s)] == a.act(f(x), s));
      }
    }
  }
  for (std::size_t i = 1; i < endos.size(); ++i) {
    CHECK(endos[i - 1].map() < endos[i].map());
  }
  CHECK(enumerate_endomorphisms(a) == endos);
}
