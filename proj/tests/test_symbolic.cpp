#include <doctest.h>

#include "hopfit/properties.hpp"
#include "hopfit/symbolic.hpp"

using namespace hopfit;

TEST_CASE("budget validation") {
  const auto s = nat_add_backend();
  CHECK_THROWS_AS(right_invertible(*s, "1", Budget{0, 1}), ValidationError);
  CHECK_THROWS_AS(right_invertible(*s, "1", Budget{1, 0}), ValidationError);
  CHECK_THROWS_AS(right_invertible(*s, "x", Budget{1, 1}), ValidationError);
}

TEST_CASE("bicyclic normal forms multiply by the rewriting rule") {
  const auto s = bicyclic_backend();
  CHECK(s->multiply("b", "c") == "1");
  CHECK(s->multiply("c", "b") == "cb");
  CHECK(s->multiply("b", "cb") == "b");
  CHECK(s->multiply("bb", "ccb") == "b");
  CHECK(s->multiply("cbb", "cb") == "cbb");
  CHECK(s->norm("ccb") == 3);
  CHECK(s->valid_element("1"));
  CHECK(!s->valid_element("bc"));
  // associativity spot-check over all norm <= 4 triples
  const auto elems = s->enumerate(4);
  CHECK(elems.size() == 15);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      for (const auto& z : elems) {
        CHECK(s->multiply(s->multiply(x, y), z) ==
              s->multiply(x, s->multiply(y, z)));
      }
    }
  }
}

TEST_CASE("right invertibility") {
  const auto bi = bicyclic_backend();
  const Budget budget{2, 2};
  const Verdict vb = right_invertible(*bi, "b", budget);
  REQUIRE(vb.status == Status::Holds);
  CHECK(vb.witness["y"] == "c");
  CHECK(right_invertible(*bi, "c", budget).status == Status::Unknown);

  const auto nat = nat_add_backend();
  CHECK(right_invertible(*nat, "0", budget).status == Status::Holds);
  const Verdict v1 = right_invertible(*nat, "1", budget);
  REQUIRE(v1.status == Status::Fails);
  CHECK(v1.certificate.contains("fact"));
}

TEST_CASE("left cancellativity") {
  const auto bi = bicyclic_backend();
  const Verdict vb = left_cancellative(*bi, "b", Budget{2, 2});
  REQUIRE(vb.status == Status::Fails);
  // b * cb = b * 1 = b
  CHECK(vb.witness["a"] == "1");
  CHECK(vb.witness["b"] == "cb");
  CHECK(left_cancellative(*bi, "c", Budget{3, 2}).status == Status::Unknown);
  // the identity cancels in any monoid, facts or not
  CHECK(left_cancellative(*bi, "1", Budget{2, 2}).status == Status::Holds);

  const auto nat = nat_add_backend();
  CHECK(left_cancellative(*nat, "3", Budget{2, 2}).status == Status::Holds);

  // exhaustive proof on a finite backend
  const auto fin = finite_backend(t2_monoid());
  CHECK(left_cancellative(*fin, "0", Budget{1, 1}).status == Status::Holds);
  CHECK(left_cancellative(*fin, "1", Budget{1, 1}).status == Status::Fails);
}

TEST_CASE("right hopficity of the catalog backends") {
  const Budget budget{3, 3};
  const Verdict bi = monoid_right_hopfian(*bicyclic_backend(), budget);
  REQUIRE(bi.status == Status::Fails);
  CHECK(bi.witness["x"] == "b");
  CHECK(bi.witness["right_inverse"] == "c");

  const Verdict nat = monoid_right_hopfian(*nat_add_backend(), budget);
  REQUIRE(nat.status == Status::Holds);
  CHECK(nat.certificate["rule"] == "commutative monoids are right hopfian");

  CHECK(monoid_right_hopfian(*free_backend(2), budget).status ==
        Status::Holds);
}

TEST_CASE("right co-hopficity of the catalog backends") {
  const Budget budget{3, 3};
  const Verdict nat = monoid_right_cohopfian(*nat_add_backend(), budget);
  REQUIRE(nat.status == Status::Fails);
  CHECK(nat.witness["x"] == "1");

  const Verdict fr = monoid_right_cohopfian(*free_backend(2), budget);
  REQUIRE(fr.status == Status::Fails);
  CHECK(fr.witness["x"] == "a");

  // bicyclic declares no cancellativity facts, so nothing resolves
  CHECK(monoid_right_cohopfian(*bicyclic_backend(), budget).status ==
        Status::Unknown);
}

TEST_CASE("strongly hopfian element condition") {
  const Budget budget{5, 3};
  const auto bi = bicyclic_backend();
  CHECK(strongly_hopfian_element(*bi, "1", budget).status == Status::Holds);
  const Verdict vb = strongly_hopfian_element(*bi, "b", budget);
  REQUIRE(vb.status == Status::Fails);
  REQUIRE(vb.witness.size() == 3);  // one violation per n
  for (const Json& item : vb.witness) {
    const int n = item["n"];
    std::string xn = "1";
    for (int i = 0; i < n; ++i) xn = bi->multiply(xn, "b");
    const std::string xn1 = bi->multiply(xn, "b");
    const std::string s = item["s"], t = item["t"];
    CHECK(bi->multiply(xn1, s) == bi->multiply(xn1, t));
    CHECK(bi->multiply(xn, s) != bi->multiply(xn, t));
  }
  // cancellative backends resolve by rule
  CHECK(strongly_hopfian_element(*nat_add_backend(), "2", budget).status ==
        Status::Holds);
  CHECK(strongly_hopfian_element(*free_backend(2), "ab", budget).status ==
        Status::Holds);
}

TEST_CASE("strongly cohopfian element condition") {
  const Budget budget{6, 4};
  const auto bi = bicyclic_backend();
  const Verdict v1 = strongly_cohopfian_element(*bi, "cb", "1", budget);
  REQUIRE(v1.status == Status::Holds);
  CHECK(v1.witness["t"] == "cb");
  // b^n z = b^(n+1) t is solved by t = c^(n+1) b^n z
  const Verdict vb = strongly_cohopfian_element(*bi, "c", "b", budget);
  REQUIRE(vb.status == Status::Holds);
  {
    const int n = vb.witness["n"];
    std::string xn = "1";
    for (int i = 0; i < n; ++i) xn = bi->multiply(xn, "b");
    CHECK(bi->multiply(xn, "c") ==
          bi->multiply(bi->multiply(xn, "b"), vb.witness["t"]));
  }
  // c^n never lands in c^(n+1) S, and no fact decides it
  CHECK(strongly_cohopfian_element(*bi, "1", "c", budget).status ==
        Status::Unknown);

  const auto nat = nat_add_backend();
  const Verdict nv = strongly_cohopfian_element(*nat, "5", "2", budget);
  REQUIRE(nv.status == Status::Holds);
  CHECK(nv.witness["t"] == "3");
  CHECK(strongly_cohopfian_element(*nat, "0", "1", budget).status ==
        Status::Fails);

  const auto fr = free_backend(2);
  CHECK(strongly_cohopfian_element(*fr, "ab", "a", budget).status ==
        Status::Holds);
  CHECK(strongly_cohopfian_element(*fr, "ba", "a", budget).status ==
        Status::Fails);
}

TEST_CASE("finite backend agrees with the endomorphism route") {
  for (const MonoidPtr& m : {trivial_monoid(), t2_monoid(), e7_monoid()}) {
    const auto fin = finite_backend(m);
    const Budget budget{1, m->size() + 1};
    const FiniteAct reg = regular_act(m);
    CHECK((monoid_right_hopfian(*fin, budget).status == Status::Holds) ==
          (is_hopfian(reg).status == Status::Holds));
    CHECK((monoid_right_cohopfian(*fin, budget).status == Status::Holds) ==
          (is_cohopfian(reg).status == Status::Holds));
    bool element_condition = true;
    for (int z = 0; z < m->size(); ++z) {
      for (int x = 0; x < m->size(); ++x) {
        element_condition &=
            strongly_cohopfian_element(*fin, std::to_string(z),
                                       std::to_string(x), budget)
                .status == Status::Holds;
      }
    }
    CHECK(element_condition ==
          (is_strongly_cohopfian(reg).status == Status::Holds));
  }
}

TEST_CASE("budget monotonicity on the catalog probes") {
  const std::vector<Budget> budgets = {{2, 1}, {4, 2}, {6, 4}};
  for (const char* name : {"bicyclic", "nat-add", "free:2"}) {
    const auto s = make_backend(name);
    Status hop = Status::Unknown;
    Status cohop = Status::Unknown;
    for (const Budget& b : budgets) {
      const Status h = monoid_right_hopfian(*s, b).status;
      const Status c = monoid_right_cohopfian(*s, b).status;
      if (hop != Status::Unknown && h != Status::Unknown) CHECK(h == hop);
      if (cohop != Status::Unknown && c != Status::Unknown) CHECK(c == cohop);
      if (h != Status::Unknown) hop = h;
      if (c != Status::Unknown) cohop = c;
    }
  }
}

TEST_CASE("backend construction and parsing") {
  CHECK(make_backend("nat-add")->name() == "nat-add");
  CHECK(make_backend("bicyclic")->identity() == "1");
  CHECK(make_backend("free:3")->multiply("ab", "c") == "abc");
  CHECK_THROWS_AS(make_backend("pancake"), ValidationError);
  CHECK_THROWS_AS(free_backend(0), ValidationError);
  const auto fr = free_backend(2);
  CHECK(fr->enumerate(2) ==
        std::vector<std::string>{"1", "a", "b", "aa", "ab", "ba", "bb"});
}
