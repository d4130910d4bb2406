#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfit/verdict.hpp"

namespace hopfit {

// Search budget for the semi-decision procedures: norm bound for element
// enumeration and exponent bound for the chain conditions.
struct Budget {
  int max_norm = 6;
  int max_n = 4;

  void check() const {
    if (max_norm < 1 || max_n < 1) {
      throw ValidationError("budget bounds must be positive");
    }
  }
};

// A structural property of a backend that cannot be established by finite
// search, together with its one-line justification.  These are the only path
// to Holds/Fails verdicts over infinite quantifications.
struct DeclaredFact {
  std::string name;
  std::string justification;
};

// A monoid given by canonical-normal-form string elements.  Equality of
// elements is string equality; enumerate(k) lists every element of norm at
// most k and is monotone in k.
class SymbolicMonoid {
 public:
  virtual ~SymbolicMonoid() = default;

  virtual std::string name() const = 0;
  virtual std::string identity() const = 0;
  virtual bool valid_element(const std::string& x) const = 0;
  virtual std::string multiply(const std::string& x,
                               const std::string& y) const = 0;
  virtual int norm(const std::string& x) const = 0;
  virtual std::vector<std::string> enumerate(int max_norm) const = 0;
  virtual const std::vector<DeclaredFact>& declared_facts() const = 0;

  // Backend arithmetic for the element condition x^n z = x^(n+1) t, when the
  // equation is solvable in closed form.  Default: no knowledge.
  virtual std::optional<Verdict> cohopfian_element_fact(
      const std::string& z, const std::string& x) const;

  const DeclaredFact* fact(const std::string& name) const;
};

// Fact names shared by the procedures below:
//   "finite"                          enumerate(k) is the whole monoid, k >= 1
//   "commutative"
//   "cancellative"                    every element cancels on both sides
//   "only-identity-right-invertible"
std::unique_ptr<SymbolicMonoid> finite_backend(MonoidPtr m);
std::unique_ptr<SymbolicMonoid> nat_add_backend();
std::unique_ptr<SymbolicMonoid> free_backend(int alphabet);
std::unique_ptr<SymbolicMonoid> bicyclic_backend();

// Backend spec strings: "finite:<file>", "nat-add", "free:<k>", "bicyclic".
std::unique_ptr<SymbolicMonoid> make_backend(const std::string& spec);

// Holds with witness y when x.y = 1 for some y within budget; Fails only via
// a declared fact or finite exhaustion; otherwise Unknown.
Verdict right_invertible(const SymbolicMonoid& s, const std::string& x,
                         const Budget& budget);

// Fails with a witness pair (a, b), a != b, x.a = x.b within budget; Holds
// only via a declared fact or finite exhaustion; otherwise Unknown.
Verdict left_cancellative(const SymbolicMonoid& s, const std::string& x,
                          const Budget& budget);

// Right Hopfian: every right invertible element is left cancellative.
// Right co-Hopfian: every left cancellative element is right invertible.
Verdict monoid_right_hopfian(const SymbolicMonoid& s, const Budget& budget);
Verdict monoid_right_cohopfian(const SymbolicMonoid& s, const Budget& budget);

// Some n has no (s, t) with x^(n+1) s = x^(n+1) t but x^n s != x^n t.
Verdict strongly_hopfian_element(const SymbolicMonoid& s, const std::string& x,
                                 const Budget& budget);

// Some n and t satisfy x^n z = x^(n+1) t.
Verdict strongly_cohopfian_element(const SymbolicMonoid& s,
                                   const std::string& z, const std::string& x,
                                   const Budget& budget);

}  // namespace hopfit
