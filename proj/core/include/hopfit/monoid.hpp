#pragma once

#include <memory>
#include <vector>

#include "hopfit/errors.hpp"

namespace hopfit {

using Element = int;

// Default guard for the exhaustive enumerations (congruences, homs, subacts,
// isomorphism search).  Carriers above this size are rejected unless the
// caller raises the cap explicitly.
inline constexpr int kDefaultEnumCap = 8;

// Bounds-checked index for values arriving from files or the command line.
struct ElementIndex {
  Element value;

  ElementIndex(long long v, long long bound, const char* what = "element") {
    if (v < 0 || v >= bound) {
      throw ValidationError(std::string(what) + " index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(bound) + ")");
    }
    value = static_cast<Element>(v);
  }

  operator Element() const { return value; }
};

// A finite monoid given by its full multiplication table.  Immutable after
// construction; the constructor checks associativity and the identity law
// and reports the first violated triple.
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::vector<Element>> table, Element identity);

  int size() const { return static_cast<int>(table_.size()); }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[x][y]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  bool is_commutative() const;

  bool operator==(const FiniteMonoid& other) const {
    return identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  std::vector<std::vector<Element>> table_;
  Element identity_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

// Checks the monoid axioms and returns the monoid.  Throws ValidationError
// naming the first violated triple (associativity) or element (identity law).
FiniteMonoid validate_monoid(std::vector<std::vector<Element>> table,
                             Element identity);

MonoidPtr trivial_monoid();

// {1, e} with e*e = e.
MonoidPtr t2_monoid();

// {1, a, b} with x*y = y whenever y is a or b.
MonoidPtr e7_monoid();

}  // namespace hopfit
