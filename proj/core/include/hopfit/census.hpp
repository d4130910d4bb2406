#pragma once

#include <string>
#include <vector>

#include "hopfit/act.hpp"

namespace hopfit {

inline constexpr int kMaxMonoidOrderCap = 4;
inline constexpr int kMaxActSizeCap = 5;

struct CensusScope {
  int max_monoid_order = 3;
  int max_act_size = 4;
  bool catalog_only = false;

  void check() const {
    if (max_monoid_order < 1 || max_act_size < 1) {
      throw ValidationError("census bounds must be positive");
    }
    if (max_monoid_order > kMaxMonoidOrderCap) {
      throw CapExceeded("monoid order", max_monoid_order, kMaxMonoidOrderCap,
                        "--max-monoid-order");
    }
    if (max_act_size > kMaxActSizeCap) {
      throw CapExceeded("act size", max_act_size, kMaxActSizeCap,
                        "--max-act-size");
    }
  }
};

// All monoids of the given order up to isomorphism, identity at index 0,
// each table the lexicographically least over relabelings fixing the
// identity.  Output sorted by table.
std::vector<FiniteMonoid> enumerate_monoids(int order);

// All acts of the given size over m up to act isomorphism, each table the
// lexicographically least over carrier relabelings.  Output sorted by table.
std::vector<FiniteAct> enumerate_acts(MonoidPtr m, int size);

// Lexicographic canonicalizers; enumeration outputs are fixpoints.
FiniteMonoid canonical_form(const FiniteMonoid& m);
FiniteAct canonical_form(const FiniteAct& a);

// "n/0/r00 r01 ...;r10 ..." for the canonical table; matches the key format
// of tools/naive_census.py.
std::string monoid_key(const FiniteMonoid& m);

// The named small instances used throughout the tests and the catalog scope.
struct CatalogEntry {
  std::string name;
  FiniteAct act;
};
std::vector<CatalogEntry> catalog_acts();

}  // namespace hopfit
