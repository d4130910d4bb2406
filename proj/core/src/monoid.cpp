#include "hopfit/monoid.hpp"

#include <string>

namespace hopfit {

FiniteMonoid::FiniteMonoid(std::vector<std::vector<Element>> table,
                           Element identity)
    : table_(std::move(table)), identity_(identity) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) {
    throw ValidationError("monoid table is empty");
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table_[x].size()) != n) {
      throw ValidationError("monoid table is not square: row " +
                            std::to_string(x) + " has " +
                            std::to_string(table_[x].size()) + " entries");
    }
    for (int y = 0; y < n; ++y) {
      if (table_[x][y] < 0 || table_[x][y] >= n) {
        throw ValidationError("monoid table entry (" + std::to_string(x) +
                              "," + std::to_string(y) + ") = " +
                              std::to_string(table_[x][y]) + " out of range");
      }
    }
  }
  if (identity_ < 0 || identity_ >= n) {
    throw ValidationError("identity index " + std::to_string(identity_) +
                          " out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (table_[identity_][x] != x || table_[x][identity_] != x) {
      throw ValidationError("identity law fails at x = " + std::to_string(x) +
                            ": e*x = " + std::to_string(table_[identity_][x]) +
                            ", x*e = " + std::to_string(table_[x][identity_]));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element xy = table_[x][y];
      for (int z = 0; z < n; ++z) {
        if (table_[xy][z] != table_[x][table_[y][z]]) {
          throw ValidationError(
              "associativity fails at (x,y,z) = (" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) + "): (x*y)*z = " +
              std::to_string(table_[xy][z]) + ", x*(y*z) = " +
              std::to_string(table_[x][table_[y][z]]));
        }
      }
    }
  }
}

bool FiniteMonoid::is_commutative() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (table_[x][y] != table_[y][x]) return false;
    }
  }
  return true;
}

FiniteMonoid validate_monoid(std::vector<std::vector<Element>> table,
                             Element identity) {
  return FiniteMonoid(std::move(table), identity);
}

MonoidPtr trivial_monoid() {
  return std::make_shared<const FiniteMonoid>(
      std::vector<std::vector<Element>>{{0}}, 0);
}

MonoidPtr t2_monoid() {
  return std::make_shared<const FiniteMonoid>(
      std::vector<std::vector<Element>>{{0, 1}, {1, 1}}, 0);
}

MonoidPtr e7_monoid() {
  return std::make_shared<const FiniteMonoid>(
      std::vector<std::vector<Element>>{{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0);
}

}  // namespace hopfit
