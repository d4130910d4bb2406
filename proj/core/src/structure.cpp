#include "hopfit/structure.hpp"

namespace hopfit {

bool is_fully_invariant(const Subact& b, int cap) {
  for (const ActHom& f : enumerate_endomorphisms(b.act(), cap)) {
    for (Element x : b.members()) {
      if (!b.contains(f(x))) return false;
    }
  }
  return true;
}

bool is_essential(const Subact& b, int cap) {
  for (const Congruence& rho : enumerate_congruences(b.act(), cap)) {
    if (rho.is_diagonal()) continue;
    bool meets_diagonally = true;
    for (std::size_t i = 0; i < b.members().size() && meets_diagonally; ++i) {
      for (std::size_t j = i + 1; j < b.members().size(); ++j) {
        if (rho.related(b.members()[i], b.members()[j])) {
          meets_diagonally = false;
          break;
        }
      }
    }
    if (meets_diagonally) return false;
  }
  return true;
}

bool is_uniform(const FiniteAct& a, int cap) {
  const auto zero = a.designated_zero();
  for (const Subact& b : enumerate_subacts(a, cap)) {
    if (zero && b.size() == 1 && b.members().front() == *zero) continue;
    if (!is_essential(b, cap)) return false;
  }
  return true;
}

bool is_mono_uniform(const FiniteAct& a, int cap) {
  for (const ActHom& f : enumerate_endomorphisms(a, cap)) {
    if (!is_injective(f)) continue;
    if (!is_essential(image(f), cap)) return false;
  }
  return true;
}

}  // namespace hopfit
