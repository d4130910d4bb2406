#pragma once

#include "hopfit/congruence.hpp"

namespace hopfit {

// f(B) <= B for every endomorphism f of the ambient act.
bool is_fully_invariant(const Subact& b, int cap = kDefaultEnumCap);

// No congruence other than the diagonal meets B x B diagonally.  Equivalent
// to the map-based definition: a hom out of A injective on B is injective,
// since every such hom's kernel is a congruence and every congruence is the
// kernel of its natural map.
bool is_essential(const Subact& b, int cap = kDefaultEnumCap);

// Every subact other than the designated zero's singleton is essential; for
// acts with no zero, every subact must be essential.
bool is_uniform(const FiniteAct& a, int cap = kDefaultEnumCap);

// Every injective endomorphism has essential image.
bool is_mono_uniform(const FiniteAct& a, int cap = kDefaultEnumCap);

}  // namespace hopfit
