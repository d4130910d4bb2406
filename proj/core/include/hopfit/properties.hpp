#pragma once

#include "hopfit/structure.hpp"
#include "hopfit/verdict.hpp"

namespace hopfit {

// Chain data for one endomorphism.  The kernel chain ascends and the image
// chain descends, so both indices are at most the carrier size; fitting_n is
// the least n at which the kernel/image congruence pair splits the act
// (join universal, meet diagonal).
struct StabilizationReport {
  ActHom endo;
  int ker_index = 0;
  int im_index = 0;
  int fitting_n = -1;  // -1 if no n within the carrier bound satisfies both

  struct Step {
    int ker_blocks;
    int image_size;
  };
  std::vector<Step> chain_log;  // entry i describes f^(i+1)
};

StabilizationReport stabilization(const ActHom& f);

// Per-endomorphism verdicts of the three equivalent chain conditions, for
// the cross-validation harness.  kernel_routes: chain stationarity /
// one-step kernel equality / meet identity.  image_routes: the image-chain
// duals with the join identity.
struct RouteAgreement {
  bool stationary;
  bool one_step;
  bool identity;

  bool agree() const { return stationary == one_step && one_step == identity; }
};
RouteAgreement kernel_routes(const ActHom& f);
RouteAgreement image_routes(const ActHom& f);

// Every surjective (injective) endomorphism is bijective.
Verdict is_hopfian(const FiniteAct& a, int cap = kDefaultEnumCap);
Verdict is_cohopfian(const FiniteAct& a, int cap = kDefaultEnumCap);

// Each checks its three equivalent conditions independently (chain
// stationarity, single-step equality at some n, and the congruence identity)
// and fails with a discrepancy report if the routes disagree.
Verdict is_strongly_hopfian(const FiniteAct& a, int cap = kDefaultEnumCap);
Verdict is_strongly_cohopfian(const FiniteAct& a, int cap = kDefaultEnumCap);

// Direct definition (some n gives join = universal and meet = diagonal for
// every endomorphism), cross-checked against strongly Hopfian + strongly
// co-Hopfian.
Verdict is_fitting(const FiniteAct& a, int cap = kDefaultEnumCap);

// No act B with 2 <= |B| <= bound satisfies A +0 B = A.  Decided by the size
// argument |A +0 B| = |A| + |B| - 1 > |A|; the certificate records the
// shortcut plus one explicitly constructed non-isomorphism.
Verdict is_dedekind_finite(const FiniteAct& a, int bound = 4,
                           int cap = kDefaultEnumCap);

// a.s = b.s implies a = b.  The default quantifies over every s; with
// cancellative_only the scan is restricted to right-cancellable s.
Verdict is_torsion_free(const FiniteAct& a, bool cancellative_only = false);

// Homs from subacts extend to endomorphisms.
Verdict is_quasi_injective(const FiniteAct& a, int cap = kDefaultEnumCap);

// Homs into quotients lift through epimorphisms onto those quotients.  Every
// epimorphism out of A factors through the natural map of its kernel, so
// quantifying codomains over the quotient acts is exhaustive.
Verdict is_quasi_projective(const FiniteAct& a, int cap = kDefaultEnumCap);

// Surjective endos are right invertible / injective endos are left invertible.
Verdict is_quasi_retractable(const FiniteAct& a, int cap = kDefaultEnumCap);
Verdict is_quasi_coretractable(const FiniteAct& a, int cap = kDefaultEnumCap);

// trace(B, A) = B for every subact B.
Verdict is_strongly_duo(const FiniteAct& a, int cap = kDefaultEnumCap);

// Injective endomorphisms send essential subacts to essential subacts.
Verdict maps_essential_to_essential(const FiniteAct& a,
                                    int cap = kDefaultEnumCap);

}  // namespace hopfit
