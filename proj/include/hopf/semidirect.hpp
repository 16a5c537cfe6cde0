#pragma once

#include "hopf/laws.hpp"

namespace hopf {

/// Window on which semidirectProduct verifies its own laws.
inline constexpr int kSemidirectCheckWindow = 3;

/// H (x) A as a bimonoid in Ab, labels (h * a).
struct SemidirectRing {
  Bimonoid ring;
  ComoduleBimonoid source;
};

/// Structure maps of H (x) A without any law check:
///   (h (x) a)(h' (x) a') = gamma(h'_(-1), a_(1)) h h'_(0) (x) a_(2) a'
///   Delta(h (x) a)       = h_(1) (x) (h_(2))_(-1) a_(1) (x) (h_(2))_(0) (x) a_(2)
/// with unit eta_H (x) eta_A and counit eps_H (x) eps_A. The antipode is
/// attached when both H and A have one.
SemidirectRing semidirectProductUnchecked(const ComoduleBimonoid& hb);

/// As above, then runs checkBialgebraLaws (plain swap, including both
/// antipode identities) on `window`; throws LawViolation on failure.
SemidirectRing semidirectProduct(const ComoduleBimonoid& hb, int window = kSemidirectCheckWindow);

/// S(h (x) a) = gamma(u_3, s_A(u_2 a_2)) s_H(h_(0)) (x) s_A(u_1 a_1), where
/// u = h_(-1) is split by Delta_A twice and a by Delta_A once. Throws
/// Error when H or A has no antipode.
LinMap semidirectAntipodeUnchecked(const ComoduleBimonoid& hb);

/// Checked version: both antipode identities against the product's
/// structure maps on `window`; throws LawViolation.
LinMap semidirectAntipode(const ComoduleBimonoid& hb, int window = kSemidirectCheckWindow);

/// A comodule over H inside A-comodules: an A-comodule B together with an
/// H-coaction chi: B -> H (x) B that is an A-comodule map.
struct HComodule {
  Comodule aComodule;
  LinMap chi;

  const Space& carrier() const { return aComodule.carrier(); }
};

/// Counit and coassociativity of chi over H, and chi being an A-comodule
/// morphism into H (x) B.
LawReport checkHComodule(const ComoduleBimonoid& hb, const HComodule& b, int window);

/// B with coaction (1_H (x) alpha_B) . chi_B over H (x) A. Throws
/// LawViolation when the result is not a comodule on `window`.
Comodule comparisonF(const SemidirectRing& q, const HComodule& b,
                     int window = kComoduleCheckWindow);

/// alpha = (eps_H (x) 1 (x) 1) . beta and chi = (1 (x) eps_A (x) 1) . beta.
/// Throws LawViolation when the pair is not an H-comodule in A-comodules.
HComodule comparisonFInverse(const SemidirectRing& q, const Comodule& b,
                             int window = kComoduleCheckWindow);

/// Tensor of H-comodules in A-comodules: chi_{B(x)C} multiplies the H legs
/// after braiding chi_C's H leg past B with the coelement braiding.
HComodule tensorHComodule(const ComoduleBimonoid& hb, const HComodule& b, const HComodule& c);

/// The A-comodule B with chi = eta_H (x) 1.
HComodule trivialHComodule(const ComoduleBimonoid& hb, const Comodule& b);

}  // namespace hopf
