#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/chains.hpp"
#include "hopf/laws.hpp"
#include "hopf/semidirect.hpp"
#include "json.hpp"

namespace hopf {

enum class Letter : std::uint8_t { Xi, XiInv, Psi };
using Word = std::vector<Letter>;

/// psi^a xi^k as the basis label pareigis[a, k], a in {0, 1}.
Label pareigisMonomial(int a, std::int64_t k);
/// (a, k) of a pareigis label; throws Error for anything else.
std::pair<int, std::int64_t> pareigisExponents(const Label& l);
/// The normal-form word psi^a xi^k of a monomial label.
Word wordOf(const Label& monomial);
/// Text form with letters "ξ", "ξ⁻¹", "ψ"; the empty word is "1".
std::string wordToString(const Word& w);

/// A coefficient times a word; coefficient 0 is the zero term.
struct WordTerm {
  int coeff = 1;
  Word word;
  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Every single rewrite of w by the rules xi psi -> -psi xi,
/// xi^-1 psi -> -psi xi^-1, psi psi -> 0, xi xi^-1 -> 1, xi^-1 xi -> 1, one
/// entry per redex position, left to right.
std::vector<WordTerm> rewriteSteps(const Word& w);

/// The normal form +-psi^a xi^k of w, or zero.
Vec normalizeWord(const Word& w);

/// Z<xi, xi^-1, psi>/(xi psi + psi xi, psi^2) with xi group-like,
/// Delta(psi) = psi (x) 1 + xi^s (x) psi, eps(psi) = 0 and
/// S(psi) = psi xi^-s. Carrier "P" for s = -1, "P+" for s = +1; window t
/// holds the monomials with |k| <= t. Throws Error unless s is +-1.
Bimonoid pareigisRing(int s);

/// "pareigis" (s = -1) or "pareigis-plus" (s = +1).
std::string pareigisRingName(int s);
/// Inverse of pareigisRingName; throws Error on unknown names.
int pareigisSignFromName(const std::string& name);
/// s for a ring built by pareigisRing; throws IllegalComodule otherwise.
int pareigisSignOf(const Bimonoid& ring);

/// H = I (+) D for D = Z in degree s over the grading ring with the sign
/// bicharacter kappa = -1.
ComoduleBimonoid pareigisHopfData(int s);

/// A complex of step s as an H-comodule in graded groups: degree-n
/// generators coact by x^n and chi(b) = 1 (x) b + d (x) db.
HComodule chainToHComodule(const ComoduleBimonoid& hb, const ChainComplex& x);

/// For each sample: F^-1 F = id and F F^-1 = id, and for each consecutive
/// pair F(B (x) C) = F(B) (x) F(C), where F is the comparison functor of
/// (I (+) D) x| Z. Counterexample labels are sample[t].
LawReport comparisonBattery(int s, const std::vector<ChainComplex>& samples);

/// Builds (I (+) D) x| Z for D = Z in degree s with the sign bicharacter
/// kappa = -1, and compares multiplication, unit, comultiplication, counit
/// and antipode with those of pareigisRing(ringSign) along
/// d^a (x) x^k <-> psi^a xi^k on `window`. One law per structure map.
LawReport identifySemidirect(int s, int window, int ringSign);
inline LawReport identifySemidirect(int s, int window) { return identifySemidirect(s, window, s); }

/// b -> xi^n (x) b + psi xi^(n-s) (x) db for b in degree n. The complex
/// must have step s. Throws IllegalChain otherwise or when d^2 != 0.
Comodule chainToComodule(const ChainComplex& x, int s);

/// Reads the grading off the xi-part of the coaction and the differential
/// off its psi-part. Basis labels must be homogeneous (xi-part exactly
/// xi^n (x) b); throws IllegalComodule when they are not, when the
/// psi-part is not concentrated in xi^(n-s), or when the coaction is not
/// reproduced by the resulting complex.
ChainComplex comoduleToChain(const Comodule& b);

/// {ring, basis:[labels], coaction:{label: [[coeff, ringLabel, label]]}}.
/// Coefficients are JSON integers.
nlohmann::json comoduleToJson(const Comodule& b);
/// Parses the format above over pareigisRing; throws ParseError on
/// malformed input and IllegalComodule when the coaction is not legal.
Comodule comoduleFromJson(const nlohmann::json& j);

}  // namespace hopf
