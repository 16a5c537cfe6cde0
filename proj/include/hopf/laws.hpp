#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/linmap.hpp"
#include "hopf/window.hpp"
#include "json.hpp"

namespace hopf {

/// Window used when a comodule's counit and coassociativity laws are
/// checked at construction.
inline constexpr int kComoduleCheckWindow = 4;

/// Carrier with multiplication, unit, comultiplication, counit and an
/// optional antipode. Nothing here asserts the laws; see checkBialgebraLaws.
struct Bimonoid {
  std::string name;
  Space carrier;
  LinMap mu;       // H (x) H -> H
  LinMap eta;      // I -> H
  LinMap delta;    // H -> H (x) H
  LinMap epsilon;  // H -> I
  std::optional<LinMap> antipode;
};

bool sameRing(const Bimonoid& a, const Bimonoid& b);

struct Comonoid {
  LinMap delta;
  LinMap epsilon;
};

/// Braiding coelement gamma: A (x) A -> I, given on pairs of basis labels.
struct Coelement {
  Bimonoid ring;
  std::function<Int(const Label&, const Label&)> gamma;

  LinMap asMap() const;
};

/// Left comodule X -> A (x) X.
class Comodule {
 public:
  /// Checks counit and coassociativity on `window`; throws IllegalComodule.
  static Comodule make(Bimonoid ring, Space carrier, LinMap coaction,
                       int window = kComoduleCheckWindow);
  /// No legality check (test hooks and internal constructions that are
  /// checked elsewhere).
  static Comodule unchecked(Bimonoid ring, Space carrier, LinMap coaction);

  const Bimonoid& ring() const { return ring_; }
  const Space& carrier() const { return carrier_; }
  const LinMap& coaction() const { return coaction_; }

 private:
  Comodule(Bimonoid ring, Space carrier, LinMap coaction);
  Bimonoid ring_;
  Space carrier_;
  LinMap coaction_;
};

/// Produces the braiding X (x) Y -> Y (x) X for a pair of spaces.
using Braiding = std::function<LinMap(const Space&, const Space&)>;

/// The symmetry of Ab.
Braiding plainBraiding();
/// The braiding of A-comodules induced by a coelement; `comodules` supplies
/// the coaction for each space the braiding will be asked about.
Braiding coelementBraiding(const Coelement& c, std::vector<Comodule> comodules);

struct LawResult {
  std::string law;
  Verdict verdict;
};

struct LawReport {
  std::string subject;
  std::vector<LawResult> laws;

  bool ok() const;
  const LawResult* firstFailure() const;
  const LawResult* find(const std::string& law) const;
  nlohmann::json toJson() const;
};

nlohmann::json toJson(const Verdict& v);
nlohmann::json toJson(const LawResult& r);

/// A construction produced a structure that fails one of its laws.
class LawViolation : public Error {
 public:
  explicit LawViolation(LawResult result);
  const LawResult& result() const { return result_; }

 private:
  LawResult result_;
};

/// Throws LawViolation for the first failing law of `report`.
void requireLaws(const LawReport& report);

/// Associativity, unit, coassociativity, counit, the unit/counit
/// compatibilities, the interchange law Delta.mu = (mu mu)(1 sigma 1)(Delta Delta)
/// under `braid`, and both antipode identities when an antipode is present.
LawReport checkBialgebraLaws(const Bimonoid& b, const Braiding& braid, int window);

/// The three coelement axioms:
///   commutation:  mu(a1 b1) gamma(b2, a2) = gamma(b1, a1) mu(b2 a2)
///   right product: gamma(a, b c) = gamma(a1, c) gamma(a2, b)
///   left product:  gamma(a b, c) = gamma(a, c1) gamma(b, c2)
LawReport checkCoelement(const Coelement& c, int window);

/// x (x) y -> gamma(y_(-1), x_(-1)) y_(0) (x) x_(0): swap, coact on both
/// factors, bring the ring legs together, evaluate gamma.
LinMap comoduleBraiding(const Comodule& x, const Comodule& y, const Coelement& c);

/// tau_X : X (x) A -> A (x) X, x (x) a -> x_(-1) a (x) x_(0).
LinMap distributiveLawTau(const Comodule& x);

/// Counit and comultiplication axioms of a distributive law X (x) A -> A (x) X
/// against the comonoid A, and, when `xComonoid` is given, against X.
LawReport checkDistributiveLaw(const LinMap& tau, const Comodule& x, int window,
                               const std::optional<Comonoid>& xComonoid = std::nullopt);

/// (1 (x) f) . alpha_X == alpha_Y . f on the window.
Verdict checkComoduleMorphism(const LinMap& f, const Comodule& x, const Comodule& y, int window);

/// Counit and coassociativity of a coaction.
LawReport checkComoduleLaws(const Comodule& x, int window);

/// A bimonoid H in the category of comodules over a ring A with braiding
/// coelement: `carrier` is H's carrier as an A-comodule.
struct ComoduleBimonoid {
  Coelement coelement;
  Bimonoid h;
  Comodule carrier;

  const Bimonoid& ring() const { return coelement.ring; }
};

/// mu, eta, Delta, epsilon (and the antipode, when present) are
/// A-comodule morphisms, and H passes checkBialgebraLaws under the
/// coelement braiding.
LawReport checkComoduleBimonoid(const ComoduleBimonoid& hb, int window);

/// Coaction on X (x) Y: x (x) y -> x_(-1) y_(-1) (x) x_(0) (x) y_(0).
Comodule tensorComodule(const Comodule& x, const Comodule& y);
/// I with coaction 1 -> eta(1) (x) 1.
Comodule unitComodule(const Bimonoid& ring);
/// A over itself via Delta.
Comodule regularComodule(const Bimonoid& ring);
/// Every basis label x -> eta(1) (x) x.
Comodule trivialComodule(const Bimonoid& ring, const Space& carrier);

}  // namespace hopf
