#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/grading.hpp"
#include "hopf/laws.hpp"
#include "json.hpp"

namespace hopf {

/// Finite direct sum of cyclic groups placed in degrees of Z^r. Order 0 is
/// Z, order n >= 2 is Z/n; order 1 (the zero group) is dropped.
struct GradedCarrier {
  struct Summand {
    Degree degree;
    std::int64_t order = 0;
    friend auto operator<=>(const Summand&, const Summand&) = default;
  };

  std::size_t rank = 1;
  std::vector<Summand> summands;

  /// Drops order-1 summands and sorts.
  GradedCarrier normalized() const;
  bool isFree() const;
  /// The free part as a graded module with basis family "d". Throws Error
  /// if any summand is torsion (torsion has no free basis to compute with).
  GradedModule freeModule() const;

  nlohmann::json toJson() const;
  static GradedCarrier fromJson(const nlohmann::json& j);
};

/// Z/a (x) Z/b = Z/gcd(a, b), with 0 standing for Z and 1 for the zero group.
std::int64_t cyclicTensor(std::int64_t a, std::int64_t b);

struct CarrierVerdict {
  bool accepted = true;
  std::vector<std::string> diagnostics;
};

/// Decides whether the braiding of D with itself is -1: summands in
/// different degrees must tensor to zero, distinct summands in one degree
/// likewise, and a summand of order n in degree g needs gamma(g, g) = -1
/// mod n. Throws RankMismatch when degree and bicharacter ranks differ.
CarrierVerdict checkDifferentialCarrier(const GradedCarrier& d, const Bicharacter& b);

/// The free carrier D as a comodule over the grading ring of `c`.
Comodule differentialComodule(const GradedCarrier& d, const Coelement& c);

/// H = D (+) I as a Hopf ring in comodules, labels L(d) and R(1): D is a
/// square-zero ideal, R(1) the unit, d primitive, antipode -1 on D.
/// Throws NotAdmissible unless the comodule braiding of D with itself is
/// -id on `window`.
ComoduleBimonoid buildDifferentialHopf(const Comodule& d, const Coelement& c,
                                       int window = kComoduleCheckWindow);

/// The same construction without the admissibility check.
ComoduleBimonoid buildDifferentialHopfUnchecked(const Comodule& d, const Coelement& c);

/// The unit label R(1) and the label L(x) of x in D.
inline Label hopfUnitLabel() { return Label::right(Label()); }
inline Label hopfCarrierLabel(const Label& x) { return Label::left(x); }

}  // namespace hopf
