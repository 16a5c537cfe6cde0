#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopf/laws.hpp"
#include "json.hpp"

namespace hopf {

using Degree = std::vector<std::int64_t>;

/// Diagonal sign bicharacter on Z^r: gamma(g, h) = prod_c kappa_c^(g_c h_c).
struct Bicharacter {
  std::vector<int> kappas;  // each +1 or -1

  std::size_t rank() const { return kappas.size(); }
  int evaluate(const Degree& g, const Degree& h) const;
};

/// x^g as a basis label of the group ring Z[Z^r].
Label monomial(Degree g);
inline Label monomial(std::int64_t k) { return monomial(Degree{k}); }

/// The group ring Z[Z^r]: every x^g is group-like, antipode x^g -> x^-g.
/// Windows are the cubes max_c |g_c| <= K.
Bimonoid laurentHopf(std::size_t rank);

Coelement signCoelement(const Bicharacter& b);

/// Free graded Z-module with finitely many nonzero components.
/// Basis label of the i-th generator in degree g is family[g..., i].
struct GradedModule {
  struct Component {
    Degree degree;
    std::int64_t rank = 0;
  };

  std::size_t gradingRank = 1;
  std::vector<Component> components;
  std::string family = "e";

  /// Merges repeated degrees, drops empty components, sorts by degree.
  GradedModule normalized() const;
  std::vector<Label> basis() const;
  Label basisLabel(const Degree& g, std::int64_t i) const;
  std::string spaceName() const;

  nlohmann::json toJson() const;
  static GradedModule fromJson(const nlohmann::json& j);
};

/// Underlying ungraded free module (disjoint union of component bases).
Space sigmaFunctor(const GradedModule& m);

/// Coaction b -> x^g (x) b on degree-g generators.
Comodule gradedToComodule(const GradedModule& m, const Bimonoid& laurent);
Comodule gradedToComodule(const GradedModule& m);

/// p_g(b) is the x^g-component of the coaction of b. Only nonzero
/// projections are returned. Throws IllegalComodule unless the projections
/// sum to the identity and are orthogonal idempotents.
std::map<Degree, LinMap> comoduleToGradedProjections(const Comodule& x);

/// Reassembles b -> sum_g x^g (x) p_g(b).
LinMap coactionFromProjections(const Comodule& x, const std::map<Degree, LinMap>& projections);

/// Degree of a monomial label x^g.
Degree monomialDegree(const Label& l);

}  // namespace hopf
