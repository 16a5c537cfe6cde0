#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopf/space.hpp"
#include "hopf/vec.hpp"

namespace hopf {

/// A Z-linear map between based spaces, given on basis labels and
/// extended linearly. Application is pure, so maps may be evaluated from
/// many threads at once.
class LinMap {
 public:
  using ApplyFn = std::function<Vec(const Label&)>;

  LinMap(Space dom, Space cod, ApplyFn fn);

  static LinMap identity(const Space& x);
  static LinMap zero(const Space& dom, const Space& cod);
  static LinMap scalar(const Space& x, const Int& c);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }

  Vec operator()(const Label& l) const { return fn_(l); }
  Vec operator()(const Vec& v) const;

 private:
  Space dom_;
  Space cod_;
  ApplyFn fn_;
};

/// g after f. Throws SpaceMismatch unless f.cod and g.dom agree.
LinMap composeMaps(const LinMap& f, const LinMap& g);
/// Right-to-left composite: compose({h, g, f}) is h after g after f.
LinMap compose(std::initializer_list<LinMap> maps);

/// f (x) g on the tensor of domains; no signs (the tensor of Ab).
LinMap tensorMaps(const LinMap& f, const LinMap& g);
LinMap tensorMaps(std::initializer_list<LinMap> maps);

/// f on Left-labels, g on Right-labels.
LinMap directSumMaps(const LinMap& f, const LinMap& g);

LinMap addMaps(const LinMap& f, const LinMap& g);
LinMap scaleMap(const Int& c, const LinMap& f);

/// Plain symmetry X (x) Y -> Y (x) X of Ab.
LinMap swapMap(const Space& x, const Space& y);

/// Reorders tensor factors: factor j of the result is factor perm[j] of the
/// input. `factors` are the domain factors.
LinMap permuteMap(const std::vector<Space>& factors, const std::vector<std::size_t>& perm);

LinMap injectLeft(const Space& x, const Space& y);
LinMap injectRight(const Space& x, const Space& y);
LinMap projectLeft(const Space& x, const Space& y);
LinMap projectRight(const Space& x, const Space& y);

/// Bijective relabeling given by a label function on basis labels.
LinMap relabelMap(const Space& dom, const Space& cod, std::function<Label(const Label&)> fn);

}  // namespace hopf
