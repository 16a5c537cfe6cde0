#include "hopf/diffhopf.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/errors.hpp"

namespace hopf {

GradedCarrier GradedCarrier::normalized() const {
  GradedCarrier out{rank, {}};
  for (const auto& s : summands) {
    if (s.degree.size() != rank) {
      throw RankMismatch("summand degree of rank " + std::to_string(s.degree.size()) +
                         " in a carrier graded by Z^" + std::to_string(rank));
    }
    if (s.order < 0) throw Error("negative summand order");
    if (s.order != 1) out.summands.push_back(s);
  }
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

bool GradedCarrier::isFree() const {
  return std::all_of(summands.begin(), summands.end(),
                     [](const Summand& s) { return s.order == 0 || s.order == 1; });
}

GradedModule GradedCarrier::freeModule() const {
  GradedModule m{rank, {}, "d"};
  for (const auto& s : normalized().summands) {
    if (s.order != 0) {
      throw Error("torsion summand Z/" + std::to_string(s.order) + " has no free basis");
    }
    m.components.push_back({s.degree, 1});
  }
  return m.normalized();
}

nlohmann::json GradedCarrier::toJson() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : normalized().summands) {
    arr.push_back({{"degree", s.degree}, {"order", s.order}});
  }
  return {{"rank", rank}, {"summands", arr}};
}

GradedCarrier GradedCarrier::fromJson(const nlohmann::json& j) {
  GradedCarrier c;
  c.rank = j.at("rank").get<std::size_t>();
  for (const auto& s : j.at("summands")) {
    c.summands.push_back({s.at("degree").get<Degree>(), s.at("order").get<std::int64_t>()});
  }
  return c.normalized();
}

std::int64_t cyclicTensor(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error("cyclic orders are nonnegative");
  return std::gcd(a, b);
}

namespace {

std::string show(const GradedCarrier::Summand& s) {
  std::string g = "(";
  for (std::size_t i = 0; i < s.degree.size(); ++i) {
    if (i) g += ",";
    g += std::to_string(s.degree[i]);
  }
  g += ")";
  return "(" + g + ", " + (s.order == 0 ? std::string("Z") : "Z/" + std::to_string(s.order)) + ")";
}

}  // namespace

CarrierVerdict checkDifferentialCarrier(const GradedCarrier& d, const Bicharacter& b) {
  if (d.rank != b.rank()) {
    throw RankMismatch("carrier graded by Z^" + std::to_string(d.rank) +
                       " with a bicharacter of rank " + std::to_string(b.rank()));
  }
  const auto s = d.normalized().summands;
  CarrierVerdict v;
  auto reject = [&](std::string why) {
    v.accepted = false;
    v.diagnostics.push_back(std::move(why));
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const std::int64_t t = cyclicTensor(s[i].order, s[j].order);
      if (t == 1) continue;
      const std::string prod = t == 0 ? "Z" : "Z/" + std::to_string(t);
      if (s[i].degree != s[j].degree) {
        reject(show(s[i]) + " (x) " + show(s[j]) + " = " + prod + " != 0 across degrees");
      } else {
        reject(show(s[i]) + " (x) " + show(s[j]) + " = " + prod +
               " != 0 within one degree, swap cannot be -1");
      }
    }
  }
  for (const auto& x : s) {
    const int sign = b.evaluate(x.degree, x.degree);
    if (sign == -1) continue;
    // sign +1: need 2 = 0 on Z/n, so only Z/2 survives.
    if (x.order != 2) {
      reject(show(x) + ": swap sign +1 at even degree, needs -1");
    }
  }
  return v;
}

Comodule differentialComodule(const GradedCarrier& d, const Coelement& c) {
  if (d.rank != c.ring.carrier.enumerate(0)[0].index().size()) {
    throw RankMismatch("carrier rank does not match the grading ring");
  }
  return gradedToComodule(d.freeModule(), c.ring);
}

ComoduleBimonoid buildDifferentialHopfUnchecked(const Comodule& d, const Coelement& c) {
  if (!sameRing(d.ring(), c.ring)) {
    throw SpaceMismatch("differential carrier is not a comodule over the coelement's ring");
  }
  const Bimonoid& a = c.ring;
  const Space unit = Space::unit();
  const Space h = directSumSpace(d.carrier(), unit);
  const Space hh = tensorSpace(h, h);
  const Label one = hopfUnitLabel();

  LinMap mu(hh, h, [](const Label& l) {
    auto [x, y] = l.split(1);
    const bool xd = x.kind() == Label::Kind::Left;
    const bool yd = y.kind() == Label::Kind::Left;
    if (xd && yd) return Vec();
    if (xd) return Vec(x);
    return Vec(y);
  });
  LinMap eta(unit, h, [one](const Label&) { return Vec(one); });
  LinMap delta(h, hh, [one](const Label& x) {
    if (x.kind() == Label::Kind::Right) return Vec(Label::pair(one, one));
    return Vec(Label::pair(x, one)) + Vec(Label::pair(one, x));
  });
  LinMap epsilon(h, unit, [](const Label& x) {
    return x.kind() == Label::Kind::Right ? Vec(Label()) : Vec();
  });
  LinMap antipode = directSumMaps(LinMap::scalar(d.carrier(), -1), LinMap::identity(unit));

  const LinMap alphaD = d.coaction();
  const LinMap etaA = a.eta;
  LinMap coaction(h, tensorSpace(a.carrier, h), [alphaD, etaA, one](const Label& x) {
    if (x.kind() == Label::Kind::Right) return Vec::tensor(etaA(Label()), Vec(one));
    Vec out;
    for (const auto& [l, coef] : alphaD(x.inner())) {
      auto [ring, rest] = l.split(1);
      out.add(Label::pair(ring, Label::left(rest)), coef);
    }
    return out;
  });

  Bimonoid hopf{"(" + d.carrier().name() + "⊕I)", h, mu, eta, delta, epsilon, antipode};
  return ComoduleBimonoid{c, hopf, Comodule::unchecked(a, h, coaction)};
}

ComoduleBimonoid buildDifferentialHopf(const Comodule& d, const Coelement& c, int window) {
  const LinMap braid = comoduleBraiding(d, d, c);
  const Verdict v =
      equalOnWindow(braid, LinMap::scalar(tensorSpace(d.carrier(), d.carrier()), -1), window);
  if (!v.equal) {
    const auto& ce = *v.counterexample;
    throw NotAdmissible("braiding of " + d.carrier().name() + " with itself is not -1 at " +
                        ce.label.encode() + ": " + ce.lhs.toString());
  }
  return buildDifferentialHopfUnchecked(d, c);
}

}  // namespace hopf
