#include "hopf/laws.hpp"

#include "hopf/errors.hpp"

namespace hopf {

bool sameRing(const Bimonoid& a, const Bimonoid& b) {
  return a.name == b.name && sameSpace(a.carrier, b.carrier);
}

LinMap Coelement::asMap() const {
  const std::size_t split = ring.carrier.arity();
  auto g = gamma;
  return LinMap(tensorSpace(ring.carrier, ring.carrier), Space::unit(),
                [g, split](const Label& l) {
                  auto [a, b] = l.split(split);
                  return Vec(Label(), g(a, b));
                });
}

// ---------------------------------------------------------------------------
// Comodules

Comodule::Comodule(Bimonoid ring, Space carrier, LinMap coaction)
    : ring_(std::move(ring)), carrier_(std::move(carrier)), coaction_(std::move(coaction)) {}

Comodule Comodule::unchecked(Bimonoid ring, Space carrier, LinMap coaction) {
  if (!sameSpace(coaction.dom(), carrier) ||
      !sameSpace(coaction.cod(), tensorSpace(ring.carrier, carrier))) {
    throw SpaceMismatch("coaction must map " + carrier.name() + " to " + ring.carrier.name() +
                        "⊗" + carrier.name() + ", got " + coaction.dom().name() + "->" +
                        coaction.cod().name());
  }
  return Comodule(std::move(ring), std::move(carrier), std::move(coaction));
}

Comodule Comodule::make(Bimonoid ring, Space carrier, LinMap coaction, int window) {
  Comodule x = unchecked(std::move(ring), std::move(carrier), std::move(coaction));
  LawReport report = checkComoduleLaws(x, window);
  if (const LawResult* bad = report.firstFailure()) {
    const auto& ce = *bad->verdict.counterexample;
    throw IllegalComodule("coaction on " + x.carrier().name() + " violates " + bad->law +
                          " at " + ce.label.encode() + ": " + ce.lhs.toString() +
                          " != " + ce.rhs.toString());
  }
  return x;
}

LawReport checkComoduleLaws(const Comodule& x, int window) {
  const Bimonoid& a = x.ring();
  const LinMap id = LinMap::identity(x.carrier());
  LawReport r{"comodule " + x.carrier().name(), {}};
  r.laws.push_back(
      {"coaction counit",
       equalOnWindow(composeMaps(x.coaction(), tensorMaps(a.epsilon, id)), id, window)});
  r.laws.push_back({"coaction coassociativity",
                    equalOnWindow(composeMaps(x.coaction(), tensorMaps(a.delta, id)),
                                  composeMaps(x.coaction(),
                                              tensorMaps(LinMap::identity(a.carrier),
                                                         x.coaction())),
                                  window)});
  return r;
}

Comodule tensorComodule(const Comodule& x, const Comodule& y) {
  if (!sameRing(x.ring(), y.ring())) throw SpaceMismatch("tensor of comodules over different rings");
  const Bimonoid& a = x.ring();
  const Space& ar = a.carrier;
  LinMap coaction =
      compose({tensorMaps(a.mu, LinMap::identity(tensorSpace(x.carrier(), y.carrier()))),
               permuteMap({ar, x.carrier(), ar, y.carrier()}, {0, 2, 1, 3}),
               tensorMaps(x.coaction(), y.coaction())});
  return Comodule::unchecked(a, tensorSpace(x.carrier(), y.carrier()), coaction);
}

Comodule unitComodule(const Bimonoid& ring) {
  return Comodule::unchecked(ring, Space::unit(), ring.eta);
}

Comodule regularComodule(const Bimonoid& ring) {
  return Comodule::unchecked(ring, ring.carrier, ring.delta);
}

Comodule trivialComodule(const Bimonoid& ring, const Space& carrier) {
  LinMap eta = ring.eta;
  LinMap coaction(carrier, tensorSpace(ring.carrier, carrier), [eta](const Label& l) {
    return Vec::tensor(eta(Label()), Vec(l));
  });
  return Comodule::unchecked(ring, carrier, coaction);
}

// ---------------------------------------------------------------------------
// Braidings

Braiding plainBraiding() {
  return [](const Space& x, const Space& y) { return swapMap(x, y); };
}

Braiding coelementBraiding(const Coelement& c, std::vector<Comodule> comodules) {
  return [c, comodules = std::move(comodules)](const Space& x, const Space& y) {
    auto find = [&](const Space& s) -> const Comodule& {
      for (const auto& m : comodules) {
        if (sameSpace(m.carrier(), s)) return m;
      }
      throw SpaceMismatch("no comodule structure known for " + s.name());
    };
    return comoduleBraiding(find(x), find(y), c);
  };
}

LinMap comoduleBraiding(const Comodule& x, const Comodule& y, const Coelement& c) {
  if (!sameRing(x.ring(), c.ring) || !sameRing(y.ring(), c.ring)) {
    throw SpaceMismatch("comodule braiding needs comodules over the coelement's ring");
  }
  const Space& ar = c.ring.carrier;
  return compose({tensorMaps(c.asMap(), LinMap::identity(tensorSpace(y.carrier(), x.carrier()))),
                  permuteMap({ar, y.carrier(), ar, x.carrier()}, {0, 2, 1, 3}),
                  tensorMaps(y.coaction(), x.coaction()), swapMap(x.carrier(), y.carrier())});
}

LinMap distributiveLawTau(const Comodule& x) {
  const Bimonoid& a = x.ring();
  const LinMap idX = LinMap::identity(x.carrier());
  const LinMap idA = LinMap::identity(a.carrier);
  return compose({tensorMaps(a.mu, idX), tensorMaps(idA, swapMap(x.carrier(), a.carrier)),
                  tensorMaps(x.coaction(), idA)});
}

// ---------------------------------------------------------------------------
// Reports

bool LawReport::ok() const { return firstFailure() == nullptr; }

const LawResult* LawReport::firstFailure() const {
  for (const auto& l : laws) {
    if (!l.verdict.equal) return &l;
  }
  return nullptr;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

nlohmann::json toJson(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.equal ? "Equal" : "Differ";
  if (v.counterexample) {
    j["counterexample"] = {{"label", v.counterexample->label.encode()},
                           {"lhs", v.counterexample->lhs.toString()},
                           {"rhs", v.counterexample->rhs.toString()}};
  }
  j["instances_checked"] = v.instances;
  return j;
}

nlohmann::json toJson(const LawResult& r) {
  nlohmann::json j = toJson(r.verdict);
  j["law"] = r.law;
  return j;
}

nlohmann::json LawReport::toJson() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : laws) arr.push_back(hopf::toJson(l));
  return {{"subject", subject}, {"laws", arr}};
}

// ---------------------------------------------------------------------------
// Law suites

LawReport checkBialgebraLaws(const Bimonoid& b, const Braiding& braid, int window) {
  const Space& h = b.carrier;
  const LinMap id = LinMap::identity(h);
  const LinMap idI = LinMap::identity(Space::unit());
  LawReport r{b.name, {}};
  auto add = [&](std::string law, const LinMap& lhs, const LinMap& rhs) {
    r.laws.push_back({std::move(law), equalOnWindow(lhs, rhs, window)});
  };

  add("associativity", composeMaps(tensorMaps(b.mu, id), b.mu),
      composeMaps(tensorMaps(id, b.mu), b.mu));
  add("left unit", composeMaps(tensorMaps(b.eta, id), b.mu), id);
  add("right unit", composeMaps(tensorMaps(id, b.eta), b.mu), id);
  add("coassociativity", composeMaps(b.delta, tensorMaps(b.delta, id)),
      composeMaps(b.delta, tensorMaps(id, b.delta)));
  add("left counit", composeMaps(b.delta, tensorMaps(b.epsilon, id)), id);
  add("right counit", composeMaps(b.delta, tensorMaps(id, b.epsilon)), id);
  add("counit of unit", composeMaps(b.eta, b.epsilon), idI);
  add("comultiplication of unit", composeMaps(b.eta, b.delta), tensorMaps(b.eta, b.eta));
  add("counit of product", composeMaps(b.mu, b.epsilon), tensorMaps(b.epsilon, b.epsilon));
  add("bimonoid interchange",
      compose({tensorMaps(b.mu, b.mu), tensorMaps({id, braid(h, h), id}),
               tensorMaps(b.delta, b.delta)}),
      composeMaps(b.mu, b.delta));
  if (b.antipode) {
    const LinMap unitCounit = composeMaps(b.epsilon, b.eta);
    add("left antipode", compose({b.mu, tensorMaps(*b.antipode, id), b.delta}), unitCounit);
    add("right antipode", compose({b.mu, tensorMaps(id, *b.antipode), b.delta}), unitCounit);
  }
  return r;
}

LawReport checkCoelement(const Coelement& c, int window) {
  const Bimonoid& a = c.ring;
  const Space& ar = a.carrier;
  const LinMap id = LinMap::identity(ar);
  const LinMap gamma = c.asMap();
  LawReport r{"coelement on " + a.name, {}};

  // a1 a2 b1 b2 after Delta (x) Delta
  const LinMap dd = tensorMaps(a.delta, a.delta);
  r.laws.push_back(
      {"gamma-commutation",
       equalOnWindow(compose({tensorMaps(a.mu, gamma), permuteMap({ar, ar, ar, ar}, {0, 2, 3, 1}), dd}),
                     compose({tensorMaps(gamma, a.mu), permuteMap({ar, ar, ar, ar}, {2, 0, 3, 1}), dd}),
                     window)});
  r.laws.push_back(
      {"gamma-multiplicative-right",
       equalOnWindow(composeMaps(tensorMaps(id, a.mu), gamma),
                     compose({tensorMaps(gamma, gamma), permuteMap({ar, ar, ar, ar}, {0, 3, 1, 2}),
                              tensorMaps({a.delta, id, id})}),
                     window)});
  r.laws.push_back(
      {"gamma-multiplicative-left",
       equalOnWindow(composeMaps(tensorMaps(a.mu, id), gamma),
                     compose({tensorMaps(gamma, gamma), permuteMap({ar, ar, ar, ar}, {0, 2, 1, 3}),
                              tensorMaps({id, id, a.delta})}),
                     window)});
  return r;
}

LawReport checkDistributiveLaw(const LinMap& tau, const Comodule& x, int window,
                               const std::optional<Comonoid>& xComonoid) {
  const Bimonoid& a = x.ring();
  const Space& xs = x.carrier();
  const Space& as = a.carrier;
  if (!sameSpace(tau.dom(), tensorSpace(xs, as)) || !sameSpace(tau.cod(), tensorSpace(as, xs))) {
    throw SpaceMismatch("distributive law must map " + xs.name() + "⊗" + as.name() + " to " +
                        as.name() + "⊗" + xs.name());
  }
  const LinMap idX = LinMap::identity(xs);
  const LinMap idA = LinMap::identity(as);
  LawReport r{"distributive law on " + xs.name(), {}};
  r.laws.push_back({"tau ring counit", equalOnWindow(composeMaps(tau, tensorMaps(a.epsilon, idX)),
                                                      tensorMaps(idX, a.epsilon), window)});
  r.laws.push_back(
      {"tau ring comultiplication",
       equalOnWindow(composeMaps(tau, tensorMaps(a.delta, idX)),
                     compose({tensorMaps(idA, tau), tensorMaps(tau, idA), tensorMaps(idX, a.delta)}),
                     window)});
  if (xComonoid) {
    r.laws.push_back(
        {"tau carrier counit", equalOnWindow(composeMaps(tau, tensorMaps(idA, xComonoid->epsilon)),
                                             tensorMaps(xComonoid->epsilon, idA), window)});
    r.laws.push_back({"tau carrier comultiplication",
                      equalOnWindow(composeMaps(tau, tensorMaps(idA, xComonoid->delta)),
                                    compose({tensorMaps(tau, idX), tensorMaps(idX, tau),
                                             tensorMaps(xComonoid->delta, idA)}),
                                    window)});
  }
  return r;
}

Verdict checkComoduleMorphism(const LinMap& f, const Comodule& x, const Comodule& y, int window) {
  if (!sameRing(x.ring(), y.ring())) throw SpaceMismatch("comodules over different rings");
  if (!sameSpace(f.dom(), x.carrier()) || !sameSpace(f.cod(), y.carrier())) {
    throw SpaceMismatch("morphism " + f.dom().name() + "->" + f.cod().name() +
                        " does not match comodules " + x.carrier().name() + ", " +
                        y.carrier().name());
  }
  return equalOnWindow(composeMaps(x.coaction(), tensorMaps(LinMap::identity(x.ring().carrier), f)),
                       composeMaps(f, y.coaction()), window);
}

// ---------------------------------------------------------------------------
// Violations and comodule bimonoids

namespace {

std::string describe(const LawResult& r) {
  std::string s = "law '" + r.law + "' fails";
  if (r.verdict.counterexample) {
    const auto& ce = *r.verdict.counterexample;
    s += " at " + ce.label.encode() + ": " + ce.lhs.toString() + " != " + ce.rhs.toString();
  }
  return s;
}

}  // namespace

LawViolation::LawViolation(LawResult result) : Error(describe(result)), result_(std::move(result)) {}

void requireLaws(const LawReport& report) {
  if (const LawResult* bad = report.firstFailure()) throw LawViolation(*bad);
}

LawReport checkComoduleBimonoid(const ComoduleBimonoid& hb, int window) {
  const Bimonoid& h = hb.h;
  const Comodule& hc = hb.carrier;
  if (!sameRing(hc.ring(), hb.ring()) || !sameSpace(hc.carrier(), h.carrier)) {
    throw SpaceMismatch("comodule bimonoid: carrier comodule does not match " + h.name);
  }
  const Comodule hh = tensorComodule(hc, hc);
  const Comodule unit = unitComodule(hb.ring());
  LawReport r{"comodule bimonoid " + h.name, {}};
  r.laws.push_back({"multiplication is a comodule map", checkComoduleMorphism(h.mu, hh, hc, window)});
  r.laws.push_back({"unit is a comodule map", checkComoduleMorphism(h.eta, unit, hc, window)});
  r.laws.push_back(
      {"comultiplication is a comodule map", checkComoduleMorphism(h.delta, hc, hh, window)});
  r.laws.push_back({"counit is a comodule map", checkComoduleMorphism(h.epsilon, hc, unit, window)});
  if (h.antipode) {
    r.laws.push_back(
        {"antipode is a comodule map", checkComoduleMorphism(*h.antipode, hc, hc, window)});
  }
  const LawReport laws = checkBialgebraLaws(h, coelementBraiding(hb.coelement, {hc}), window);
  r.laws.insert(r.laws.end(), laws.laws.begin(), laws.laws.end());
  return r;
}

}  // namespace hopf
