#include "hopf/semidirect.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Splits a flat label into consecutive pieces of the given arities.
std::vector<Label> cut(const Label& l, std::initializer_list<std::size_t> arities) {
  std::vector<Label> out;
  Label rest = l;
  std::size_t left = arities.size();
  for (std::size_t a : arities) {
    if (--left == 0) {
      out.push_back(rest);
      break;
    }
    auto [head, tail] = rest.split(a);
    out.push_back(head);
    rest = tail;
  }
  return out;
}

// Calls fn(coefficient, left, right) for every term of a vector of pairs.
template <class Fn>
void forPairs(const Vec& v, std::size_t leftArity, Fn&& fn) {
  for (const auto& [l, c] : v) {
    auto [x, y] = l.split(leftArity);
    fn(c, x, y);
  }
}

}  // namespace

SemidirectRing semidirectProductUnchecked(const ComoduleBimonoid& hb) {
  const Bimonoid& h = hb.h;
  const Bimonoid& a = hb.ring();
  const std::size_t ha = h.carrier.arity();
  const std::size_t aa = a.carrier.arity();
  const Space q = tensorSpace(h.carrier, a.carrier);
  const Space qq = tensorSpace(q, q);
  const LinMap alpha = hb.carrier.coaction();
  const auto gamma = hb.coelement.gamma;

  LinMap mu(qq, q, [=](const Label& l) {
    const auto p = cut(l, {ha, aa, ha, aa});
    Vec out;
    forPairs(alpha(p[2]), aa, [&](const Int& c1, const Label& u, const Label& h2) {
      forPairs(a.delta(p[1]), aa, [&](const Int& c2, const Label& a1, const Label& a2) {
        const Int g = gamma(u, a1);
        if (g == 0) return;
        out += (c1 * c2 * g) * Vec::tensor(h.mu(Label::pair(p[0], h2)), a.mu(Label::pair(a2, p[3])));
      });
    });
    return out;
  });

  LinMap delta(q, qq, [=](const Label& l) {
    auto [hl, al] = l.split(ha);
    Vec out;
    forPairs(h.delta(hl), ha, [&](const Int& c1, const Label& h1, const Label& h2) {
      forPairs(alpha(h2), aa, [&](const Int& c2, const Label& u, const Label& h20) {
        forPairs(a.delta(al), aa, [&](const Int& c3, const Label& a1, const Label& a2) {
          Vec left = Vec::tensor(Vec(h1), a.mu(Label::pair(u, a1)));
          Vec right = Vec::tensor(Vec(h20), Vec(a2));
          out += (c1 * c2 * c3) * Vec::tensor(left, right);
        });
      });
    });
    return out;
  });

  LinMap eta(Space::unit(), q, [=](const Label&) {
    return Vec::tensor(h.eta(Label()), a.eta(Label()));
  });
  LinMap epsilon(q, Space::unit(), [=](const Label& l) {
    auto [hl, al] = l.split(ha);
    return Vec::tensor(h.epsilon(hl), a.epsilon(al));
  });

  Bimonoid ring{h.name + "⋊" + a.name, q, mu, eta, delta, epsilon, std::nullopt};
  if (h.antipode && a.antipode) ring.antipode = semidirectAntipodeUnchecked(hb);
  return SemidirectRing{ring, hb};
}

SemidirectRing semidirectProduct(const ComoduleBimonoid& hb, int window) {
  SemidirectRing q = semidirectProductUnchecked(hb);
  requireLaws(checkBialgebraLaws(q.ring, plainBraiding(), window));
  return q;
}

LinMap semidirectAntipodeUnchecked(const ComoduleBimonoid& hb) {
  const Bimonoid& h = hb.h;
  const Bimonoid& a = hb.ring();
  if (!h.antipode || !a.antipode) throw Error("semidirect antipode needs antipodes on H and A");
  const std::size_t ha = h.carrier.arity();
  const std::size_t aa = a.carrier.arity();
  const Space q = tensorSpace(h.carrier, a.carrier);
  const LinMap alpha = hb.carrier.coaction();
  const LinMap sH = *h.antipode;
  const LinMap sA = *a.antipode;
  const auto gamma = hb.coelement.gamma;

  return LinMap(q, q, [=](const Label& l) {
    auto [hl, al] = l.split(ha);
    Vec out;
    forPairs(alpha(hl), aa, [&](const Int& c1, const Label& u, const Label& h0) {
      const Vec sh = sH(h0);
      forPairs(a.delta(u), aa, [&](const Int& c2, const Label& u1, const Label& rest) {
        forPairs(a.delta(rest), aa, [&](const Int& c3, const Label& u2, const Label& u3) {
          forPairs(a.delta(al), aa, [&](const Int& c4, const Label& a1, const Label& a2) {
            Int g = 0;
            for (const auto& [t, ct] : sA(a.mu(Label::pair(u2, a2)))) g += ct * gamma(u3, t);
            if (g == 0) return;
            out += (c1 * c2 * c3 * c4 * g) * Vec::tensor(sh, sA(a.mu(Label::pair(u1, a1))));
          });
        });
      });
    });
    return out;
  });
}

LinMap semidirectAntipode(const ComoduleBimonoid& hb, int window) {
  SemidirectRing q = semidirectProductUnchecked(hb);
  const LinMap s = semidirectAntipodeUnchecked(hb);
  const Bimonoid& r = q.ring;
  const LinMap id = LinMap::identity(r.carrier);
  const LinMap unitCounit = composeMaps(r.epsilon, r.eta);
  LawReport rep{"antipode of " + r.name, {}};
  rep.laws.push_back({"left antipode", equalOnWindow(compose({r.mu, tensorMaps(s, id), r.delta}),
                                                     unitCounit, window)});
  rep.laws.push_back({"right antipode", equalOnWindow(compose({r.mu, tensorMaps(id, s), r.delta}),
                                                      unitCounit, window)});
  requireLaws(rep);
  return s;
}

// ---------------------------------------------------------------------------
// Comparison functors

LawReport checkHComodule(const ComoduleBimonoid& hb, const HComodule& b, int window) {
  const Comodule overH = Comodule::unchecked(hb.h, b.carrier(), b.chi);
  LawReport r = checkComoduleLaws(overH, window);
  r.subject = "H-comodule " + b.carrier().name();
  r.laws.push_back({"H-coaction is a comodule map",
                    checkComoduleMorphism(b.chi, b.aComodule,
                                          tensorComodule(hb.carrier, b.aComodule), window)});
  return r;
}

Comodule comparisonF(const SemidirectRing& q, const HComodule& b, int window) {
  const ComoduleBimonoid& hb = q.source;
  const LinMap coaction =
      composeMaps(b.chi, tensorMaps(LinMap::identity(hb.h.carrier), b.aComodule.coaction()));
  Comodule out = Comodule::unchecked(q.ring, b.carrier(), coaction);
  requireLaws(checkComoduleLaws(out, window));
  return out;
}

HComodule comparisonFInverse(const SemidirectRing& q, const Comodule& b, int window) {
  const ComoduleBimonoid& hb = q.source;
  const Bimonoid& a = hb.ring();
  const LinMap idB = LinMap::identity(b.carrier());
  const LinMap alpha =
      composeMaps(b.coaction(), tensorMaps({hb.h.epsilon, LinMap::identity(a.carrier), idB}));
  const LinMap chi =
      composeMaps(b.coaction(), tensorMaps({LinMap::identity(hb.h.carrier), a.epsilon, idB}));
  Comodule ac = Comodule::unchecked(a, b.carrier(), alpha);
  requireLaws(checkComoduleLaws(ac, window));
  HComodule out{ac, chi};
  requireLaws(checkHComodule(hb, out, window));
  return out;
}

HComodule tensorHComodule(const ComoduleBimonoid& hb, const HComodule& b, const HComodule& c) {
  const Space& hs = hb.h.carrier;
  const Space& bs = b.carrier();
  const Space& cs = c.carrier();
  const LinMap braid = comoduleBraiding(b.aComodule, hb.carrier, hb.coelement);
  const LinMap chi =
      compose({tensorMaps({hb.h.mu, LinMap::identity(bs), LinMap::identity(cs)}),
               tensorMaps({LinMap::identity(hs), braid, LinMap::identity(cs)}),
               tensorMaps(b.chi, c.chi)});
  return HComodule{tensorComodule(b.aComodule, c.aComodule), chi};
}

HComodule trivialHComodule(const ComoduleBimonoid& hb, const Comodule& b) {
  const LinMap eta = hb.h.eta;
  LinMap chi(b.carrier(), tensorSpace(hb.h.carrier, b.carrier()), [eta](const Label& l) {
    return Vec::tensor(eta(Label()), Vec(l));
  });
  return HComodule{b, chi};
}

}  // namespace hopf
