#include "hopf/pareigis.hpp"

#include <limits>
#include <set>

#include "hopf/diffhopf.hpp"
#include "hopf/errors.hpp"
#include "hopf/grading.hpp"
#include "hopf/semidirect.hpp"

namespace hopf {

Label pareigisMonomial(int a, std::int64_t k) { return Label::atom("pareigis", {a, k}); }

std::pair<int, std::int64_t> pareigisExponents(const Label& l) {
  if (l.kind() != Label::Kind::Atom || l.family() != "pareigis" || l.index().size() != 2 ||
      (l.index()[0] != 0 && l.index()[0] != 1)) {
    throw Error("not a pareigis monomial: " + l.encode());
  }
  return {static_cast<int>(l.index()[0]), l.index()[1]};
}

Word wordOf(const Label& monomial) {
  const auto [a, k] = pareigisExponents(monomial);
  Word w;
  if (a == 1) w.push_back(Letter::Psi);
  w.insert(w.end(), static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? Letter::XiInv : Letter::Xi);
  return w;
}

std::string wordToString(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter c : w) out += c == Letter::Xi ? "ξ" : c == Letter::XiInv ? "ξ⁻¹" : "ψ";
  return out;
}

std::vector<WordTerm> rewriteSteps(const Word& w) {
  std::vector<WordTerm> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Letter x = w[i];
    const Letter y = w[i + 1];
    Word next;
    int coeff = 1;
    if (y == Letter::Psi && x != Letter::Psi) {
      next = w;
      std::swap(next[i], next[i + 1]);
      coeff = -1;
    } else if (x == Letter::Psi && y == Letter::Psi) {
      coeff = 0;
    } else if ((x == Letter::Xi && y == Letter::XiInv) || (x == Letter::XiInv && y == Letter::Xi)) {
      next.assign(w.begin(), w.begin() + static_cast<long>(i));
      next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    } else {
      continue;
    }
    out.push_back({coeff, std::move(next)});
  }
  return out;
}

Vec normalizeWord(const Word& w) {
  // Running normal form sign * psi^a xi^k; a new psi passes k xi's.
  int a = 0;
  std::int64_t k = 0;
  int sign = 1;
  for (Letter c : w) {
    switch (c) {
      case Letter::Xi:
        ++k;
        break;
      case Letter::XiInv:
        --k;
        break;
      case Letter::Psi:
        if (a == 1) return Vec();
        a = 1;
        if (k % 2 != 0) sign = -sign;
        break;
    }
  }
  return Vec(pareigisMonomial(a, k), sign);
}

namespace {

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word xiPower(std::int64_t k) {
  return Word(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? Letter::XiInv : Letter::Xi);
}

// Product in P (x) P, factorwise.
Vec tensorProduct(const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [l, c] : x) {
    auto [l1, l2] = l.split(1);
    const Word w1 = wordOf(l1);
    const Word w2 = wordOf(l2);
    for (const auto& [m, e] : y) {
      auto [m1, m2] = m.split(1);
      out += (c * e) * Vec::tensor(normalizeWord(concat(w1, wordOf(m1))),
                                   normalizeWord(concat(w2, wordOf(m2))));
    }
  }
  return out;
}

std::vector<Label> pareigisShell(int t) {
  if (t == 0) return {pareigisMonomial(0, 0), pareigisMonomial(1, 0)};
  return {pareigisMonomial(0, -t), pareigisMonomial(1, -t), pareigisMonomial(0, t),
          pareigisMonomial(1, t)};
}

}  // namespace

Bimonoid pareigisRing(int s) {
  if (s != 1 && s != -1) throw Error("pareigisRing needs s = +-1, got " + std::to_string(s));
  Space carrier(
      s == -1 ? "P" : "P+", 1,
      [](const Label& l) {
        return l.kind() == Label::Kind::Atom && l.family() == "pareigis" && l.index().size() == 2 &&
               (l.index()[0] == 0 || l.index()[0] == 1);
      },
      pareigisShell);
  const Space pp = tensorSpace(carrier, carrier);
  const Space unit = Space::unit();

  const Label one = pareigisMonomial(0, 0);
  const Label xi = pareigisMonomial(0, 1);
  const Label xiInv = pareigisMonomial(0, -1);
  const Label psi = pareigisMonomial(1, 0);
  const Vec deltaXi(Label::pair(xi, xi));
  const Vec deltaXiInv(Label::pair(xiInv, xiInv));
  const Vec deltaPsi = Vec(Label::pair(psi, one)) + Vec(Label::pair(pareigisMonomial(0, s), psi));

  LinMap mu(pp, carrier, [](const Label& l) {
    auto [a, b] = l.split(1);
    return normalizeWord(concat(wordOf(a), wordOf(b)));
  });
  LinMap eta(unit, carrier, [one](const Label&) { return Vec(one); });
  LinMap delta(carrier, pp, [=](const Label& l) {
    Vec acc(Label::pair(one, one));
    for (Letter c : wordOf(l)) {
      acc = tensorProduct(acc, c == Letter::Xi ? deltaXi : c == Letter::XiInv ? deltaXiInv : deltaPsi);
    }
    return acc;
  });
  LinMap epsilon(carrier, unit, [](const Label& l) {
    return pareigisExponents(l).first == 0 ? Vec(Label()) : Vec();
  });
  LinMap antipode(carrier, carrier, [s](const Label& l) {
    // Anti-multiplicative: letters reversed, each replaced by its image.
    const Word w = wordOf(l);
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (*it) {
        case Letter::Xi:
          out.push_back(Letter::XiInv);
          break;
        case Letter::XiInv:
          out.push_back(Letter::Xi);
          break;
        case Letter::Psi:
          out.push_back(Letter::Psi);
          out = concat(out, xiPower(-s));
          break;
      }
    }
    return normalizeWord(out);
  });
  return Bimonoid{pareigisRingName(s), carrier, mu, eta, delta, epsilon, antipode};
}

std::string pareigisRingName(int s) { return s == -1 ? "pareigis" : "pareigis-plus"; }

int pareigisSignFromName(const std::string& name) {
  if (name == "pareigis") return -1;
  if (name == "pareigis-plus") return 1;
  throw Error("unknown pareigis ring: " + name);
}

int pareigisSignOf(const Bimonoid& ring) {
  if (ring.name == "pareigis" && ring.carrier.name() == "P") return -1;
  if (ring.name == "pareigis-plus" && ring.carrier.name() == "P+") return 1;
  throw IllegalComodule("not a comodule over a pareigis ring: " + ring.name);
}

ComoduleBimonoid pareigisHopfData(int s) {
  const Coelement c = signCoelement(Bicharacter{{-1}});
  return buildDifferentialHopf(differentialComodule(GradedCarrier{1, {{{s}, 0}}}, c), c);
}

LawReport identifySemidirect(int s, int window, int ringSign) {
  const ComoduleBimonoid hb = pareigisHopfData(s);
  const Bimonoid q = semidirectProductUnchecked(hb).ring;
  const Bimonoid p = pareigisRing(ringSign);

  const Label d = hopfCarrierLabel(Label::atom("d", {s, 0}));
  const Label u = hopfUnitLabel();
  const LinMap phi = relabelMap(p.carrier, q.carrier, [d, u](const Label& l) {
    const auto [a, k] = pareigisExponents(l);
    return Label::pair(a == 1 ? d : u, monomial(k));
  });
  const LinMap phi2 = tensorMaps(phi, phi);

  LawReport r{"(I⊕D)⋊Z at s=" + std::to_string(s) + " vs " + p.name, {}};
  r.laws.push_back({"multiplication", equalOnWindow(composeMaps(p.mu, phi),
                                                    composeMaps(phi2, q.mu), window)});
  r.laws.push_back({"unit", equalOnWindow(composeMaps(p.eta, phi), q.eta, window)});
  r.laws.push_back({"comultiplication", equalOnWindow(composeMaps(p.delta, phi2),
                                                      composeMaps(phi, q.delta), window)});
  r.laws.push_back({"counit", equalOnWindow(p.epsilon, composeMaps(phi, q.epsilon), window)});
  r.laws.push_back({"antipode", equalOnWindow(composeMaps(*p.antipode, phi),
                                              composeMaps(phi, *q.antipode), window)});
  return r;
}

HComodule chainToHComodule(const ComoduleBimonoid& hb, const ChainComplex& x) {
  Label d;
  for (const Label& l : hb.h.carrier.enumerate(0)) {
    if (l.kind() == Label::Kind::Left) d = l;
  }
  if (d.kind() != Label::Kind::Left || d.inner().index().size() != 2 ||
      d.inner().index()[0] != x.step()) {
    throw IllegalChain("complex " + x.name() + " of step " + std::to_string(x.step()) +
                       " does not match the differential carrier of " + hb.h.name);
  }
  const Space carrier = x.space();
  LinMap alpha(carrier, tensorSpace(hb.ring().carrier, carrier), [x](const Label& b) {
    return Vec(Label::pair(monomial(x.degreeOf(b)), b));
  });
  LinMap chi(carrier, tensorSpace(hb.h.carrier, carrier), [x, d](const Label& b) {
    return Vec(Label::pair(hopfUnitLabel(), b)) + Vec::tensor(Vec(d), x.applyD(b));
  });
  return HComodule{Comodule::make(hb.ring(), carrier, alpha), chi};
}

namespace {

Verdict sampleVerdict(std::size_t t, const Verdict& inner) {
  Verdict v;
  v.equal = inner.equal;
  v.instances = 1;
  if (!inner.equal) {
    const Counterexample& c = *inner.counterexample;
    v.counterexample = Counterexample{Label::atom("sample", {static_cast<std::int64_t>(t)}), c.lhs, c.rhs};
  }
  return v;
}

Verdict violated(std::size_t t, const LawViolation& e) {
  Verdict v = sampleVerdict(t, e.result().verdict);
  v.equal = false;
  if (!v.counterexample) v.counterexample = Counterexample{Label::atom("sample", {static_cast<std::int64_t>(t)}), {}, {}};
  return v;
}

void accumulate(Verdict& total, const Verdict& v) {
  total.instances += v.instances;
  if (total.equal && !v.equal) {
    total.equal = false;
    total.counterexample = v.counterexample;
  }
}

}  // namespace

LawReport comparisonBattery(int s, const std::vector<ChainComplex>& samples) {
  const ComoduleBimonoid hb = pareigisHopfData(s);
  const SemidirectRing q = semidirectProductUnchecked(hb);
  Verdict back;
  Verdict forth;
  Verdict monoidal;
  std::vector<std::optional<std::pair<HComodule, Comodule>>> images(samples.size());
  for (std::size_t t = 0; t < samples.size(); ++t) {
    try {
      const HComodule b = chainToHComodule(hb, samples[t]);
      const Comodule fb = comparisonF(q, b);
      const HComodule gb = comparisonFInverse(q, fb);
      Verdict v = equalOnWindow(gb.chi, b.chi, 0);
      if (v.equal) v = equalOnWindow(gb.aComodule.coaction(), b.aComodule.coaction(), 0);
      accumulate(back, sampleVerdict(t, v));
      accumulate(forth, sampleVerdict(t, equalOnWindow(comparisonF(q, gb).coaction(), fb.coaction(), 0)));
      images[t].emplace(b, fb);
    } catch (const LawViolation& e) {
      accumulate(back, violated(t, e));
    }
  }
  for (std::size_t t = 0; t + 1 < samples.size(); ++t) {
    if (!images[t] || !images[t + 1]) continue;
    try {
      const HComodule bc = tensorHComodule(hb, images[t]->first, images[t + 1]->first);
      const Comodule lhs = comparisonF(q, bc);
      const Comodule rhs = tensorComodule(images[t]->second, images[t + 1]->second);
      accumulate(monoidal, sampleVerdict(t, equalOnWindow(lhs.coaction(), rhs.coaction(), 0)));
    } catch (const LawViolation& e) {
      accumulate(monoidal, violated(t, e));
    }
  }
  LawReport r{"comparison functor at s=" + std::to_string(s), {}};
  r.laws.push_back({"F inverse after F", back});
  r.laws.push_back({"F after F inverse", forth});
  r.laws.push_back({"F monoidal", monoidal});
  return r;
}

Comodule chainToComodule(const ChainComplex& x, int s) {
  if (s != 1 && s != -1) throw Error("chainToComodule needs s = +-1, got " + std::to_string(s));
  if (x.step() != s) {
    throw IllegalChain("complex " + x.name() + " has d of step " + std::to_string(x.step()) +
                       ", the coaction over " + pareigisRingName(s) + " needs step " +
                       std::to_string(s));
  }
  if (auto n = x.squareZeroFailure()) {
    throw IllegalChain("d∘d != 0 at degree " + std::to_string(*n) + " of " + x.name());
  }
  const Bimonoid p = pareigisRing(s);
  const Space carrier = x.space();
  LinMap beta(carrier, tensorSpace(p.carrier, carrier), [x, s](const Label& b) {
    const int n = x.degreeOf(b);
    Vec out(Label::pair(pareigisMonomial(0, n), b));
    out += Vec::tensor(Vec(pareigisMonomial(1, n - s)), x.applyD(b));
    return out;
  });
  return Comodule::make(p, carrier, beta);
}

ChainComplex comoduleToChain(const Comodule& b) {
  const int s = pareigisSignOf(b.ring());
  const Space& carrier = b.carrier();
  if (!carrier.shell(1).empty()) {
    throw IllegalComodule("comoduleToChain needs a finite carrier, got " + carrier.name());
  }
  const std::vector<Label> basis = carrier.enumerate(0);

  std::map<Label, int> degree;
  std::map<Label, Vec> dImage;
  std::map<int, ChainComplex::Basis> byDegree;
  for (const Label& l : basis) {
    Vec xiPart;
    for (const auto& [t, c] : b.coaction()(l)) {
      auto [ring, rest] = t.split(1);
      const auto [a, k] = pareigisExponents(ring);
      if (a == 0) xiPart.add(t, c);
    }
    if (xiPart.size() != 1 || xiPart.begin()->second != 1 ||
        xiPart.begin()->first.split(1).second != l) {
      throw IllegalComodule("basis label " + l.encode() +
                            " is not homogeneous: xi-part of its coaction is " + xiPart.toString());
    }
    const int n = static_cast<int>(pareigisExponents(xiPart.begin()->first.split(1).first).second);
    degree[l] = n;
    byDegree[n].push_back(l);
  }
  for (const Label& l : basis) {
    const int n = degree.at(l);
    Vec d;
    for (const auto& [t, c] : b.coaction()(l)) {
      auto [ring, rest] = t.split(1);
      const auto [a, k] = pareigisExponents(ring);
      if (a == 0) continue;
      if (k != n - s) {
        throw IllegalComodule("psi-part of the coaction of " + l.encode() + " has " +
                              ring.encode() + ", expected xi exponent " + std::to_string(n - s));
      }
      d.add(rest, c);
    }
    dImage.emplace(l, std::move(d));
  }

  ChainComplex x = [&] {
    try {
      return ChainComplex::fromLinear(
          carrier.name(), byDegree, [&dImage](const Label& l) { return dImage.at(l); }, s);
    } catch (const IllegalChain& e) {
      throw IllegalComodule(std::string("coaction does not define a complex: ") + e.what());
    }
  }();
  const Comodule back = chainToComodule(x, s);
  for (const Label& l : basis) {
    if (back.coaction()(l) != b.coaction()(l)) {
      throw IllegalComodule("coaction of " + l.encode() + " is not reproduced by its complex");
    }
  }
  return x;
}

namespace {

std::int64_t smallCoefficient(const Int& c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
    throw Error("coefficient does not fit in 64 bits: " + c.str());
  }
  return static_cast<std::int64_t>(c);
}

}  // namespace

nlohmann::json comoduleToJson(const Comodule& b) {
  const int s = pareigisSignOf(b.ring());
  nlohmann::json basis = nlohmann::json::array();
  nlohmann::json coaction = nlohmann::json::object();
  for (const Label& l : b.carrier().enumerate(0)) {
    basis.push_back(l.encode());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : b.coaction()(l)) {
      auto [ring, rest] = t.split(1);
      terms.push_back({smallCoefficient(c), ring.encode(), rest.encode()});
    }
    coaction[l.encode()] = terms;
  }
  return {{"ring", pareigisRingName(s)}, {"basis", basis}, {"coaction", coaction}};
}

Comodule comoduleFromJson(const nlohmann::json& j) {
  int s = 0;
  std::vector<Label> basis;
  std::map<Label, Vec> images;
  try {
    s = pareigisSignFromName(j.at("ring").get<std::string>());
    std::set<Label> seen;
    for (const auto& e : j.at("basis")) {
      Label l = Label::decode(e.get<std::string>());
      if (!seen.insert(l).second) throw ParseError("repeated basis label " + l.encode());
      basis.push_back(std::move(l));
    }
    const auto& coaction = j.at("coaction");
    for (const auto& [key, terms] : coaction.items()) {
      const Label l = Label::decode(key);
      if (!seen.count(l)) throw ParseError("coaction given for unknown label " + key);
      Vec v;
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3) throw ParseError("coaction term must be [coeff, ring, label]");
        const Label ring = Label::decode(t.at(1).get<std::string>());
        pareigisExponents(ring);
        const Label rest = Label::decode(t.at(2).get<std::string>());
        if (!seen.count(rest)) throw ParseError("coaction term uses unknown label " + rest.encode());
        v.add(Label::pair(ring, rest), Int(t.at(0).get<std::int64_t>()));
      }
      images[l] = std::move(v);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed comodule JSON: ") + e.what());
  }
  const Bimonoid p = pareigisRing(s);
  const Space carrier = Space::finite("B", basis);
  auto shared = std::make_shared<const std::map<Label, Vec>>(std::move(images));
  LinMap beta(carrier, tensorSpace(p.carrier, carrier), [shared](const Label& l) {
    auto it = shared->find(l);
    return it == shared->end() ? Vec() : it->second;
  });
  return Comodule::make(p, carrier, beta);
}

}  // namespace hopf
