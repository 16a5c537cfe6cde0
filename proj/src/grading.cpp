#include "hopf/grading.hpp"

#include <algorithm>
#include <cstdlib>

#include "hopf/errors.hpp"

namespace hopf {

int Bicharacter::evaluate(const Degree& g, const Degree& h) const {
  if (g.size() != rank() || h.size() != rank()) {
    throw RankMismatch("bicharacter of rank " + std::to_string(rank()) +
                       " applied to degrees of rank " + std::to_string(g.size()) + "," +
                       std::to_string(h.size()));
  }
  bool negative = false;
  for (std::size_t c = 0; c < rank(); ++c) {
    if (kappas[c] == -1 && ((g[c] * h[c]) & 1)) negative = !negative;
  }
  return negative ? -1 : 1;
}

Label monomial(Degree g) { return Label::atom("x", std::move(g)); }

Degree monomialDegree(const Label& l) {
  if (l.kind() != Label::Kind::Atom || l.family() != "x") {
    throw Error("not a monomial label: " + l.encode());
  }
  return l.index();
}

namespace {

// All g in Z^r with max |g_c| == t, lexicographic.
std::vector<Label> cubeShell(std::size_t rank, int t) {
  std::vector<Label> out;
  Degree g(rank, -t);
  while (true) {
    std::int64_t m = 0;
    for (auto v : g) m = std::max<std::int64_t>(m, std::llabs(v));
    if (m == t) out.push_back(monomial(g));
    std::size_t c = rank;
    while (c > 0) {
      --c;
      if (g[c] < t) {
        ++g[c];
        for (std::size_t d = c + 1; d < rank; ++d) g[d] = -t;
        break;
      }
      if (c == 0) return out;
    }
    if (rank == 0) return out;
  }
}

}  // namespace

Bimonoid laurentHopf(std::size_t rank) {
  if (rank < 1) throw Error("laurentHopf needs rank >= 1");
  const std::string rs = std::to_string(rank);
  Space carrier(
      "Z[x^±1]" + (rank == 1 ? std::string() : "^" + rs), 1,
      [rank](const Label& l) {
        return l.kind() == Label::Kind::Atom && l.family() == "x" && l.index().size() == rank;
      },
      [rank](int t) { return cubeShell(rank, t); });
  const Space hh = tensorSpace(carrier, carrier);
  const Space unit = Space::unit();

  LinMap mu(hh, carrier, [](const Label& l) {
    auto [a, b] = l.split(1);
    Degree g = a.index();
    const Degree& h = b.index();
    for (std::size_t c = 0; c < g.size(); ++c) g[c] += h[c];
    return Vec(monomial(std::move(g)));
  });
  LinMap eta(unit, carrier, [rank](const Label&) { return Vec(monomial(Degree(rank, 0))); });
  LinMap delta(carrier, hh, [](const Label& l) { return Vec(Label::pair(l, l)); });
  LinMap epsilon(carrier, unit, [](const Label&) { return Vec(Label()); });
  LinMap antipode(carrier, carrier, [](const Label& l) {
    Degree g = l.index();
    for (auto& v : g) v = -v;
    return Vec(monomial(std::move(g)));
  });
  return Bimonoid{"laurent(" + rs + ")", carrier, mu, eta, delta, epsilon, antipode};
}

Coelement signCoelement(const Bicharacter& b) {
  Bimonoid ring = laurentHopf(b.rank());
  return Coelement{ring, [b](const Label& x, const Label& y) {
                     return Int(b.evaluate(x.index(), y.index()));
                   }};
}

// ---------------------------------------------------------------------------
// Graded modules

GradedModule GradedModule::normalized() const {
  std::map<Degree, std::int64_t> ranks;
  for (const auto& c : components) {
    if (c.degree.size() != gradingRank) {
      throw RankMismatch("component degree of rank " + std::to_string(c.degree.size()) +
                         " in a module graded by Z^" + std::to_string(gradingRank));
    }
    if (c.rank < 0) throw Error("negative component rank");
    ranks[c.degree] += c.rank;
  }
  GradedModule out{gradingRank, {}, family};
  for (const auto& [g, r] : ranks) {
    if (r > 0) out.components.push_back({g, r});
  }
  return out;
}

Label GradedModule::basisLabel(const Degree& g, std::int64_t i) const {
  Degree idx = g;
  idx.push_back(i);
  return Label::atom(family, std::move(idx));
}

std::vector<Label> GradedModule::basis() const {
  std::vector<Label> out;
  for (const auto& c : normalized().components) {
    for (std::int64_t i = 0; i < c.rank; ++i) out.push_back(basisLabel(c.degree, i));
  }
  return out;
}

std::string GradedModule::spaceName() const {
  std::string s = family + "<";
  bool first = true;
  for (const auto& c : normalized().components) {
    if (!first) s += ";";
    first = false;
    s += "(";
    for (std::size_t i = 0; i < c.degree.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c.degree[i]);
    }
    s += "):" + std::to_string(c.rank);
  }
  return s + ">";
}

nlohmann::json GradedModule::toJson() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : normalized().components) {
    comps.push_back({{"degree", c.degree}, {"rank", c.rank}});
  }
  return {{"rank", gradingRank}, {"components", comps}};
}

GradedModule GradedModule::fromJson(const nlohmann::json& j) {
  GradedModule m;
  m.gradingRank = j.at("rank").get<std::size_t>();
  for (const auto& c : j.at("components")) {
    m.components.push_back({c.at("degree").get<Degree>(), c.at("rank").get<std::int64_t>()});
  }
  return m.normalized();
}

Space sigmaFunctor(const GradedModule& m) { return Space::finite(m.spaceName(), m.basis()); }

Comodule gradedToComodule(const GradedModule& m, const Bimonoid& laurent) {
  const Space carrier = sigmaFunctor(m);
  const std::size_t r = m.gradingRank;
  LinMap coaction(carrier, tensorSpace(laurent.carrier, carrier), [r](const Label& b) {
    const auto& idx = b.index();
    return Vec(Label::pair(monomial(Degree(idx.begin(), idx.begin() + static_cast<long>(r))), b));
  });
  return Comodule::make(laurent, carrier, coaction);
}

Comodule gradedToComodule(const GradedModule& m) {
  return gradedToComodule(m, laurentHopf(m.gradingRank));
}

std::map<Degree, LinMap> comoduleToGradedProjections(const Comodule& x) {
  const Space& carrier = x.carrier();
  const std::vector<Label> basis = carrier.enumerate(0);
  if (!carrier.shell(1).empty()) {
    throw IllegalComodule("graded projections need a finite carrier, got " + carrier.name());
  }
  std::map<Degree, std::map<Label, Vec>> table;
  for (const auto& b : basis) {
    for (const auto& [l, c] : x.coaction()(b)) {
      auto [ring, rest] = l.split(1);
      table[monomialDegree(ring)][b].add(rest, c);
    }
  }
  std::map<Degree, LinMap> out;
  for (auto& [g, rows] : table) {
    auto shared = std::make_shared<const std::map<Label, Vec>>(std::move(rows));
    out.emplace(g, LinMap(carrier, carrier, [shared](const Label& b) {
                  auto it = shared->find(b);
                  return it == shared->end() ? Vec() : it->second;
                }));
  }

  for (const auto& b : basis) {
    Vec sum;
    for (const auto& [g, p] : out) sum += p(b);
    if (sum != Vec(b)) {
      throw IllegalComodule("graded projections do not sum to the identity at " + b.encode() +
                            ": " + sum.toString());
    }
    for (const auto& [g, pg] : out) {
      const Vec pgb = pg(b);
      for (const auto& [h, ph] : out) {
        const Vec composite = ph(pgb);
        const Vec expected = g == h ? pgb : Vec();
        if (composite != expected) {
          throw IllegalComodule("graded projections are not orthogonal idempotents at " +
                                b.encode());
        }
      }
    }
  }
  return out;
}

LinMap coactionFromProjections(const Comodule& x, const std::map<Degree, LinMap>& projections) {
  auto shared = std::make_shared<const std::map<Degree, LinMap>>(projections);
  return LinMap(x.carrier(), x.coaction().cod(), [shared](const Label& b) {
    Vec out;
    for (const auto& [g, p] : *shared) out += Vec::tensor(Vec(monomial(g)), p(b));
    return out;
  });
}

}  // namespace hopf
