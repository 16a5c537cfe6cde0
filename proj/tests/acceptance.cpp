// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// integer equalities; the only numeric tolerance is the runtime bound of
// criterion 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hopf/chains.hpp"
#include "hopf/diffhopf.hpp"
#include "hopf/grading.hpp"
#include "hopf/pareigis.hpp"
#include "hopf/semidirect.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

constexpr double kHopfSuiteSeconds = 10.0;
constexpr int kHopfWindow = 8;
constexpr int kCoelementWindow = 8;
constexpr int kIdentifyWindow = 6;
constexpr int kSemidirectWindow = 6;
constexpr int kRoundTrips = 100;
constexpr int kComparisonSamples = 50;
constexpr int kSampledMaps = 100;
constexpr int kComonadComplexes = 100;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const LawReport& r) {
    if (const LawResult* f = r.firstFailure()) require(false, r.subject + ": " + toJson(*f).dump());
  }
};

Outcome hopfSuite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int s : {-1, 1}) {
    const LawReport r = checkBialgebraLaws(pareigisRing(s), plainBraiding(), kHopfWindow);
    o.require(r);
    for (const char* law : {"associativity", "left unit", "right unit", "coassociativity", "left counit",
                            "right counit", "bimonoid interchange", "left antipode", "right antipode"}) {
      o.require(r.find(law) != nullptr, std::string("missing law ") + law);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t << "runtime " << secs << " s";
  o.require(secs < kHopfSuiteSeconds, t.str());
  if (o.ok) o.detail = t.str();
  return o;
}

Outcome coelementAxioms() {
  Outcome o;
  for (int kappa : {-1, 1}) o.require(checkCoelement(signCoelement(Bicharacter{{kappa}}), kCoelementWindow));
  const Coelement perturbed{laurentHopf(1), [](const Label& x, const Label& y) {
                              return Int((x.index()[0] + y.index()[0]) % 2 == 0 ? 1 : -1);
                            }};
  const LawReport r = checkCoelement(perturbed, kCoelementWindow);
  const LawResult* f = r.firstFailure();
  o.require(f != nullptr && f->verdict.counterexample.has_value(), "perturbed coelement not rejected");
  if (o.ok) o.detail = "perturbed rejected: " + toJson(*f).dump();
  return o;
}

Outcome identification() {
  Outcome o;
  for (int s : {-1, 1}) {
    const LawReport r = identifySemidirect(s, kIdentifyWindow);
    o.require(r);
    o.require(r.laws.size() == 5, "expected five structure maps");
  }
  return o;
}

Outcome semidirectTheorem() {
  Outcome o;
  for (int s : {-3, -1, 1, 3}) {
    const ComoduleBimonoid hb = pareigisHopfData(s);
    try {
      const SemidirectRing q = semidirectProduct(hb, kSemidirectWindow);
      o.require(checkBialgebraLaws(q.ring, plainBraiding(), kSemidirectWindow));
      semidirectAntipode(hb, kSemidirectWindow);
    } catch (const LawViolation& e) {
      o.require(false, "s=" + std::to_string(s) + ": " + toJson(e.result()).dump());
    }
  }
  return o;
}

Outcome equivalenceRoundTrip() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kRoundTrips; ++t) {
    const int s = t % 2 == 0 ? 1 : -1;
    const ChainComplex x = randomComplex(rng, 7, 4, s);
    const Comodule b = chainToComodule(x, s);
    const ChainComplex y = comoduleToChain(b);
    o.require(sameComplex(x, y), "chain round trip differs at trial " + std::to_string(t));
    o.require(equalOnWindow(chainToComodule(y, s).coaction(), b.coaction(), 0).equal,
              "comodule round trip differs at trial " + std::to_string(t));
  }
  for (int s : {-1, 1}) {
    std::vector<ChainComplex> samples;
    for (int t = 0; t < kComparisonSamples / 2; ++t) samples.push_back(randomComplex(rng, 7, 4, s));
    o.require(comparisonBattery(s, samples));
  }
  return o;
}

Outcome carrierDecision() {
  Outcome o;
  std::vector<GradedCarrier::Summand> pool;
  for (std::int64_t g = -2; g <= 2; ++g) {
    for (std::int64_t order : {0, 2, 3, 4}) pool.push_back({{g}, order});
  }
  std::size_t carriers = 0;
  for (int kappa : {-1, 1}) {
    const Bicharacter b{{kappa}};
    auto agree = [&](const std::vector<GradedCarrier::Summand>& s) {
      ++carriers;
      o.require(checkDifferentialCarrier(GradedCarrier{1, s}, b).accepted ==
                    oracle::braidingIsMinusOneOracle(s, b),
                "disagreement with the oracle on " + GradedCarrier{1, s}.toJson().dump());
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
      agree({pool[i]});
      for (std::size_t j = i; j < pool.size(); ++j) {
        agree({pool[i], pool[j]});
        for (std::size_t k = j; k < pool.size(); ++k) agree({pool[i], pool[j], pool[k]});
      }
    }
  }
  for (std::int64_t s = -5; s <= 5; ++s) {
    o.require(checkDifferentialCarrier(GradedCarrier{1, {{{s}, 0}}}, Bicharacter{{-1}}).accepted == (s % 2 != 0),
              "single Z summand at degree " + std::to_string(s));
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t q : {2, 3, 5, 7}) {
      std::int64_t pn = 1;
      for (int n = 1; n <= 4; ++n) {
        pn *= p;
        std::int64_t qm = 1;
        for (int m = 1; m <= 4; ++m) {
          qm *= q;
          o.require(cyclicTensor(pn, qm) == oracle::tensorOrderOracle(pn, qm),
                    "cyclicTensor(" + std::to_string(pn) + ", " + std::to_string(qm) + ")");
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(carriers) + " carriers";
  return o;
}

Outcome dgabStructure() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 30; ++t) {
    const ChainComplex a = randomComplex(rng, 5, 3);
    const ChainComplex b = randomComplex(rng, 5, 3);
    const ChainComplex ab = tensorChains(a, b);
    o.require(!ab.squareZeroFailure(), "d^2 != 0 on a tensor");
    const ChainMap s = chainSymmetry(a, b);
    o.require(!s.chainMapFailure(), "symmetry is not a chain map");
    o.require(sameChainMap(composeChainMaps(s, chainSymmetry(b, a)), ChainMap::identity(ab)),
              "symmetry squared is not the identity");
  }
  for (int t = 0; t < kSampledMaps; ++t) {
    const ChainComplex a = randomComplex(rng, 3, 2);
    const ChainComplex b = randomComplex(rng, 3, 2);
    const ChainComplex c = randomComplex(rng, 4, 2);
    const ChainMap f = randomChainMap(rng, tensorChains(a, b), c);
    const ChainMap g = curry(f, a, b);
    o.require(sameChainMap(uncurry(g, b, c), f), "uncurry(curry f) != f");
    o.require(sameChainMap(curry(uncurry(g, b, c), a, b), g), "curry(uncurry g) != g");
  }
  for (int t = 0; t < 25; ++t) {
    o.require(checkAdjointTriple(randomComplex(rng).forget(), randomComplex(rng)));
  }
  for (int t = 0; t < kComonadComplexes; ++t) {
    const ChainComplex x = randomComplex(rng);
    const ChainComplex y = randomComplex(rng);
    o.require(comonadComparison(x, {randomChainMap(rng, x, y)}));
  }
  return o;
}

Outcome bicomplexSquares() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  int rejected = 0;
  for (int kappa : {-1, 1}) {
    for (int s : {-1, 1}) {
      for (int t = 0; t < 25; ++t) {
        Bicomplex b = randomBicomplex(rng, kappa, s);
        const SecondDifferentialResult r = secondDifferential(b);
        o.require(r.legality);
        o.require(checkComoduleLaws(r.coaction, 0));
        bool nonzero = false;
        for (const auto& [nm, m] : b.dPrime) {
          if (!(b.dAt(nm.first - b.shift(), nm.second - 1) * m).isZero()) nonzero = true;
        }
        if (!nonzero) continue;
        for (auto& [nm, m] : b.dPrime) {
          if (nm.first % 2 != 0) m = -m;
        }
        bool threw = false;
        try {
          secondDifferential(b);
        } catch (const SquareViolation&) {
          threw = true;
        }
        o.require(threw, "wrong square law accepted (kappa " + std::to_string(kappa) + ")");
        ++rejected;
      }
    }
  }
  o.require(rejected > 0, "no nontrivial squares sampled");
  if (o.ok) o.detail = std::to_string(rejected) + " wrong squares rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hopf suite of P and P+ at window 8", hopfSuite},
      {"coelement axioms and perturbed rejection", coelementAxioms},
      {"semidirect product is the Pareigis ring", identification},
      {"semidirect products are Hopf at window 6", semidirectTheorem},
      {"chains and comodules round trip", equivalenceRoundTrip},
      {"carrier decision agrees with the oracle", carrierDecision},
      {"DG abelian group structure", dgabStructure},
      {"bicomplex square laws", bicomplexSquares},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
