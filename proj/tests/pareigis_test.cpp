#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <set>

#include "hopf/errors.hpp"
#include "hopf/grading.hpp"
#include "hopf/pareigis.hpp"

using namespace hopf;

namespace {

constexpr Letter X = Letter::Xi;
constexpr Letter Y = Letter::XiInv;
constexpr Letter P = Letter::Psi;

Label m(int a, std::int64_t k) { return pareigisMonomial(a, k); }
Label pp(const Label& a, const Label& b) { return Label::pair(a, b); }
int parity(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// Every normal form reachable from w by some order of rewrites, as
// (coeff, word) with zero terms collapsed to (0, {}).
std::set<std::pair<int, Word>> terminals(const Word& w, std::map<Word, std::set<std::pair<int, Word>>>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const auto steps = rewriteSteps(w);
  std::set<std::pair<int, Word>> out;
  if (steps.empty()) out.insert({1, w});
  for (const auto& t : steps) {
    if (t.coeff == 0) {
      out.insert(std::make_pair(0, Word{}));
      continue;
    }
    for (const auto& [c, v] : terminals(t.word, memo)) out.insert({c * t.coeff, v});
  }
  memo[w] = out;
  return out;
}

}  // namespace

TEST(NormalizeWord, Examples) {
  EXPECT_EQ(normalizeWord({X, P, Y}), Vec(m(1, 0), -1));
  EXPECT_TRUE(normalizeWord({P, P}).isZero());
  EXPECT_EQ(normalizeWord({X, Y}), Vec(m(0, 0)));
  EXPECT_EQ(normalizeWord({}), Vec(m(0, 0)));
  EXPECT_EQ(normalizeWord({Y, Y, P, X}), Vec(m(1, -1)));
  EXPECT_EQ(wordToString({X, P, Y}), "ξψξ⁻¹");
}

TEST(NormalizeWord, RewritingIsConfluent) {
  std::map<Word, std::set<std::pair<int, Word>>> memo;
  std::size_t words = 0;
  std::vector<Word> layer{{}};
  for (int len = 0; len <= 8; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      const auto ends = terminals(w, memo);
      ASSERT_EQ(ends.size(), 1u) << wordToString(w);
      const auto& [c, v] = *ends.begin();
      const Vec nf = normalizeWord(w);
      if (c == 0) {
        EXPECT_TRUE(nf.isZero()) << wordToString(w);
      } else {
        ASSERT_EQ(nf.size(), 1u) << wordToString(w);
        EXPECT_EQ(nf.begin()->second, c) << wordToString(w);
        EXPECT_EQ(wordOf(nf.begin()->first), v) << wordToString(w);
      }
      ++words;
      for (Letter l : {X, Y, P}) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  EXPECT_EQ(words, 9841u);
}

TEST(PareigisRing, GeneratorData) {
  const Bimonoid p = pareigisRing(-1);
  EXPECT_EQ(p.carrier.name(), "P");
  EXPECT_EQ(p.delta(m(1, 0)), Vec(pp(m(1, 0), m(0, 0))) + Vec(pp(m(0, -1), m(1, 0))));
  EXPECT_EQ(p.delta(m(1, 1)), Vec(pp(m(1, 1), m(0, 1))) + Vec(pp(m(0, 0), m(1, 1))));
  EXPECT_TRUE(p.epsilon(m(1, 0)).isZero());
  EXPECT_EQ(p.epsilon(m(0, 1)), Vec(Label()));
  EXPECT_EQ(p.antipode->operator()(m(1, 0)), Vec(m(1, 1)));
  const Bimonoid q = pareigisRing(1);
  EXPECT_EQ(q.carrier.name(), "P+");
  EXPECT_EQ(q.delta(m(1, 0)), Vec(pp(m(1, 0), m(0, 0))) + Vec(pp(m(0, 1), m(1, 0))));
  EXPECT_EQ(q.antipode->operator()(m(1, 0)), Vec(m(1, -1)));
  EXPECT_THROW(pareigisRing(0), Error);
}

TEST(PareigisRing, ClosedForms) {
  for (int s : {-1, 1}) {
    const Bimonoid p = pareigisRing(s);
    for (std::int64_t k = -6; k <= 6; ++k) {
      EXPECT_EQ(p.delta(m(0, k)), Vec(pp(m(0, k), m(0, k))));
      EXPECT_EQ(p.delta(m(1, k)), Vec(pp(m(1, k), m(0, k))) + Vec(pp(m(0, s + k), m(1, k))));
      EXPECT_EQ((*p.antipode)(m(0, k)), Vec(m(0, -k)));
      EXPECT_EQ((*p.antipode)(m(1, k)), Vec(m(1, -k - s), parity(k)));
      for (std::int64_t l = -3; l <= 3; ++l) {
        for (int a : {0, 1}) {
          EXPECT_EQ(p.mu(pp(m(a, k), m(0, l))), Vec(m(a, k + l)));
          if (a == 0) {
            EXPECT_EQ(p.mu(pp(m(0, k), m(1, l))), Vec(m(1, k + l), parity(k)));
          } else {
            EXPECT_TRUE(p.mu(pp(m(1, k), m(1, l))).isZero());
          }
        }
      }
    }
  }
}

TEST(PareigisRing, HopfSuiteAtWindowEight) {
  const auto start = std::chrono::steady_clock::now();
  for (int s : {-1, 1}) {
    const LawReport r = checkBialgebraLaws(pareigisRing(s), plainBraiding(), 8);
    EXPECT_TRUE(r.ok()) << r.toJson().dump();
    EXPECT_NE(r.find("bimonoid interchange"), nullptr);
    EXPECT_NE(r.find("left antipode"), nullptr);
    EXPECT_NE(r.find("right antipode"), nullptr);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
}

TEST(Identification, BothSigns) {
  for (int s : {-1, 1}) {
    const LawReport r = identifySemidirect(s, 6);
    EXPECT_TRUE(r.ok()) << r.toJson().dump();
    EXPECT_EQ(r.laws.size(), 5u);
  }
}

TEST(Identification, CrossCheckDiffersAtPsi) {
  const LawReport r = identifySemidirect(-1, 6, 1);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.find("multiplication")->verdict.equal);
  EXPECT_TRUE(r.find("unit")->verdict.equal);
  EXPECT_TRUE(r.find("counit")->verdict.equal);
  const LawResult* f = r.firstFailure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->law, "comultiplication");
  EXPECT_EQ(f->verdict.counterexample->label, m(1, 0));
}

namespace {

// Z --2--> Z in degrees 1, 0, labels e[n, 0].
ChainComplex timesTwo(int step) {
  if (step == 1) return ChainComplex::standard(0, {1, 1}, {{1, Matrix::fromRows({{2}}, 1)}});
  return ChainComplex::standard(0, {1, 1}, {{0, Matrix::fromRows({{2}}, 1)}}, -1);
}

Label e(int n) { return Label::atom("e", {n, 0}); }

}  // namespace

TEST(ChainToComodule, TimesTwoExample) {
  const Comodule b = chainToComodule(timesTwo(1), 1);
  EXPECT_EQ(b.coaction()(e(1)), Vec(pp(m(0, 1), e(1))) + Vec(pp(m(1, 0), e(0)), 2));
  EXPECT_EQ(b.coaction()(e(0)), Vec(pp(m(0, 0), e(0))));
  EXPECT_TRUE(checkComoduleLaws(b, 0).ok());
  // Cochain direction over P.
  const Comodule c = chainToComodule(timesTwo(-1), -1);
  EXPECT_EQ(c.coaction()(e(0)), Vec(pp(m(0, 0), e(0))) + Vec(pp(m(1, 1), e(1)), 2));
}

TEST(ChainToComodule, StepMustMatch) {
  EXPECT_THROW(chainToComodule(timesTwo(1), -1), IllegalChain);
  EXPECT_THROW(chainToComodule(timesTwo(-1), 1), IllegalChain);
}

TEST(ChainToComodule, ZeroDifferentialIsTheGrading) {
  const ChainComplex x = ChainComplex::standard(-1, {2, 0, 1}, {});
  const Comodule b = chainToComodule(x, 1);
  const Comodule g = gradedToComodule(GradedModule{1, {{{-1}, 2}, {{1}, 1}}});
  for (const Label& l : x.space().enumerate(0)) {
    Vec included;
    for (const auto& [t, c] : g.coaction()(l)) {
      auto [ring, rest] = t.split(1);
      included.add(pp(m(0, monomialDegree(ring)[0]), rest), c);
    }
    EXPECT_EQ(b.coaction()(l), included);
  }
}

TEST(ComoduleToChain, ComponentExtraction) {
  const Bimonoid p = pareigisRing(1);
  const Label u = Label::atom("u", {});
  const Label v = Label::atom("v", {});
  const Space carrier = Space::finite("B", {u, v});
  const Comodule b = Comodule::make(p, carrier, LinMap(carrier, tensorSpace(p.carrier, carrier), [=](const Label& l) {
    return l == u ? Vec(pp(m(0, 1), u)) + Vec(pp(m(1, 0), v)) : Vec(pp(m(0, 0), v));
  }));
  const ChainComplex x = comoduleToChain(b);
  EXPECT_EQ(x.degreeOf(u), 1);
  EXPECT_EQ(x.degreeOf(v), 0);
  EXPECT_EQ(x.applyD(u), Vec(v));
  EXPECT_TRUE(x.applyD(v).isZero());
}

TEST(ComoduleToChain, RejectsInhomogeneousBasis) {
  // a = u + v, b = v with u in degree 1, v in degree 0: legal, but the
  // basis labels are not homogeneous.
  const Bimonoid p = pareigisRing(1);
  const Label a = Label::atom("a", {});
  const Label b = Label::atom("b", {});
  const Space carrier = Space::finite("B", {a, b});
  const Comodule c = Comodule::make(p, carrier, LinMap(carrier, tensorSpace(p.carrier, carrier), [=](const Label& l) {
    if (l == b) return Vec(pp(m(0, 0), b));
    return Vec(pp(m(0, 1), a)) - Vec(pp(m(0, 1), b)) + Vec(pp(m(0, 0), b));
  }));
  EXPECT_THROW(comoduleToChain(c), IllegalComodule);
}

TEST(ComoduleToChain, RejectsMisplacedPsi) {
  const Bimonoid p = pareigisRing(1);
  const Label u = Label::atom("u", {});
  const Label v = Label::atom("v", {});
  const Space carrier = Space::finite("B", {u, v});
  const Comodule b = Comodule::unchecked(p, carrier, LinMap(carrier, tensorSpace(p.carrier, carrier), [=](const Label& l) {
    return l == u ? Vec(pp(m(0, 1), u)) + Vec(pp(m(1, 3), v)) : Vec(pp(m(0, 0), v));
  }));
  EXPECT_THROW(comoduleToChain(b), IllegalComodule);
  const Comodule notPareigis = gradedToComodule(GradedModule{1, {{{0}, 1}}});
  EXPECT_THROW(comoduleToChain(notPareigis), IllegalComodule);
}

TEST(Equivalence, RoundTripsOnRandomComplexes) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const int s = t % 2 == 0 ? 1 : -1;
    const ChainComplex x = randomComplex(rng, 7, 4, s);
    const Comodule b = chainToComodule(x, s);
    const ChainComplex y = comoduleToChain(b);
    ASSERT_TRUE(sameComplex(x, y)) << x.toJson().dump();
    const Comodule b2 = chainToComodule(y, s);
    EXPECT_TRUE(equalOnWindow(b.coaction(), b2.coaction(), 0).equal);
  }
}

TEST(Equivalence, ChainMapsAreComoduleMorphisms) {
  std::mt19937_64 rng(7);
  int nonChain = 0;
  for (int t = 0; t < 30; ++t) {
    const ChainComplex x = randomComplex(rng);
    const ChainComplex y = randomComplex(rng);
    const ChainComplex z = randomComplex(rng);
    const ChainMap f = randomChainMap(rng, x, y);
    const ChainMap g = randomChainMap(rng, y, z);
    const Comodule bx = chainToComodule(x, 1);
    const Comodule by = chainToComodule(y, 1);
    const Comodule bz = chainToComodule(z, 1);
    EXPECT_TRUE(checkComoduleMorphism(f.asLinMap(), bx, by, 0).equal);
    const LinMap gf = composeMaps(f.asLinMap(), g.asLinMap());
    EXPECT_TRUE(checkComoduleMorphism(gf, bx, bz, 0).equal);
    EXPECT_TRUE(equalOnWindow(gf, composeChainMaps(f, g).asLinMap(), 0).equal);
    const ChainMap h = randomGradedMap(rng, x, y);
    if (h.chainMapFailure()) {
      EXPECT_FALSE(checkComoduleMorphism(h.asLinMap(), bx, by, 0).equal);
      ++nonChain;
    }
  }
  EXPECT_GT(nonChain, 0);
}

TEST(ComoduleJson, RoundTrip) {
  const Comodule b = chainToComodule(timesTwo(1), 1);
  const auto j = comoduleToJson(b);
  EXPECT_EQ(j.at("ring"), "pareigis-plus");
  EXPECT_EQ(j.at("basis").size(), 2u);
  const Comodule c = comoduleFromJson(j);
  EXPECT_EQ(comoduleToJson(c), j);
  const ChainComplex x = comoduleToChain(c);
  EXPECT_EQ(x.d(1), Matrix::fromRows({{2}}, 1));
}

TEST(ComoduleJson, Errors) {
  EXPECT_THROW(comoduleFromJson(nlohmann::json::parse(R"({"ring":"nope","basis":[],"coaction":{}})")), ParseError);
  EXPECT_THROW(comoduleFromJson(nlohmann::json::parse(R"({"ring":"pareigis","basis":["u[]"],"coaction":{"u[]":[[1,"x[0]","u[]"]]}})")),
               ParseError);
  // Counit fails.
  EXPECT_THROW(comoduleFromJson(nlohmann::json::parse(R"({"ring":"pareigis","basis":["u[]"],"coaction":{"u[]":[[2,"pareigis[0,0]","u[]"]]}})")),
               IllegalComodule);
}

TEST(Comparison, BatteryOnRandomComplexes) {
  for (int s : {-1, 1}) {
    std::mt19937_64 rng(100 + s);
    std::vector<ChainComplex> samples;
    for (int t = 0; t < 10; ++t) samples.push_back(randomComplex(rng, 4, 2, s));
    const LawReport r = comparisonBattery(s, samples);
    EXPECT_TRUE(r.ok()) << r.toJson().dump();
    EXPECT_EQ(r.find("F monoidal")->verdict.instances, 9u);
  }
}

TEST(Comparison, StepMustMatchCarrier) {
  EXPECT_THROW(chainToHComodule(pareigisHopfData(1), timesTwo(-1)), IllegalChain);
}
