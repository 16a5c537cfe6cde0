#include <gtest/gtest.h>

#include <set>

#include "hopf/errors.hpp"
#include "hopf/grading.hpp"
#include "hopf/window.hpp"

using namespace hopf;

namespace {

Label x(std::int64_t k) { return monomial(k); }

}  // namespace

TEST(Vec, ArithmeticDropsZeros) {
  Vec v(x(1), 2);
  v += Vec(x(2), -1);
  v -= Vec(x(1), 2);
  EXPECT_EQ(v, Vec(x(2), -1));
  EXPECT_TRUE((v - v).isZero());
  EXPECT_EQ((Int(3) * v).coefficient(x(2)), -3);
  EXPECT_EQ(Vec().toString(), "0");
}

TEST(Vec, TensorIsBilinear) {
  const Vec a = Vec(x(0)) + Vec(x(1), 2);
  const Vec b = Vec(x(5), -1);
  const Vec t = Vec::tensor(a, b);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.coefficient(Label::pair(x(1), x(5))), -2);
}

TEST(Space, WindowsArePrefixes) {
  const Space a = laurentHopf(1).carrier;
  const Space aa = tensorSpace(a, a);
  for (int k = 0; k < 4; ++k) {
    const auto small = aa.enumerate(k);
    const auto big = aa.enumerate(k + 1);
    ASSERT_LE(small.size(), big.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
    EXPECT_EQ(small.size(), static_cast<std::size_t>((2 * k + 1) * (2 * k + 1)));
    EXPECT_EQ(std::set<Label>(small.begin(), small.end()).size(), small.size());
  }
}

TEST(Space, UnitAbsorbs) {
  const Space a = laurentHopf(1).carrier;
  EXPECT_TRUE(sameSpace(tensorSpace(Space::unit(), a), a));
  EXPECT_TRUE(sameSpace(tensorSpace(a, Space::unit()), a));
  EXPECT_EQ(Space::unit().enumerate(3).size(), 1u);
}

TEST(Space, DirectSumTagsSummands) {
  const Space s = directSumSpace(Space::finite("P", {Label::atom("p", {0})}),
                                 Space::finite("Q", {Label::atom("q", {0}), Label::atom("q", {1})}));
  const auto labels = s.enumerate(0);
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_EQ(labels[0].kind(), Label::Kind::Left);
  EXPECT_EQ(labels[2].kind(), Label::Kind::Right);
  EXPECT_TRUE(s.valid(labels[1]));
  EXPECT_FALSE(s.valid(Label::atom("q", {0})));
}

TEST(LinMap, ComposeChecksSpaces) {
  const Bimonoid h = laurentHopf(1);
  EXPECT_THROW(composeMaps(h.mu, h.mu), SpaceMismatch);
  const LinMap round = compose({h.mu, h.delta});
  EXPECT_EQ(round(x(3)), Vec(x(6)));
}

TEST(LinMap, PermuteMovesFactors) {
  const Space a = laurentHopf(1).carrier;
  const LinMap p = permuteMap({a, a, a}, {2, 0, 1});
  const Label in = Label::fromFactors({x(0), x(1), x(2)});
  EXPECT_EQ(p(in), Vec(Label::fromFactors({x(2), x(0), x(1)})));
  EXPECT_EQ(swapMap(a, a)(Label::pair(x(1), x(2))), Vec(Label::pair(x(2), x(1))));
}

TEST(Window, ParallelMatchesSerial) {
  const Bimonoid h = laurentHopf(1);
  const LinMap id = LinMap::identity(h.carrier);
  const LinMap twisted(h.carrier, h.carrier, [](const Label& l) {
    return l.index()[0] > 2 || l.index()[0] < -1 ? Vec(l, 2) : Vec(l);
  });
  for (int k = 0; k <= 6; ++k) {
    const Verdict par = equalOnWindow(id, twisted, k);
    const Verdict ser = equalOnWindowSerial(id, twisted, k);
    EXPECT_EQ(par.equal, ser.equal);
    EXPECT_EQ(par.instances, ser.instances);
    ASSERT_EQ(par.counterexample.has_value(), ser.counterexample.has_value());
    if (par.counterexample) EXPECT_EQ(par.counterexample->label, ser.counterexample->label);
  }
  const Verdict v = equalOnWindow(id, twisted, 3);
  ASSERT_FALSE(v.equal);
  EXPECT_EQ(v.counterexample->label, x(-2));
}

TEST(Window, FirstFailureIsMinimal) {
  for (std::size_t bad : {0u, 1u, 17u, 999u}) {
    auto ok = [bad](std::size_t i) { return i < bad || i % 3 == 1; };
    EXPECT_EQ(firstFailure(1000, ok), firstFailureSerial(1000, ok));
  }
  EXPECT_EQ(firstFailure(50, [](std::size_t) { return true; }), 50u);
}

TEST(Window, ExceptionsPropagate) {
  EXPECT_THROW(firstFailure(100,
                            [](std::size_t i) -> bool {
                              if (i == 42) throw Error("boom");
                              return true;
                            }),
               Error);
}
