#include <gtest/gtest.h>

#include "hopf/errors.hpp"
#include "hopf/label.hpp"

using hopf::Label;

TEST(Label, PairFlattensAndDropsUnits) {
  const Label a = Label::atom("a", {0});
  const Label b = Label::atom("b", {1});
  const Label c = Label::atom("c", {2});
  EXPECT_EQ(Label::pair(Label::pair(a, b), c), Label::pair(a, Label::pair(b, c)));
  EXPECT_EQ(Label::pair(Label(), a), a);
  EXPECT_EQ(Label::pair(a, Label()), a);
  EXPECT_EQ(Label::pair(a, Label::pair(b, c)).arity(), 3u);
  EXPECT_EQ(Label().arity(), 0u);
}

TEST(Label, SplitInvertsPair) {
  const Label a = Label::atom("a", {0});
  const Label bc = Label::pair(Label::atom("b", {1}), Label::atom("c", {2}));
  auto [l, r] = Label::pair(a, bc).split(1);
  EXPECT_EQ(l, a);
  EXPECT_EQ(r, bc);
  auto [u, all] = Label::pair(a, bc).split(0);
  EXPECT_TRUE(u.isUnit());
  EXPECT_EQ(all, Label::pair(a, bc));
}

TEST(Label, EncodeDecodeRoundTrip) {
  const std::vector<Label> samples = {
      Label(),
      Label::atom("x", {-3}),
      Label::atom("e", {2, 0}),
      Label::pair(Label::atom("x", {1}), Label::left(Label::atom("d", {}))),
      Label::right(Label()),
      Label::pair(Label::right(Label::pair(Label::atom("x", {0}), Label::atom("y", {1}))),
                  Label::atom("z", {4, -5})),
  };
  for (const auto& l : samples) {
    EXPECT_EQ(Label::decode(l.encode()), l) << l.encode();
  }
  EXPECT_EQ(Label::atom("x", {1, -2}).encode(), "x[1,-2]");
  EXPECT_EQ(Label().encode(), "1");
}

TEST(Label, DecodeRejectsGarbage) {
  EXPECT_THROW(Label::decode("x[1"), hopf::ParseError);
  EXPECT_THROW(Label::decode("(x[1])"), hopf::ParseError);
  EXPECT_THROW(Label::decode("L(x[0]"), hopf::ParseError);
  EXPECT_THROW(Label::decode("x[0] junk"), hopf::ParseError);
}

TEST(Label, TotalOrderIsConsistent) {
  const Label a = Label::atom("x", {0});
  const Label b = Label::atom("x", {1});
  EXPECT_TRUE(a < b || b < a);
  EXPECT_FALSE(a < a);
  EXPECT_EQ(std::hash<Label>()(a), std::hash<Label>()(Label::atom("x", {0})));
}
