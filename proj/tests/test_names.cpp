#include <random>

#include <gtest/gtest.h>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/names.hpp"

using namespace mingrp;

TEST(ParseName, Examples)
{
  auto sz = parse_name("Sz(32)");
  EXPECT_EQ(sz.family, Family::suzuki);
  ASSERT_TRUE(sz.q);
  EXPECT_EQ(sz.q->q, 32u);
  EXPECT_EQ(sz.q->p, 2u);
  EXPECT_EQ(sz.q->exponent, 5u);

  auto l = parse_name("L2(2^6)");
  EXPECT_EQ(l.family, Family::linear);
  EXPECT_EQ(l.n, 2u);
  EXPECT_EQ(l.q->q, 64u);
  EXPECT_EQ(l.q->exponent, 6u);
  EXPECT_EQ(l.raw, "L2(2^6)");

  EXPECT_THROW(parse_name("L2(6)"), NotSimpleName);
}

TEST(ParseName, SymmetricVersusSymplectic)
{
  EXPECT_EQ(parse_name("S5").family, Family::symmetric);
  auto sp = parse_name("S4(4)");
  EXPECT_EQ(sp.family, Family::symplectic);
  EXPECT_EQ(sp.n, 4u);
  EXPECT_EQ(sp.q->q, 4u);
}

TEST(ParseName, OtherFamilies)
{
  EXPECT_EQ(parse_name("2F4(2)'").family, Family::tits);
  EXPECT_EQ(parse_name("M11").family, Family::sporadic);
  EXPECT_EQ(parse_name("M").label, "M");
  EXPECT_EQ(parse_name("O'N").label, "O'N");
  EXPECT_EQ(parse_name("C7").family, Family::cyclic);
  EXPECT_EQ(parse_name("O8+(2)").family, Family::orthogonal_plus);
  EXPECT_EQ(parse_name("O8-(3)").family, Family::orthogonal_minus);
  EXPECT_EQ(parse_name("O7(3)").family, Family::orthogonal_odd);
  EXPECT_EQ(parse_name("2G2(27)").family, Family::ree_g2);
  EXPECT_EQ(parse_name("3D4(2)").family, Family::triality_d4);
  EXPECT_EQ(parse_name("2E6(2)").family, Family::twisted_e6);
  EXPECT_EQ(parse_name("E8(2)").family, Family::e8);
  EXPECT_EQ(parse_name("  U3(3) ").family, Family::unitary);
}

TEST(ParseName, SyntaxErrors)
{
  for (auto text : {"", "X5", "L2", "L2(", "L2(7", "L2(7)x", "A", "Sz()", "L2(2^)",
                    "O8(2)", "O7+(3)", "Co4"})
    EXPECT_THROW(parse_name(text), ParseError) << text;
}

TEST(ParseName, Overflow)
{
  EXPECT_THROW(parse_name("L2(2^63)"), OverflowError);
  EXPECT_THROW(parse_name("L2(99999999999999999999)"), OverflowError);
  // 2^61 - 1 is prime and fits.
  EXPECT_EQ(parse_name("L2(2305843009213693951)").q->exponent, 1u);
}

// Names excluded from the simple-group domain: each is soluble, not simple,
// or a repetition without a normalization rule.
TEST(ParseName, DomainExclusions)
{
  for (auto text : {"L2(2)", "L2(3)", "U3(2)", "S4(2)", "S4(3)", "S6(2^1)x", "A4", "A3",
                    "L1(7)", "U2(4)", "S5(3)", "S2(3)", "O5(3)", "O6+(2)", "G2(2)", "Sz(2)",
                    "Sz(2^4)", "Sz(27)", "2G2(3)", "2G2(9)", "2F4(2)", "C6", "C1"})
    EXPECT_THROW(parse_name(text), ParseError) << text;

  for (auto text : {"L2(2)", "L2(3)", "U3(2)", "S4(2)", "S4(3)", "Sz(2^4)"})
    EXPECT_THROW(parse_name(text), NotSimpleName) << text;
}

TEST(ParseName, RepetitionsWithRewritesAreAccepted)
{
  for (auto text : {"L2(4)", "L2(5)", "L2(9)", "L3(2)", "L4(2)"})
    EXPECT_NO_THROW(parse_name(text)) << text;
}

TEST(Normalize, Examples)
{
  EXPECT_EQ(render(normalize(parse_name("L2(9)"))), "A6");
  EXPECT_EQ(render(normalize(parse_name("L4(2)"))), "A8");
  EXPECT_EQ(render(normalize(parse_name("L2(4)"))), "A5");
  EXPECT_EQ(render(normalize(parse_name("L2(5)"))), "A5");
  EXPECT_EQ(render(normalize(parse_name("L3(2)"))), "L2(7)");
  EXPECT_EQ(normalize(parse_name("Sz(8)")), parse_name("Sz(8)"));
}

TEST(Normalize, PreservesOrder)
{
  for (auto text : {"L2(4)", "L2(5)", "L2(9)", "L3(2)", "L4(2)"}) {
    auto name = parse_name(text);
    EXPECT_EQ(expected_order(name), expected_order(normalize(name))) << text;
  }
  EXPECT_EQ(expected_order(parse_name("L2(9)")), 360u);
}

TEST(Render, Examples)
{
  EXPECT_EQ(render(make_classical(Family::linear, 2, 64)), "L2(64)");
  EXPECT_EQ(render(make_exceptional(Family::suzuki, 32)), "Sz(32)");
  EXPECT_EQ(render(make_alternating(6)), "A6");
  EXPECT_EQ(render(parse_name("2F4(2)'")), "2F4(2)'");
  EXPECT_EQ(render(parse_name("O8-(2^2)")), "O8-(4)");
}

namespace
{

GroupName random_valid_name(std::mt19937 &rng)
{
  static std::vector<std::string> const fixed{"M11", "Co1", "Fi24'", "2F4(2)'", "HS", "M"};
  static std::vector<std::uint64_t> const qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32,
                                             49, 64, 81, 125, 1024, 2187};
  std::uniform_int_distribution<int> kind(0, 11);
  std::uniform_int_distribution<std::size_t> pick_q(0, qs.size() - 1);
  std::uniform_int_distribution<unsigned> small(2, 12);

  for (;;) {
    std::string text;
    auto q = std::to_string(qs[pick_q(rng)]);
    switch (kind(rng)) {
    case 0: text = "A" + std::to_string(small(rng)); break;
    case 1: text = "S" + std::to_string(small(rng)); break;
    case 2: text = "L" + std::to_string(small(rng)) + "(" + q + ")"; break;
    case 3: text = "U" + std::to_string(small(rng)) + "(" + q + ")"; break;
    case 4: text = "S" + std::to_string(small(rng)) + "(" + q + ")"; break;
    case 5: text = "O" + std::to_string(small(rng) + 5) + "+(" + q + ")"; break;
    case 6: text = "O" + std::to_string(small(rng) + 5) + "(" + q + ")"; break;
    case 7: text = "Sz(" + q + ")"; break;
    case 8: text = "G2(" + q + ")"; break;
    case 9: text = "2G2(" + q + ")"; break;
    case 10: text = "C" + std::to_string(small(rng)); break;
    default: text = fixed[pick_q(rng) % fixed.size()]; break;
    }
    try {
      return parse_name(text);
    } catch (ParseError const &) {
    }
  }
}

} // namespace

TEST(NameProperties, RenderParseRoundTrip)
{
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto name = random_valid_name(rng);
    auto again = parse_name(render(name));
    EXPECT_EQ(again, name) << name.raw << " -> " << render(name);
  }
}

TEST(NameProperties, NormalizeIdempotent)
{
  std::mt19937 rng(12);
  for (int i = 0; i < 500; ++i) {
    auto name = random_valid_name(rng);
    auto once = normalize(name);
    EXPECT_EQ(normalize(once), once) << name.raw;
  }
  for (auto text : {"L2(4)", "L2(5)", "L2(9)", "L3(2)", "L4(2)"}) {
    auto once = normalize(parse_name(text));
    EXPECT_EQ(normalize(once), once);
  }
}
