#include <gtest/gtest.h>

#include "mingrp/lists.hpp"
#include "mingrp/names.hpp"

using namespace mingrp;

namespace
{

bool trial_division_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

GroupName l2(std::uint64_t p, unsigned e)
{
  GroupName g;
  g.family = Family::linear;
  g.n = 2;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i)
    q *= p;
  g.q = PrimePower{q, p, e};
  return g;
}

GroupName sz(unsigned e)
{
  GroupName g;
  g.family = Family::suzuki;
  g.q = PrimePower{std::uint64_t{1} << e, 2, e};
  return g;
}

} // namespace

TEST(IsPrime, Examples)
{
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(trial_division_prime(2147483647));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, AgreesWithTrialDivisionUpToAMillion)
{
  for (std::uint64_t n = 0; n <= 1'000'000; ++n)
    ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(IsPrime, LargeValues)
{
  EXPECT_TRUE(is_prime(2305843009213693951ull));          // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ull));         // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ull));                  // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime(3825123056546413051ull));         // spsp to bases 2..23
  EXPECT_FALSE(is_prime(4294967297ull));                  // 641 * 6700417
  EXPECT_FALSE(is_prime(4611686014132420609ull));         // (2^31 - 1)^2
}

TEST(PrimePower, Factorization)
{
  EXPECT_EQ(prime_power(64), (std::pair<std::uint64_t, unsigned>{2, 6}));
  EXPECT_EQ(prime_power(343), (std::pair<std::uint64_t, unsigned>{7, 3}));
  EXPECT_EQ(prime_power(13), (std::pair<std::uint64_t, unsigned>{13, 1}));
  EXPECT_FALSE(prime_power(6));
  EXPECT_FALSE(prime_power(1));
  EXPECT_FALSE(prime_power(36));
  EXPECT_EQ(prime_power(4611686014132420609ull),
            (std::pair<std::uint64_t, unsigned>{2147483647, 2}));
}

TEST(ExponentShape, Examples)
{
  auto six = exponent_shape(6);
  EXPECT_EQ(six.kind, ExponentShape::Kind::semiprime);
  EXPECT_EQ(six.r, 2u);
  EXPECT_EQ(six.s, 3u);

  auto nine = exponent_shape(9);
  EXPECT_EQ(nine.kind, ExponentShape::Kind::semiprime);
  EXPECT_EQ(nine.r, 3u);
  EXPECT_EQ(nine.s, 3u);

  EXPECT_EQ(exponent_shape(30).kind, ExponentShape::Kind::other);
  EXPECT_EQ(exponent_shape(7).kind, ExponentShape::Kind::prime);
  EXPECT_EQ(exponent_shape(1).kind, ExponentShape::Kind::other);
  EXPECT_EQ(exponent_shape(8).kind, ExponentShape::Kind::other);
}

TEST(ExponentShape, FactorsMultiplyBack)
{
  for (std::uint64_t n = 1; n < 5000; ++n) {
    auto shape = exponent_shape(n);
    if (shape.kind == ExponentShape::Kind::semiprime) {
      EXPECT_EQ(shape.r * shape.s, n);
      EXPECT_TRUE(trial_division_prime(shape.r));
      EXPECT_TRUE(trial_division_prime(shape.s));
    }
  }
  auto big = exponent_shape(4294967291ull * 4294967279ull);
  EXPECT_EQ(big.kind, ExponentShape::Kind::semiprime);
  EXPECT_EQ(big.r * big.s, 4294967291ull * 4294967279ull);
}

TEST(List1, Examples)
{
  auto v = in_list1(parse_name("L2(7)"));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.list, ListId::list1);
  EXPECT_EQ(v.item, 3);

  v = in_list1(parse_name("Sz(32)"));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.item, 4);

  v = in_list1(parse_name("L2(11)"));
  EXPECT_FALSE(v.member);
  EXPECT_EQ(v.list, ListId::none);
  EXPECT_FALSE(v.reason.empty());

  v = in_list1(parse_name("A5"));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.item, 1);

  EXPECT_EQ(in_list1(parse_name("L3(3)")).item, 5);
  EXPECT_EQ(in_list1(parse_name("L2(27)")).item, 2);
  EXPECT_EQ(in_list1(parse_name("L3(2)")).item, 3);
}

TEST(List3, Examples)
{
  auto v = in_list3(parse_name("L2(64)"));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.item, 1);
  EXPECT_NE(v.reason.find("6 = 2*3"), std::string::npos);

  v = in_list3(parse_name("L2(125)"));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.item, 4);

  EXPECT_FALSE(in_list3(parse_name("L2(25)")).member);
  EXPECT_EQ(in_list3(parse_name("A6")).item, 5);
  EXPECT_EQ(in_list3(parse_name("L2(9)")).item, 5);
  EXPECT_EQ(in_list3(parse_name("U3(3)")).item, 5);
  EXPECT_EQ(in_list3(parse_name("Sz(2^9)")).item, 5);
  EXPECT_EQ(in_list3(parse_name("L2(11)")).item, 3);
}

TEST(Lists, ItemConsistency)
{
  EXPECT_EQ(in_list3(parse_name("L2(3^9)")).item, 2);
  EXPECT_EQ(render(normalize(parse_name("L2(3^2)"))), "A6");
  EXPECT_FALSE(in_list1(parse_name("L2(3^2)")).member);
  EXPECT_TRUE(in_list3(parse_name("L2(3^2)")).member);
  // r = s allowed in item 1.
  EXPECT_EQ(in_list3(parse_name("L2(16)")).item, 1);
}

TEST(Lists, VerdictInvariant)
{
  for (auto text : {"L2(7)", "L2(11)", "A7", "Sz(8)", "U3(3)", "M11", "L2(64)", "C5"}) {
    for (auto const &v : {in_list1(parse_name(text)), in_list3(parse_name(text))}) {
      EXPECT_EQ(v.member, v.list != ListId::none);
      EXPECT_EQ(v.member, v.item != 0);
    }
  }
}

TEST(Lists, DisjointOverSmallL2AndSuzuki)
{
  constexpr std::uint64_t bound = std::uint64_t{1} << 25;
  std::vector<bool> composite(bound + 1, false);
  std::size_t checked = 0;

  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p])
      continue;
    for (std::uint64_t m = p * p; m <= bound; m += p)
      composite[m] = true;

    std::uint64_t q = p;
    for (unsigned e = 1; q <= bound; ++e, q *= p) {
      if (q <= 3)
        continue;
      auto name = l2(p, e);
      bool one = in_list1(name).member;
      bool three = in_list3(name).member;
      ASSERT_FALSE(one && three) << "L2(" << q << ")";
      ++checked;
    }
  }
  for (unsigned e = 3; e <= 25; e += 2) {
    ASSERT_FALSE(in_list1(sz(e)).member && in_list3(sz(e)).member) << e;
    ++checked;
  }
  for (auto text : {"A5", "A6", "A7", "A8", "L3(3)", "U3(3)", "L3(4)", "M11", "2F4(2)'"}) {
    auto name = parse_name(text);
    EXPECT_FALSE(in_list1(name).member && in_list3(name).member) << text;
  }
  EXPECT_GT(checked, 2'000'000u);
}
