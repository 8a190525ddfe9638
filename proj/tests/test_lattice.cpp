#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/lattice.hpp"
#include "mingrp/lists.hpp"
#include "oracles.hpp"
#include "test_groups.hpp"

using namespace mingrp;
using namespace mingrp::test;

namespace
{

PermGroup sl25() { return special_linear_on_vectors(5); }
PermGroup l27() { return construct(parse_name("L2(7)")); }

std::multiset<std::uint64_t> orders_of(std::vector<SubgroupClass> const &classes)
{
  std::multiset<std::uint64_t> out;
  for (auto const &c : classes)
    out.insert(c.order);
  return out;
}

std::multiset<std::string> factor_labels(std::vector<FactorDescriptor> const &factors)
{
  std::multiset<std::string> out;
  for (auto const &f : factors)
    out.insert(describe(f));
  return out;
}

std::vector<std::pair<std::string, PermGroup>> small_corpus()
{
  return {{"S4", sym4()},         {"A5", alt5()}, {"SL(2,5)", sl25()}, {"L2(7)", l27()},
          {"S5", sym5()},         {"A5xC2", alt5_x_c2()}, {"Q8", quaternion()},
          {"C6", cyclic(6)}};
}

std::vector<std::pair<std::string, PermGroup>> full_corpus()
{
  auto all = small_corpus();
  all.emplace_back("L2(8)", construct(parse_name("L2(8)")));
  all.emplace_back("A6", alt6());
  all.emplace_back("L2(11)", construct(parse_name("L2(11)")));
  all.emplace_back("S6", sym6());
  return all;
}

} // namespace

TEST(Bitset, Basics)
{
  Bitset a(130), b(130);
  a.set(3);
  a.set(129);
  b.set(3);
  b.set(70);
  b.set(129);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(b.indices(), (std::vector<std::uint32_t>{3, 70, 129}));
  EXPECT_TRUE(b.lex_less(a)); // [3, 70, 129] < [3, 129]
  a &= b;
  EXPECT_EQ(a.count(), 2u);
}

TEST(ElementTable, MatchesPermutationArithmetic)
{
  ElementTable t(sym4(), 100);
  ASSERT_EQ(t.size(), 24u);
  EXPECT_TRUE(t.element(0).is_identity());
  for (std::uint32_t a = 0; a < 24; ++a) {
    for (std::uint32_t b = 0; b < 24; ++b)
      ASSERT_EQ(t.element(t.mul(a, b)), t.element(a) * t.element(b));
    EXPECT_EQ(t.element(t.inv(a)), inverse(t.element(a)));
    EXPECT_EQ(t.element_order(a), t.element(a).order());
  }
  EXPECT_THROW(ElementTable(alt7(), 1000), LimitExceeded);
}

TEST(SubgroupClasses, Examples)
{
  EXPECT_EQ(subgroup_classes(sym4()).classes.size(), 11u);
  auto a5 = subgroup_classes(alt5());
  EXPECT_EQ(orders_of(a5.classes), (std::multiset<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 60}));
  EXPECT_EQ(subgroup_classes(cyclic(6)).classes.size(), 4u);
  EXPECT_THROW(subgroup_classes(alt7()), LimitExceeded);
  EXPECT_THROW(subgroup_classes(alt6(), 100), LimitExceeded);
}

TEST(SubgroupClasses, CanonicalOrdering)
{
  for (auto const &[label, g] : small_corpus()) {
    auto lattice = subgroup_classes(g);
    auto const &cs = lattice.classes;
    EXPECT_EQ(cs.front().order, 1u) << label;
    EXPECT_EQ(cs.back().order, g.order()) << label;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      EXPECT_TRUE(cs[i].order < cs[i + 1].order
                  || (cs[i].order == cs[i + 1].order && cs[i].members.lex_less(cs[i + 1].members)))
        << label;
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (auto const &c : lattice.conjugates[i])
        EXPECT_FALSE(c.lex_less(cs[i].members));
    }
  }
}

TEST(SubgroupClasses, MatchesSubsetClosureOracle)
{
  for (auto const &[label, g] : small_corpus()) {
    SubsetOracle oracle(g);
    auto all = oracle.all_subgroups();
    auto lattice = subgroup_classes(g);
    auto const &table = *lattice.table;

    std::uint64_t total = 0;
    for (auto const &c : lattice.classes)
      total += c.class_size;
    EXPECT_EQ(total, all.size()) << label;

    // Every oracle subgroup is a conjugate of exactly one class.
    std::map<std::size_t, std::size_t> hits;
    for (auto const &s : all) {
      Bitset b(table.size());
      for (int x : s)
        b.set(*table.index_of(oracle.elems[x]));
      std::size_t matches = 0;
      for (std::size_t i = 0; i < lattice.classes.size(); ++i) {
        auto const &conj = lattice.conjugates[i];
        if (std::find(conj.begin(), conj.end(), b) != conj.end()) {
          ++matches;
          ++hits[i];
        }
      }
      EXPECT_EQ(matches, 1u) << label;
    }
    for (std::size_t i = 0; i < lattice.classes.size(); ++i)
      EXPECT_EQ(hits[i], lattice.classes[i].class_size) << label;
  }
}

TEST(SubgroupClasses, ClassSizesMatchOracleConjugation)
{
  for (auto const &[label, g] : small_corpus()) {
    SubsetOracle oracle(g);
    auto lattice = subgroup_classes(g);
    for (auto const &c : lattice.classes) {
      std::set<int> members;
      for (auto x : c.members.indices())
        members.insert(oracle.index.at(lattice.table->element(x)));
      std::set<std::set<int>> orbit;
      std::uint64_t normalizer = 0;
      for (int x = 0; x < static_cast<int>(oracle.elems.size()); ++x) {
        auto conj = oracle.conjugate(members, x);
        normalizer += conj == members;
        orbit.insert(conj);
      }
      EXPECT_EQ(orbit.size(), c.class_size) << label;
      EXPECT_EQ(c.class_size * normalizer, g.order()) << label;
      EXPECT_EQ(c.is_normal, orbit.size() == 1) << label;
    }
  }
}

TEST(SubgroupClasses, LatticeInvariants)
{
  for (auto const &[label, g] : full_corpus()) {
    auto lattice = subgroup_classes(g);
    auto const &cs = lattice.classes;
    bool soluble = is_soluble(g);
    for (auto const &c : cs) {
      EXPECT_EQ(g.order() % c.order, 0u) << label;
      EXPECT_EQ(c.representative.order(), c.order) << label;
      EXPECT_EQ(c.members.count(), c.order) << label;
      if (soluble)
        EXPECT_TRUE(c.soluble) << label;
      EXPECT_EQ(c.soluble, is_soluble(c.representative)) << label;
    }
    for (auto [i, j] : lattice.inclusion) {
      EXPECT_EQ(cs[j].order % cs[i].order, 0u);
      EXPECT_LT(cs[i].order, cs[j].order);
    }
    // Transitivity.
    for (auto [i, j] : lattice.inclusion) {
      for (auto [k, l] : lattice.inclusion) {
        if (k == j)
          EXPECT_TRUE(lattice.included(i, l)) << label;
      }
    }
    // Everything proper lies below the ambient class.
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
      EXPECT_TRUE(lattice.included(i, cs.size() - 1));
    for (auto const &c : normal_subgroups(lattice))
      EXPECT_TRUE(c.is_normal);
  }
}

TEST(MaximalSubgroups, Examples)
{
  auto a5 = maximal_subgroups(subgroup_classes(alt5()));
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (auto const &c : a5)
    sizes[c.order] = c.class_size;
  EXPECT_EQ(sizes, (std::map<std::uint64_t, std::uint64_t>{{6, 10}, {10, 6}, {12, 5}}));

  EXPECT_EQ(orders_of(maximal_subgroups(subgroup_classes(cyclic(6)))),
            (std::multiset<std::uint64_t>{2, 3}));
  EXPECT_EQ(orders_of(maximal_subgroups(subgroup_classes(sym4()))),
            (std::multiset<std::uint64_t>{6, 8, 12}));
}

TEST(Frattini, Examples)
{
  EXPECT_EQ(frattini(subgroup_classes(sym4())).order(), 1u);
  EXPECT_EQ(frattini(subgroup_classes(quaternion())).order(), 2u);
  EXPECT_EQ(frattini(subgroup_classes(sl25())).order(), 2u);
  EXPECT_EQ(frattini(subgroup_classes(cyclic(6))).order(), 1u);
  EXPECT_EQ(frattini(subgroup_classes(cyclic(8))).order(), 4u);
}

TEST(Frattini, IsNormalAndNongenerating)
{
  std::mt19937 rng(3);
  for (auto const &[label, g] : small_corpus()) {
    auto lattice = subgroup_classes(g);
    auto phi = frattini(lattice);
    auto phi_members = frattini_members(lattice);
    for (auto s : lattice.table->generators())
      EXPECT_EQ(lattice.table->conjugate(phi_members, s), phi_members) << label;

    int trials = 0;
    for (int attempt = 0; trials < 50 && attempt < 5000; ++attempt) {
      std::uniform_int_distribution<int> count(1, 3), length(1, 20);
      std::vector<Permutation> s;
      for (int i = count(rng); i > 0; --i)
        s.push_back(random_word(g, rng, length(rng)));
      auto with_phi = s;
      with_phi.insert(with_phi.end(), phi.generators().begin(), phi.generators().end());
      if (PermGroup(g.degree(), with_phi).order() != g.order())
        continue;
      ++trials;
      EXPECT_EQ(PermGroup(g.degree(), s).order(), g.order()) << label;
    }
    EXPECT_EQ(trials, 50) << label;
  }
}

TEST(NormalSubgroups, Examples)
{
  EXPECT_EQ(orders_of(normal_subgroups(subgroup_classes(alt5()))),
            (std::multiset<std::uint64_t>{1, 60}));
  EXPECT_EQ(orders_of(normal_subgroups(subgroup_classes(sym4()))),
            (std::multiset<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_EQ(normal_subgroups(subgroup_classes(cyclic(6))).size(), 4u);
  for (auto g : {alt5(), l27(), alt6(), construct(parse_name("L2(8)"))})
    EXPECT_EQ(orders_of(normal_subgroups(subgroup_classes(g))),
              (std::multiset<std::uint64_t>{1, g.order()}));
}

TEST(Quotient, Examples)
{
  auto s4 = sym4();
  auto v4 = group(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto q = quotient(s4, v4);
  EXPECT_EQ(q.degree(), 6u);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_FALSE(is_simple(q));

  EXPECT_EQ(quotient(s4, s4).order(), 1u);

  auto sl = sl25();
  auto lattice = subgroup_classes(sl);
  auto bar = quotient(*lattice.table, frattini_members(lattice));
  EXPECT_EQ(bar.order(), 60u);
  EXPECT_FALSE(is_soluble(bar));
  EXPECT_TRUE(is_simple(bar));

  EXPECT_THROW(quotient(s4, group(4, {"(1,2)"})), NotNormal);
}

TEST(Quotient, SolubilityIsExtensionClosed)
{
  for (auto const &[label, g] : small_corpus()) {
    auto lattice = subgroup_classes(g);
    for (auto const &n : normal_subgroups(lattice)) {
      auto q = quotient(*lattice.table, n.members);
      EXPECT_EQ(q.order() * n.order, g.order()) << label;
      EXPECT_EQ(is_soluble(g), is_soluble(n.representative) && is_soluble(q)) << label;
    }
  }
}

TEST(CompositionFactors, Examples)
{
  auto s4 = composition_factors(sym4());
  std::vector<std::uint64_t> orders;
  for (auto const &f : s4)
    orders.push_back(f.order);
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{2, 3, 2, 2}));

  auto a5 = composition_factors(alt5());
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].kind, FactorDescriptor::Kind::identified);
  EXPECT_EQ(render(*a5[0].name), "A5");

  auto s5 = composition_factors(sym5());
  ASSERT_EQ(s5.size(), 2u);
  EXPECT_EQ(s5[0].kind, FactorDescriptor::Kind::cyclic_prime);
  EXPECT_EQ(s5[0].order, 2u);
  EXPECT_EQ(render(*s5[1].name), "A5");

  EXPECT_EQ(factor_labels(composition_factors(sl25())),
            (std::multiset<std::string>{"A5", "C2"}));
  EXPECT_TRUE(composition_factors(PermGroup::trivial(3)).empty());
}

TEST(CompositionFactors, JordanHolderAndSolubility)
{
  for (auto const &[label, g] : full_corpus()) {
    auto top = composition_factors(g, 2000, TieBreak::largest_first);
    auto bottom = composition_factors(g, 2000, TieBreak::smallest_first);
    EXPECT_EQ(factor_labels(top), factor_labels(bottom)) << label;

    std::uint64_t product = 1;
    bool all_prime = true;
    for (auto const &f : top) {
      product *= f.order;
      all_prime &= f.kind == FactorDescriptor::Kind::cyclic_prime;
      EXPECT_TRUE(is_prime(f.order) || !simple_groups_of_order(f.order).empty()) << label;
    }
    EXPECT_EQ(product, g.order()) << label;
    EXPECT_EQ(all_prime, is_soluble(g)) << label;
  }
}

TEST(IdentifySimple, Examples)
{
  EXPECT_EQ(identify_simple(7, {}).kind, FactorDescriptor::Kind::cyclic_prime);
  auto l27 = identify_simple(168, {});
  EXPECT_EQ(l27.kind, FactorDescriptor::Kind::identified);
  EXPECT_EQ(render(*l27.name), "L2(7)");
  EXPECT_EQ(render(*identify_simple(60, {}).name), "A5");
  EXPECT_EQ(render(*identify_simple(360, {}).name), "A6");
  EXPECT_EQ(identify_simple(120, {}).kind, FactorDescriptor::Kind::unidentified);
  EXPECT_EQ(identify_simple(2'000'000, {}).kind, FactorDescriptor::Kind::unidentified);
}

TEST(IdentifySimple, OrderCollision)
{
  auto bare = identify_simple(20160, {});
  EXPECT_EQ(bare.kind, FactorDescriptor::Kind::ambiguous);
  EXPECT_FALSE(bare.name);
  EXPECT_EQ(bare.candidates.size(), 2u);

  auto a8 = identify_simple(20160, {{1, 1}, {15, 2688}});
  EXPECT_EQ(render(*a8.name), "A8");
  auto l34 = identify_simple(20160, {{1, 1}, {2, 315}, {7, 5760}});
  EXPECT_EQ(render(*l34.name), "L3(4)");
}

// Orders of the nonabelian simple groups below 10^6, with multiplicity.
TEST(IdentifySimple, OrderTableMatchesKnownSequence)
{
  std::vector<std::uint64_t> const known{
    60,     168,    360,    504,    660,    1092,   2448,   2520,   3420,   4080,
    5616,   6048,   6072,   7800,   7920,   9828,   12180,  14880,  20160,  20160,
    25308,  25920,  29120,  32736,  34440,  39732,  51888,  58800,  62400,  74412,
    95040,  102660, 113460, 126000, 150348, 175560, 178920, 181440, 194472, 246480,
    262080, 265680, 285852, 352440, 372000, 443520, 456288, 515100, 546312, 604800, 612468,
    647460, 721392, 885720, 976500, 979200};
  std::size_t total = 0;
  for (std::uint64_t order = 1; order < identify_order_bound; ++order) {
    auto names = simple_groups_of_order(order);
    for (std::size_t i = 0; i < names.size(); ++i)
      EXPECT_TRUE(std::count(known.begin(), known.end(), order) > 0) << render(names[i]);
    EXPECT_EQ(names.size(), static_cast<std::size_t>(std::count(known.begin(), known.end(), order)))
      << order;
    total += names.size();
  }
  EXPECT_EQ(total, known.size());
}

TEST(IsSimple, Examples)
{
  EXPECT_TRUE(is_simple(alt5()));
  EXPECT_TRUE(is_simple(l27()));
  EXPECT_TRUE(is_simple(alt6()));
  EXPECT_TRUE(is_simple(cyclic(7)));
  EXPECT_FALSE(is_simple(sym5()));
  EXPECT_FALSE(is_simple(quaternion()));
  EXPECT_FALSE(is_simple(alt5_x_c2()));
  EXPECT_FALSE(is_simple(sl25()));
  EXPECT_FALSE(is_simple(PermGroup::trivial(2)));
}

TEST(LatticeJson, Shape)
{
  auto lattice = subgroup_classes(sym4());
  auto doc = lattice_json(lattice);
  EXPECT_EQ(doc["order"], 24);
  EXPECT_EQ(doc["classes"].size(), 11u);
  EXPECT_EQ(doc["inclusion"].size(), lattice.inclusion.size());
  EXPECT_EQ(doc["classes"][10]["normal"], true);
  auto reparsed = nlohmann::json::parse(doc.dump());
  EXPECT_EQ(reparsed, doc);
}
