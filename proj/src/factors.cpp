#include <algorithm>
#include <limits>
#include <unordered_set>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/lattice.hpp"
#include "mingrp/lists.hpp"

namespace mingrp
{

namespace
{

using OrderTable = std::map<std::uint64_t, std::vector<GroupName>>;

OrderTable build_order_table()
{
  OrderTable table;
  std::unordered_set<std::string> seen;
  auto consider = [&](std::string const &text) {
    try {
      auto name = normalize(parse_name(text));
      auto order = expected_order(name);
      if (order >= identify_order_bound)
        return false;
      if (seen.insert(render(name)).second)
        table[order].push_back(name);
      return true;
    } catch (ParseError const &) {
      return true; // excluded parameter, keep scanning
    } catch (std::overflow_error const &) {
      return false;
    }
  };

  for (unsigned n = 5; consider("A" + std::to_string(n)); ++n)
    ;

  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q < 1000; ++q) {
    if (prime_power(q))
      qs.push_back(q);
  }
  auto sweep = [&](auto text_for) {
    for (unsigned n = 2; n < 12; ++n) {
      bool any = false;
      for (auto q : qs)
        any |= consider(text_for(n, std::to_string(q)));
      if (!any && n > 3)
        break;
    }
  };
  sweep([](unsigned n, std::string const &q) { return "L" + std::to_string(n) + "(" + q + ")"; });
  sweep([](unsigned n, std::string const &q) { return "U" + std::to_string(n) + "(" + q + ")"; });
  sweep([](unsigned n, std::string const &q) { return "S" + std::to_string(2 * n) + "(" + q + ")"; });
  sweep([](unsigned n, std::string const &q) { return "O" + std::to_string(2 * n + 1) + "(" + q + ")"; });
  sweep([](unsigned n, std::string const &q) { return "O" + std::to_string(2 * n) + "+(" + q + ")"; });
  sweep([](unsigned n, std::string const &q) { return "O" + std::to_string(2 * n) + "-(" + q + ")"; });
  for (auto q : qs) {
    auto s = std::to_string(q);
    for (auto prefix : {"G2(", "Sz(", "2G2(", "3D4(", "F4(", "2F4(", "E6(", "2E6("})
      consider(prefix + s + ")");
  }
  consider("2F4(2)'");
  for (auto label : {"M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL", "He"})
    consider(label);
  return table;
}

OrderTable const &order_table()
{
  static OrderTable const table = build_order_table();
  return table;
}

} // namespace

std::string to_string(FactorDescriptor::Kind kind)
{
  switch (kind) {
  case FactorDescriptor::Kind::cyclic_prime: return "cyclic_prime";
  case FactorDescriptor::Kind::identified: return "identified";
  case FactorDescriptor::Kind::ambiguous: return "ambiguous";
  case FactorDescriptor::Kind::unidentified: return "unidentified";
  }
  return "unidentified";
}

std::string describe(FactorDescriptor const &factor)
{
  if (factor.name)
    return render(*factor.name);
  std::string text = "order " + std::to_string(factor.order);
  if (factor.kind == FactorDescriptor::Kind::ambiguous) {
    text += " (one of";
    for (auto const &c : factor.candidates)
      text += " " + render(c);
    text += ")";
  } else {
    text += " (unidentified)";
  }
  return text;
}

FactorDescriptor identify_quotient(ElementTable const &table, Bitset const &normal)
{
  // Orders of the cosets Nx, taken once per coset.
  std::size_t n = table.size();
  std::vector<bool> covered(n, false);
  auto members = normal.indices();
  std::map<std::uint64_t, std::uint64_t> orders;
  std::uint64_t cosets = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (covered[x])
      continue;
    ++cosets;
    for (auto y : members)
      covered[table.mul(y, x)] = true;
    std::uint64_t k = 1;
    for (std::uint32_t p = x; !normal.test(p); p = table.mul(p, x))
      ++k;
    ++orders[k];
  }
  return identify_simple(cosets, orders);
}

std::vector<GroupName> simple_groups_of_order(std::uint64_t order)
{
  auto const &table = order_table();
  auto it = table.find(order);
  return it == table.end() ? std::vector<GroupName>{} : it->second;
}

FactorDescriptor identify_simple(std::uint64_t order,
                                 std::map<std::uint64_t, std::uint64_t> const &element_orders)
{
  FactorDescriptor d;
  d.order = order;
  d.element_orders = element_orders;
  if (is_prime(order)) {
    d.kind = FactorDescriptor::Kind::cyclic_prime;
    if (order <= std::numeric_limits<unsigned>::max())
      d.name = make_cyclic(static_cast<unsigned>(order));
    return d;
  }
  if (order >= identify_order_bound)
    return d;

  auto candidates = simple_groups_of_order(order);
  if (candidates.size() == 1) {
    d.kind = FactorDescriptor::Kind::identified;
    d.name = candidates.front();
    return d;
  }
  if (candidates.empty())
    return d;

  // A8 and L3(4): only the alternating group has elements of order 15.
  if (order == 20160 && !element_orders.empty()) {
    bool fifteen = element_orders.count(15) > 0;
    for (auto const &c : candidates) {
      if ((c.family == Family::alternating) == fifteen) {
        d.kind = FactorDescriptor::Kind::identified;
        d.name = c;
        return d;
      }
    }
  }
  d.kind = FactorDescriptor::Kind::ambiguous;
  d.candidates = candidates;
  return d;
}

std::vector<FactorDescriptor> composition_factors(PermGroup const &group, std::uint64_t limit,
                                                  TieBreak tie_break)
{
  std::vector<FactorDescriptor> result;
  PermGroup current = group;

  while (current.order() > 1) {
    auto order = current.order();
    if (is_prime(order)) {
      result.push_back(identify_simple(order, {{1, 1}, {order, order - 1}}));
      break;
    }

    auto lattice = subgroup_classes(current, limit);
    auto normals = normal_subgroups(lattice);
    std::vector<SubgroupClass const *> maximal;
    for (auto const &a : normals) {
      if (a.order == order)
        continue;
      bool covered = false;
      for (auto const &b : normals) {
        if (b.order != order && lattice.included(a.index, b.index))
          covered = true;
      }
      if (!covered)
        maximal.push_back(&a);
    }

    // Largest order then lowest class index, or the mirror image.
    SubgroupClass const *pick = maximal.front();
    for (auto const *c : maximal) {
      bool better = tie_break == TieBreak::largest_first ? c->order > pick->order
                                                         : c->order < pick->order
                                                             || c->order == pick->order;
      if (better)
        pick = c;
    }
    result.push_back(identify_quotient(*lattice.table, pick->members));
    if (pick->order == 1)
      break;
    current = pick->representative;
  }
  return result;
}

bool is_simple(PermGroup const &group)
{
  auto order = group.order();
  if (order == 1)
    return false;
  if (is_prime(order))
    return true;
  auto series = derived_series(group);
  if (series.size() < 2 || series[1].order != order)
    return false;

  // Perfect: simple iff every nontrivial conjugacy class generates G normally.
  auto all = elements(group, max_table_order);
  std::unordered_set<Permutation, PermutationHash> seen;
  for (auto const &x : all) {
    if (x.is_identity() || seen.count(x))
      continue;
    std::vector<Permutation> orbit{x};
    seen.insert(x);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const &g : group.generators()) {
        auto c = conjugate(orbit[i], g);
        if (seen.insert(c).second)
          orbit.push_back(std::move(c));
      }
    }
    if (normal_closure(group, {x}).order() != order)
      return false;
  }
  return true;
}

} // namespace mingrp
