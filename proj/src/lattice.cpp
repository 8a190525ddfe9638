#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "mingrp/error.hpp"
#include "mingrp/lattice.hpp"

namespace mingrp
{

namespace
{

bool is_prime_power_order(std::uint64_t n)
{
  if (n < 2)
    return false;
  std::uint64_t p = 2;
  while (n % p)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// One generator per cyclic subgroup of prime-power order.
std::vector<std::uint32_t> prime_power_cyclic_generators(ElementTable const &table)
{
  std::vector<bool> seen(table.size(), false);
  std::vector<std::uint32_t> result;
  for (std::uint32_t x = 1; x < table.size(); ++x) {
    auto order = table.element_order(x);
    if (seen[x] || !is_prime_power_order(order))
      continue;
    result.push_back(x);
    std::uint32_t power = x;
    for (std::uint64_t k = 1; k < order; ++k) {
      if (std::gcd(k, order) == 1)
        seen[power] = true;
      power = table.mul(power, x);
    }
  }
  return result;
}

std::vector<Bitset> conjugacy_orbit(ElementTable const &table, Bitset const &subgroup)
{
  std::vector<Bitset> orbit{subgroup};
  std::unordered_set<Bitset, BitsetHash> seen{subgroup};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto g : table.generators()) {
      auto c = table.conjugate(orbit[i], g);
      if (seen.insert(c).second)
        orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

struct Found
{
  Bitset members;
  std::vector<std::uint32_t> gens;
  std::vector<Bitset> conjugates;
};

} // namespace

bool SubgroupLattice::included(std::size_t i, std::size_t j) const
{
  return std::binary_search(inclusion.begin(), inclusion.end(), std::pair{i, j});
}

SubgroupLattice subgroup_classes(PermGroup const &group, std::uint64_t limit)
{
  auto order = group.order();
  if (order > limit || order > max_table_order)
    throw LimitExceeded("group order " + std::to_string(order) + " exceeds the limit of "
                        + std::to_string(std::min(limit, max_table_order)));

  auto table = std::make_shared<ElementTable const>(group, limit);
  std::size_t n = table->size();
  auto cyclic = prime_power_cyclic_generators(*table);

  // Every subgroup K > 1 is <M, x> for a maximal subgroup M of K and some
  // element x of prime-power order, so extending class representatives by
  // all such elements reaches a conjugate of every subgroup.
  std::vector<Found> found;
  std::unordered_map<Bitset, std::size_t, BitsetHash> where;
  auto add = [&](Bitset members, std::vector<std::uint32_t> gens) {
    auto orbit = conjugacy_orbit(*table, members);
    for (auto const &c : orbit)
      where.emplace(c, found.size());
    found.push_back({std::move(members), std::move(gens), std::move(orbit)});
  };

  Bitset trivial(n);
  trivial.set(0);
  add(trivial, {});

  for (std::size_t i = 0; i < found.size(); ++i) {
    Bitset base = found[i].members;
    auto gens = found[i].gens;
    if (base.count() == n)
      continue;
    for (auto x : cyclic) {
      if (base.test(x))
        continue;
      auto k = table->closure(base, gens, {x});
      if (where.count(k))
        continue;
      auto next = gens;
      next.push_back(x);
      add(std::move(k), std::move(next));
    }
  }

  // Canonical representative: the conjugate with the least sorted element list.
  for (auto &f : found) {
    auto best = std::min_element(f.conjugates.begin(), f.conjugates.end(),
                                 [](Bitset const &a, Bitset const &b) { return a.lex_less(b); });
    f.members = *best;
  }
  std::vector<std::size_t> order_of(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    order_of[i] = found[i].members.count();
  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (order_of[a] != order_of[b])
      return order_of[a] < order_of[b];
    return found[a].members.lex_less(found[b].members);
  });

  SubgroupLattice lattice;
  lattice.table = table;
  for (std::size_t idx = 0; idx < perm.size(); ++idx) {
    auto &f = found[perm[idx]];
    SubgroupClass c;
    c.index = idx;
    c.members = f.members;
    c.generators = table->canonical_generators(f.members);
    c.representative = table->to_group(c.generators);
    c.order = order_of[perm[idx]];
    c.class_size = f.conjugates.size();
    c.is_normal = c.class_size == 1;
    c.soluble = is_soluble(c.representative);
    lattice.classes.push_back(std::move(c));
    lattice.conjugates.push_back(std::move(f.conjugates));
  }

  auto &classes = lattice.classes;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[j].order == classes[i].order || classes[j].order % classes[i].order)
        continue;
      for (auto const &c : lattice.conjugates[j]) {
        if (classes[i].members.subset_of(c)) {
          lattice.inclusion.emplace_back(i, j);
          break;
        }
      }
    }
  }

  std::size_t top = classes.size() - 1;
  for (std::size_t i = 0; i < top; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < top && maximal; ++j)
      maximal = !lattice.included(i, j);
    classes[i].is_maximal = maximal;
  }
  return lattice;
}

std::vector<SubgroupClass> maximal_subgroups(SubgroupLattice const &lattice)
{
  std::vector<SubgroupClass> out;
  for (auto const &c : lattice.classes) {
    if (c.is_maximal)
      out.push_back(c);
  }
  return out;
}

std::vector<SubgroupClass> normal_subgroups(SubgroupLattice const &lattice)
{
  std::vector<SubgroupClass> out;
  for (auto const &c : lattice.classes) {
    if (c.is_normal)
      out.push_back(c);
  }
  return out;
}

Bitset frattini_members(SubgroupLattice const &lattice)
{
  std::size_t n = lattice.table->size();
  Bitset result(n);
  for (std::size_t i = 0; i < n; ++i)
    result.set(i);
  for (auto const &c : lattice.classes) {
    if (!c.is_maximal)
      continue;
    for (auto const &conj : lattice.conjugates[c.index])
      result &= conj;
  }
  return result;
}

PermGroup frattini(SubgroupLattice const &lattice)
{
  return lattice.table->to_group(frattini_members(lattice));
}

PermGroup quotient(ElementTable const &table, Bitset const &normal)
{
  for (auto g : table.generators()) {
    if (!(table.conjugate(normal, g) == normal))
      throw NotNormal("subgroup is not normal in the group");
  }

  std::size_t n = table.size();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(n, unset);
  std::vector<std::uint32_t> reps;
  auto members = normal.indices();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset_of[x] != unset)
      continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto y : members)
      coset_of[table.mul(y, x)] = c;
  }

  std::size_t degree = reps.size();
  if (degree == 1)
    return PermGroup::trivial(1);
  std::vector<Permutation> gens;
  for (auto g : table.generators()) {
    std::vector<point_t> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = coset_of[table.mul(reps[c], g)];
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup quotient(PermGroup const &group, PermGroup const &normal, std::uint64_t limit)
{
  ElementTable table(group, limit);
  return quotient(table, table.to_bitset(normal));
}

nlohmann::json lattice_json(SubgroupLattice const &lattice)
{
  nlohmann::json classes = nlohmann::json::array();
  for (auto const &c : lattice.classes) {
    nlohmann::json gens = nlohmann::json::array();
    for (auto const &g : c.representative.generators())
      gens.push_back(to_cycles(g));
    classes.push_back({{"index", c.index},
                       {"order", c.order},
                       {"class_size", c.class_size},
                       {"normal", c.is_normal},
                       {"maximal", c.is_maximal},
                       {"soluble", c.soluble},
                       {"generators", gens}});
  }
  nlohmann::json inclusion = nlohmann::json::array();
  for (auto [i, j] : lattice.inclusion)
    inclusion.push_back({i, j});
  return {{"order", lattice.table->size()},
          {"degree", lattice.ambient().degree()},
          {"classes", classes},
          {"inclusion", inclusion}};
}

} // namespace mingrp
