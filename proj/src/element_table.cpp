#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "mingrp/error.hpp"
#include "mingrp/lattice.hpp"

namespace mingrp
{

std::size_t Bitset::count() const
{
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::subset_of(Bitset const &other) const
{
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i])
      return false;
  }
  return true;
}

std::vector<std::uint32_t> Bitset::indices() const
{
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w; w &= w - 1)
      out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

Bitset &Bitset::operator&=(Bitset const &other)
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

std::size_t Bitset::hash() const
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_)
    h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

bool Bitset::lex_less(Bitset const &other) const
{
  // The first differing index decides: whichever list contains it is smaller.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto diff = words_[i] ^ other.words_[i];
    if (diff)
      return words_[i] >> std::countr_zero(diff) & 1;
  }
  return false;
}

namespace
{

using Index = std::unordered_map<Permutation, std::uint32_t, PermutationHash>;

} // namespace

ElementTable::ElementTable(PermGroup const &group, std::uint64_t limit)
: group_(group)
{
  limit = std::min(limit, max_table_order);
  auto const &gens = group.generators();
  std::size_t k = gens.size();

  // Breadth-first enumeration recording how each element was reached.
  std::vector<Permutation> bfs{Permutation(group.degree())};
  std::vector<std::uint32_t> parent{0}, via{0};
  Index index{{bfs[0], 0}};
  std::vector<std::uint32_t> right; // right[i * k + j] = bfs index of bfs[i] * gens[j]

  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = bfs[i] * gens[j];
      auto [it, inserted] = index.try_emplace(y, static_cast<std::uint32_t>(bfs.size()));
      if (inserted) {
        if (bfs.size() >= limit)
          throw LimitExceeded("group has more than " + std::to_string(limit) + " elements");
        bfs.push_back(std::move(y));
        parent.push_back(static_cast<std::uint32_t>(i));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      right.push_back(it->second);
    }
  }

  std::size_t n = bfs.size();
  std::vector<std::uint32_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(),
            [&](std::uint32_t a, std::uint32_t b) { return bfs[a] < bfs[b]; });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t r = 0; r < n; ++r)
    rank[sorted[r]] = static_cast<std::uint32_t>(r);

  table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto ra = rank[a];
    table_[ra * n + rank[0]] = ra;
    // bfs order guarantees the parent column is filled first
    std::vector<std::uint32_t> row(n);
    row[0] = static_cast<std::uint32_t>(a);
    for (std::size_t b = 1; b < n; ++b) {
      row[b] = right[row[parent[b]] * k + via[b]];
      table_[ra * n + rank[b]] = rank[row[b]];
    }
  }

  elements_.reserve(n);
  for (auto i : sorted)
    elements_.push_back(std::move(bfs[i]));

  inverse_.resize(n);
  orders_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    orders_[a] = elements_[a].order();
  }
  for (std::size_t j = 0; j < k; ++j)
    generators_.push_back(rank[index.at(gens[j])]);
}

std::optional<std::uint32_t> ElementTable::index_of(Permutation const &p) const
{
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<std::uint32_t>(it - elements_.begin());
}

Bitset ElementTable::closure(Bitset const &base, std::vector<std::uint32_t> const &base_gens,
                             std::vector<std::uint32_t> const &extra) const
{
  std::size_t n = size();
  Bitset result = base;
  std::vector<std::uint32_t> queue = base.indices();
  std::size_t old = queue.size();
  std::size_t count = old;

  std::vector<std::uint32_t> gens = base_gens;
  gens.insert(gens.end(), extra.begin(), extra.end());

  auto full = [&] {
    Bitset all(n);
    for (std::size_t i = 0; i < n; ++i)
      all.set(i);
    return all;
  };

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto y = queue[qi];
    // Members of the base are closed under the base generators already.
    auto const &use = qi < old ? extra : gens;
    for (auto s : use) {
      auto z = mul(y, s);
      if (!result.test(z)) {
        result.set(z);
        queue.push_back(z);
        if (2 * ++count > n)
          return full();
      }
    }
  }
  return result;
}

Bitset ElementTable::subgroup(std::vector<std::uint32_t> const &gens) const
{
  Bitset trivial(size());
  trivial.set(0);
  return closure(trivial, {}, gens);
}

Bitset ElementTable::conjugate(Bitset const &set, std::uint32_t g) const
{
  Bitset out(size());
  auto gi = inv(g);
  for (auto k : set.indices())
    out.set(mul(mul(gi, k), g));
  return out;
}

std::vector<std::uint32_t> ElementTable::canonical_generators(Bitset const &subgroup) const
{
  std::vector<std::uint32_t> gens;
  Bitset covered(size());
  covered.set(0);
  for (auto i : subgroup.indices()) {
    if (covered.test(i))
      continue;
    covered = closure(covered, gens, {i});
    gens.push_back(i);
  }
  return gens;
}

PermGroup ElementTable::to_group(std::vector<std::uint32_t> const &gens) const
{
  std::vector<Permutation> perms;
  for (auto g : gens)
    perms.push_back(elements_[g]);
  return PermGroup(group_.degree(), std::move(perms));
}

PermGroup ElementTable::to_group(Bitset const &subgroup) const
{
  return to_group(canonical_generators(subgroup));
}

Bitset ElementTable::to_bitset(PermGroup const &subgroup) const
{
  std::vector<std::uint32_t> gens;
  for (auto const &g : subgroup.generators()) {
    auto i = g.degree() == group_.degree() ? index_of(g) : std::nullopt;
    if (!i)
      throw NotMember(to_cycles(g) + " is not an element of the group");
    gens.push_back(*i);
  }
  return this->subgroup(gens);
}

std::map<std::uint64_t, std::uint64_t> ElementTable::element_orders(Bitset const &subgroup) const
{
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto i : subgroup.indices())
    ++out[orders_[i]];
  return out;
}

} // namespace mingrp
