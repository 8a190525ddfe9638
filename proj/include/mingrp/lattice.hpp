#ifndef MINGRP_LATTICE_HPP
#define MINGRP_LATTICE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mingrp/names.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

inline constexpr std::uint64_t default_order_limit = 2000;
/// Hard ceiling for exhaustive work regardless of the caller's limit; the
/// multiplication table is quadratic in the order.
inline constexpr std::uint64_t max_table_order = 10000;

/// Subset of a group's elements, indexed by position in an ElementTable.
class Bitset
{
public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
  : words_((size + 63) / 64, 0), size_(size)
  {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const;
  bool subset_of(Bitset const &other) const;
  std::vector<std::uint32_t> indices() const;
  Bitset &operator&=(Bitset const &other);
  std::size_t hash() const;

  /// Lexicographic comparison of the sorted index lists (equal sizes assumed).
  bool lex_less(Bitset const &other) const;

  friend bool operator==(Bitset const &, Bitset const &) = default;

private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct BitsetHash
{
  std::size_t operator()(Bitset const &b) const { return b.hash(); }
};

/// All elements of a small group, sorted (the identity is index 0), with a
/// full multiplication table.
class ElementTable
{
public:
  ElementTable(PermGroup const &group, std::uint64_t limit);

  PermGroup const &group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  Permutation const &element(std::size_t i) const { return elements_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint64_t element_order(std::uint32_t a) const { return orders_[a]; }
  std::optional<std::uint32_t> index_of(Permutation const &p) const;
  /// Indices of the group's generators.
  std::vector<std::uint32_t> const &generators() const { return generators_; }

  /// Closure of `base` (a subgroup) together with `extra`.
  Bitset closure(Bitset const &base, std::vector<std::uint32_t> const &base_gens,
                 std::vector<std::uint32_t> const &extra) const;
  Bitset subgroup(std::vector<std::uint32_t> const &gens) const;
  Bitset conjugate(Bitset const &set, std::uint32_t g) const;
  /// Greedy generators: smallest element not yet covered, repeatedly.
  std::vector<std::uint32_t> canonical_generators(Bitset const &subgroup) const;
  PermGroup to_group(std::vector<std::uint32_t> const &gens) const;
  PermGroup to_group(Bitset const &subgroup) const;
  Bitset to_bitset(PermGroup const &subgroup) const;
  std::map<std::uint64_t, std::uint64_t> element_orders(Bitset const &subgroup) const;

private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> generators_;
};

struct SubgroupClass
{
  std::size_t index = 0;
  PermGroup representative = PermGroup::trivial(1);
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  bool is_normal = false;
  bool is_maximal = false;
  bool soluble = false;
  /// Element indices of the representative, in the lattice's ElementTable.
  Bitset members;
  std::vector<std::uint32_t> generators;
};

struct SubgroupLattice
{
  std::shared_ptr<ElementTable const> table;
  std::vector<SubgroupClass> classes;
  /// All conjugates of each class representative.
  std::vector<std::vector<Bitset>> conjugates;
  /// Proper inclusions (i, j): class i lies in some conjugate of class j.
  std::vector<std::pair<std::size_t, std::size_t>> inclusion;

  PermGroup const &ambient() const { return table->group(); }
  bool included(std::size_t i, std::size_t j) const;
};

SubgroupLattice subgroup_classes(PermGroup const &group,
                                 std::uint64_t limit = default_order_limit);

std::vector<SubgroupClass> maximal_subgroups(SubgroupLattice const &lattice);
std::vector<SubgroupClass> normal_subgroups(SubgroupLattice const &lattice);
/// Intersection of every conjugate of every maximal subgroup.
PermGroup frattini(SubgroupLattice const &lattice);
Bitset frattini_members(SubgroupLattice const &lattice);

/// Action on right cosets N x, each represented by its least element.
/// Throws NotNormal if N is not normal in G.
PermGroup quotient(PermGroup const &group, PermGroup const &normal,
                   std::uint64_t limit = default_order_limit);
PermGroup quotient(ElementTable const &table, Bitset const &normal);

struct FactorDescriptor
{
  enum class Kind { cyclic_prime, identified, ambiguous, unidentified };

  std::uint64_t order = 0;
  Kind kind = Kind::unidentified;
  std::optional<GroupName> name;
  std::vector<GroupName> candidates;
  std::map<std::uint64_t, std::uint64_t> element_orders;
};

std::string to_string(FactorDescriptor::Kind kind);
/// Short label: "C7", the identified name, or "order N (...)".
std::string describe(FactorDescriptor const &factor);

enum class TieBreak { largest_first, smallest_first };

/// Factors top-down along a composition series chosen by `tie_break`.
std::vector<FactorDescriptor> composition_factors(PermGroup const &group,
                                                  std::uint64_t limit = default_order_limit,
                                                  TieBreak tie_break = TieBreak::largest_first);

/// Orders below this bound are matched against the simple-order table.
inline constexpr std::uint64_t identify_order_bound = 1'000'000;

FactorDescriptor identify_simple(std::uint64_t order,
                                 std::map<std::uint64_t, std::uint64_t> const &element_orders);

/// Identifies G/N from the orders of the cosets of N.
FactorDescriptor identify_quotient(ElementTable const &table, Bitset const &normal);

/// Normalized names of nonabelian simple groups of the given order (< 10^6).
std::vector<GroupName> simple_groups_of_order(std::uint64_t order);

bool is_simple(PermGroup const &group);

nlohmann::json lattice_json(SubgroupLattice const &lattice);

} // namespace mingrp

#endif // MINGRP_LATTICE_HPP
