#ifndef MINGRP_VERDICT_HPP
#define MINGRP_VERDICT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mingrp/lattice.hpp"
#include "mingrp/lists.hpp"

namespace mingrp
{

/// Chain G > M > H with M maximal in G, H maximal in M and H insoluble.
struct ConditionWitness
{
  std::size_t maximal_index = 0; // class index in the lattice of G
  std::uint64_t maximal_order = 0;
  std::size_t sub_index = 0; // class index in the lattice of M
  std::uint64_t sub_order = 0;
  PermGroup maximal = PermGroup::trivial(1);
  PermGroup subgroup = PermGroup::trivial(1);
};

/// Whether every proper subgroup of every maximal subgroup is soluble.
/// Checked on two levels: insoluble maximal subgroups M must have only
/// soluble maximal subgroups.
struct ConditionReport
{
  bool holds = true;
  std::optional<ConditionWitness> witness;
  unsigned levels = 2;
};

ConditionReport condition_holds(PermGroup const &group, std::uint64_t limit = default_order_limit);
ConditionReport condition_holds(SubgroupLattice const &lattice,
                                std::uint64_t limit = default_order_limit);

enum class TheoremCase { one, two, three, four, violation };

std::string to_string(TheoremCase c);

struct TheoremCaseReport
{
  TheoremCase kind = TheoremCase::violation;
  ConditionReport condition;

  // Cases 2 and 4: Phi(G) and G / Phi(G).
  std::optional<std::uint64_t> frattini_order;
  // Case 3: the identified quotient is G0 / Phi(G0).
  std::optional<FactorDescriptor> quotient;
  std::optional<ListVerdict> list;

  // Case 3 only.
  std::optional<std::size_t> g0_index;
  std::optional<std::uint64_t> g0_order;
  std::optional<std::uint64_t> g0_prime_index;
  std::optional<std::uint64_t> g0_frattini_order;
  std::optional<PermGroup> g0;

  std::string note;
};

/// Throws IdentificationError when a quotient that must be simple and listed
/// cannot be named or is not on the expected list.
TheoremCaseReport theorem_case(PermGroup const &group, std::uint64_t limit = default_order_limit);
TheoremCaseReport theorem_case(SubgroupLattice const &lattice, ConditionReport const &condition,
                               std::uint64_t limit = default_order_limit);

struct CorollaryReport
{
  bool second_maximal_soluble = false;
  std::vector<FactorDescriptor> factors;
  bool conforming = false;
};

/// True for prime order, or an identified name on List 1 or List 3.
bool factor_conforms(FactorDescriptor const &factor);

CorollaryReport corollary_check(PermGroup const &group, std::uint64_t limit = default_order_limit);
CorollaryReport corollary_check(PermGroup const &group, ConditionReport const &condition,
                                std::uint64_t limit = default_order_limit);

/// Builds the named group and compares the brute-force condition with list
/// membership. Throws LimitExceeded or Unsupported when not checkable.
bool cross_validate(GroupName const &name, std::uint64_t limit = default_order_limit);

/// Full analysis of one concrete group.
struct Verification
{
  std::string input;
  std::optional<GroupName> name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  TheoremCaseReport theorem;
  CorollaryReport corollary;
  std::map<std::string, double> timings; // seconds
};

Verification verify(PermGroup const &group, std::string input,
                    std::optional<GroupName> name = std::nullopt,
                    std::uint64_t limit = default_order_limit);

nlohmann::json to_json(FactorDescriptor const &factor);
nlohmann::json to_json(Verification const &v);
std::string render_text(Verification const &v);

} // namespace mingrp

#endif // MINGRP_VERDICT_HPP
