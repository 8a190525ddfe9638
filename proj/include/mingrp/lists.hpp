#ifndef MINGRP_LISTS_HPP
#define MINGRP_LISTS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace mingrp
{

struct GroupName;

/// Deterministic for every 64-bit input: trial division by small primes,
/// then Miller-Rabin with the first twelve prime bases.
bool is_prime(std::uint64_t n);

/// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// If n = p^e with p prime and e >= 1, returns (p, e).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

struct ExponentShape
{
  enum class Kind { prime, semiprime, other };

  std::uint64_t value = 0;
  Kind kind = Kind::other;
  // Set for semiprime values, r <= s.
  std::uint64_t r = 0;
  std::uint64_t s = 0;
};

ExponentShape exponent_shape(std::uint64_t n);

enum class ListId { none, list1, list3 };

struct ListVerdict
{
  bool member = false;
  ListId list = ListId::none;
  int item = 0;
  std::string reason;
};

std::string to_string(ListId list);

/// Membership in Thompson's list of minimal simple groups.
ListVerdict in_list1(GroupName const &name);

/// Membership in the list of non-minimal simple groups whose maximal
/// subgroups have only soluble proper subgroups.
ListVerdict in_list3(GroupName const &name);

} // namespace mingrp

#endif // MINGRP_LISTS_HPP
