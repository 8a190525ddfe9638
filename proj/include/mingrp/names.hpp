#ifndef MINGRP_NAMES_HPP
#define MINGRP_NAMES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mingrp
{

enum class Family
{
  alternating,
  symmetric,
  linear,
  unitary,
  symplectic,
  orthogonal_odd,
  orthogonal_plus,
  orthogonal_minus,
  g2,
  f4,
  e6,
  e7,
  e8,
  suzuki,
  ree_g2,
  ree_f4,
  triality_d4,
  twisted_e6,
  tits,
  sporadic,
  cyclic
};

struct PrimePower
{
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned exponent = 0;

  friend bool operator==(PrimePower const &, PrimePower const &) = default;
};

/// A parsed ATLAS-style name. `n` is the rank/dimension for classical
/// families, the degree for A/S, and the order for cyclic groups.
struct GroupName
{
  Family family = Family::alternating;
  std::optional<unsigned> n;
  std::optional<PrimePower> q;
  std::string label; // sporadic groups only
  std::string raw;

  friend bool operator==(GroupName const &a, GroupName const &b)
  {
    return a.family == b.family && a.n == b.n && a.q == b.q && a.label == b.label;
  }
};

/// Throws ParseError for unparsable text, NotSimpleName for a q that is not a
/// prime power or parameters outside the simple-group domain, and
/// OverflowError when q exceeds 2^63 - 1.
GroupName parse_name(std::string_view text);

/// Rewrites L2(4), L2(5) -> A5, L2(9) -> A6, L4(2) -> A8, L3(2) -> L2(7).
GroupName normalize(GroupName const &name);

std::string render(GroupName const &name);

/// Convenience constructors (no domain validation).
GroupName make_alternating(unsigned n);
GroupName make_symmetric(unsigned n);
GroupName make_cyclic(unsigned p);
GroupName make_classical(Family family, unsigned n, std::uint64_t q);
GroupName make_exceptional(Family family, std::uint64_t q);
GroupName make_sporadic(std::string label);

} // namespace mingrp

#endif // MINGRP_NAMES_HPP
