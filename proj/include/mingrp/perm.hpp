#ifndef MINGRP_PERM_HPP
#define MINGRP_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mingrp
{

using point_t = std::uint32_t;

// Largest supported permutation degree.
inline constexpr std::size_t max_degree = std::size_t{1} << 16;

/// A bijection on {0, ..., n-1}. All text I/O is 1-based; indices used by
/// the C++ interface are 0-based.
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From a 0-based image table; throws std::invalid_argument unless the
  /// table is a bijection.
  explicit Permutation(std::vector<point_t> images);

  /// Skips validation; the caller guarantees `images` is a bijection.
  static Permutation unchecked(std::vector<point_t> images)
  {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  static Permutation from_one_based(std::span<point_t const> images);

  /// Product of the given (1-based) cycles. Cycles must be disjoint.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<point_t>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  point_t operator[](point_t i) const { return images_[i]; }
  std::vector<point_t> const &images() const { return images_; }

  bool is_identity() const;
  std::optional<point_t> smallest_moved_point() const;
  std::uint64_t order() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;

  std::size_t hash() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b)
  {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<point_t> images_;
};

/// Apply `p` first, then `q`: the result maps i to q(p(i)).
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

inline Permutation operator*(Permutation const &p, Permutation const &q)
{
  return compose(p, q);
}

/// g^-1 p g
Permutation conjugate(Permutation const &p, Permutation const &g);
/// a^-1 b^-1 a b
Permutation commutator(Permutation const &a, Permutation const &b);

/// Cycle notation "(1,2,3)(4,5)"; the identity renders as "()".
std::string to_cycles(Permutation const &p);

/// Parses cycle notation. The degree is the largest point mentioned unless
/// `degree` is given.
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const { return p.hash(); }
};

/// Base and strong generating set, built by the deterministic Schreier-Sims
/// algorithm. Base points are the smallest point moved by the generator that
/// forced the new level.
class StabChain
{
public:
  struct Level
  {
    point_t base_point;
    std::vector<Permutation> generators;
    std::vector<std::int32_t> slot; // point -> index into orbit, or -1
    std::vector<point_t> orbit;
    std::vector<Permutation> transversal;     // base_point -> orbit[k]
    std::vector<Permutation> transversal_inv;
  };

  StabChain(std::size_t degree, std::vector<Permutation> const &generators);

  std::size_t degree() const { return degree_; }
  std::vector<Level> const &levels() const { return levels_; }
  std::vector<point_t> base() const;
  std::vector<Permutation> strong_generators() const;

  std::uint64_t order() const;

  /// Sifts `p` from level `start`. Returns the residue and the index of the
  /// level where sifting stopped (levels().size() when all levels passed).
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t start = 0) const;

  bool contains(Permutation const &p) const;

private:
  void build_orbit(Level &level) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A group given by permutation generators. Values are immutable; the
/// stabilizer chain is built on first use and shared between copies.
class PermGroup
{
public:
  /// Identity generators are dropped; duplicates removed.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }

  StabChain const &chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(Permutation const &p) const;

private:
  struct Cache
  {
    std::once_flag once;
    std::unique_ptr<StabChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

struct SeriesStep
{
  PermGroup subgroup;
  std::uint64_t order;
};

std::uint64_t group_order(PermGroup const &group);
bool contains(PermGroup const &group, Permutation const &p);

/// Smallest normal subgroup of `group` containing `elements`.
/// Throws NotMember if some element lies outside `group`.
PermGroup normal_closure(PermGroup const &group,
                         std::vector<Permutation> const &elements);

/// G = G(0) >= G(1) >= ... ending in the trivial group or in a perfect group
/// (in which case the last two entries have equal order).
std::vector<SeriesStep> derived_series(PermGroup const &group);

bool is_soluble(PermGroup const &group);

/// All elements by breadth-first closure, sorted. Does not consult the
/// stabilizer chain. Throws LimitExceeded when more than `limit` elements
/// turn up.
std::vector<Permutation> elements(PermGroup const &group, std::uint64_t limit);

/// Generator file: one permutation per line, '#' comments, optional
/// "degree N" line. Degree defaults to the largest point mentioned.
PermGroup parse_generators(std::string_view text);

/// Inverse of parse_generators; `header` lines are written as comments.
std::string format_generators(PermGroup const &group,
                              std::vector<std::string> const &header = {});

} // namespace mingrp

template<>
struct std::hash<mingrp::Permutation>
{
  std::size_t operator()(mingrp::Permutation const &p) const noexcept
  {
    return p.hash();
  }
};

#endif // MINGRP_PERM_HPP
