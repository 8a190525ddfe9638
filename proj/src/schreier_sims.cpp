#include <algorithm>
#include <cassert>
#include <limits>

#include "mingrp/error.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

StabChain::StabChain(std::size_t degree,
                     std::vector<Permutation> const &generators)
: degree_(degree)
{
  std::vector<Permutation> gens;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree())
                           + " in group of degree " + std::to_string(degree));
    if (!g.is_identity())
      gens.push_back(g);
  }

  // Extend the base until no generator fixes it pointwise.
  for (auto const &g : gens) {
    bool fixes_base = true;
    for (auto const &level : levels_) {
      if (g[level.base_point] != level.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) {
      Level level;
      level.base_point = *g.smallest_moved_point();
      levels_.push_back(std::move(level));
    }
  }

  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const &g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        point_t b = levels_[j].base_point;
        if (g[b] != b) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix)
        levels_[i].generators.push_back(g);
    }
    build_orbit(levels_[i]);
  }

  schreier_sims();
}

void StabChain::build_orbit(Level &level) const
{
  level.slot.assign(degree_, -1);
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation(degree_));
  level.transversal_inv.assign(1, Permutation(degree_));
  level.slot[level.base_point] = 0;

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    point_t beta = level.orbit[k];
    for (auto const &s : level.generators) {
      point_t gamma = s[beta];
      if (level.slot[gamma] >= 0)
        continue;
      level.slot[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation u = level.transversal[k] * s;
      level.transversal_inv.push_back(inverse(u));
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation p,
                                                    std::size_t start) const
{
  for (std::size_t i = start; i < levels_.size(); ++i) {
    auto const &level = levels_[i];
    std::int32_t slot = level.slot[p[level.base_point]];
    if (slot < 0)
      return {std::move(p), i};
    p = p * level.transversal_inv[static_cast<std::size_t>(slot)];
  }
  return {std::move(p), levels_.size()};
}

bool StabChain::contains(Permutation const &p) const
{
  if (p.degree() != degree_)
    throw DegreeMismatch("membership test: degree " + std::to_string(p.degree())
                         + " vs " + std::to_string(degree_));
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void StabChain::schreier_sims()
{
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;

  while (i >= 0) {
    bool extended = false;
    auto const current = static_cast<std::size_t>(i);

    for (std::size_t k = 0; k < levels_[current].orbit.size() && !extended; ++k) {
      for (std::size_t s = 0; s < levels_[current].generators.size(); ++s) {
        Level const &level = levels_[current];
        Permutation const &gen = level.generators[s];
        point_t image = gen[level.orbit[k]];
        auto image_slot = static_cast<std::size_t>(level.slot[image]);

        Permutation schreier = level.transversal[k] * gen
                               * level.transversal_inv[image_slot];
        if (schreier.is_identity())
          continue;

        auto [residue, stop] = sift(std::move(schreier), current + 1);
        if (stop == levels_.size() && residue.is_identity())
          continue;

        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = *residue.smallest_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = current + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          build_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }

    if (!extended)
      --i;
  }
}

std::vector<point_t> StabChain::base() const
{
  std::vector<point_t> result;
  for (auto const &level : levels_)
    result.push_back(level.base_point);
  return result;
}

std::vector<Permutation> StabChain::strong_generators() const
{
  std::vector<Permutation> result;
  for (auto const &level : levels_) {
    for (auto const &g : level.generators) {
      if (std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(g);
    }
  }
  return result;
}

std::uint64_t StabChain::order() const
{
  unsigned __int128 result = 1;
  for (auto const &level : levels_) {
    result *= level.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

} // namespace mingrp
