#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mingrp/error.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  if (degree > max_degree)
    throw std::invalid_argument("degree " + std::to_string(degree)
                                + " exceeds supported maximum");
  std::iota(images_.begin(), images_.end(), point_t{0});
}

Permutation::Permutation(std::vector<point_t> images)
: images_(std::move(images))
{
  if (images_.size() > max_degree)
    throw std::invalid_argument("degree exceeds supported maximum");

  std::vector<bool> seen(images_.size(), false);
  for (point_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_one_based(std::span<point_t const> images)
{
  std::vector<point_t> zero_based;
  zero_based.reserve(images.size());
  for (point_t x : images) {
    if (x == 0)
      throw std::invalid_argument("point 0 in 1-based image table");
    zero_based.push_back(x - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<point_t>> const &cycles)
{
  Permutation result(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (point_t x : cycle) {
      if (x == 0 || x > degree)
        throw std::invalid_argument("cycle point " + std::to_string(x)
                                    + " outside 1.." + std::to_string(degree));
      if (used[x - 1])
        throw std::invalid_argument("point " + std::to_string(x)
                                    + " repeated in cycle notation");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }

  return result;
}

bool Permutation::is_identity() const
{
  for (point_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

std::optional<point_t> Permutation::smallest_moved_point() const
{
  for (point_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return i;
  }
  return std::nullopt;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> done(images_.size(), false);
  std::uint64_t result = 1;

  for (point_t i = 0; i < images_.size(); ++i) {
    if (done[i])
      continue;
    std::uint64_t length = 0;
    for (point_t j = i; !done[j]; j = images_[j]) {
      done[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }

  return result;
}

Permutation Permutation::extended(std::size_t degree) const
{
  if (degree < images_.size())
    throw DegreeMismatch("cannot shrink a permutation");
  Permutation result(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

std::size_t Permutation::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  for (point_t x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degree " + std::to_string(p.degree())
                         + " vs " + std::to_string(q.degree()));

  std::vector<point_t> images(p.degree());
  for (point_t i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];

  return Permutation::unchecked(std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<point_t> images(p.degree());
  for (point_t i = 0; i < p.degree(); ++i)
    images[p[i]] = i;
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(Permutation const &p, Permutation const &g)
{
  return inverse(g) * p * g;
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return inverse(a) * inverse(b) * a * b;
}

} // namespace mingrp
