#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mingrp/error.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: degree_(degree),
  cache_(std::make_shared<Cache>())
{
  if (degree == 0 || degree > max_degree)
    throw std::invalid_argument("group degree must lie in 1.."
                                + std::to_string(max_degree));

  for (auto &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree())
                           + " in group of degree " + std::to_string(degree));
    if (g.is_identity())
      continue;
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return PermGroup(degree, {});
}

StabChain const &PermGroup::chain() const
{
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabChain>(degree_, generators_);
  });
  return *cache_->chain;
}

bool PermGroup::contains(Permutation const &p) const
{
  return chain().contains(p);
}

std::uint64_t group_order(PermGroup const &group)
{
  return group.order();
}

bool contains(PermGroup const &group, Permutation const &p)
{
  return group.contains(p);
}

PermGroup normal_closure(PermGroup const &group,
                         std::vector<Permutation> const &elements)
{
  std::vector<Permutation> gens;
  for (auto const &x : elements) {
    if (!group.contains(x))
      throw NotMember("normal_closure: " + to_cycles(x) + " is not in the group");
    if (!x.is_identity())
      gens.push_back(x);
  }

  PermGroup closure(group.degree(), gens);
  std::deque<Permutation> pending(closure.generators().begin(),
                                  closure.generators().end());

  while (!pending.empty()) {
    Permutation x = std::move(pending.front());
    pending.pop_front();

    for (auto const &g : group.generators()) {
      Permutation c = conjugate(x, g);
      if (closure.contains(c))
        continue;
      gens.push_back(c);
      closure = PermGroup(group.degree(), gens);
      pending.push_back(std::move(c));
    }
  }

  return closure;
}

std::vector<SeriesStep> derived_series(PermGroup const &group)
{
  std::vector<SeriesStep> series{{group, group.order()}};

  while (series.back().order > 1) {
    PermGroup const &current = series.back().subgroup;
    auto const &gens = current.generators();

    std::vector<Permutation> commutators;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        commutators.push_back(commutator(gens[a], gens[b]));
    }

    PermGroup next = normal_closure(current, commutators);
    std::uint64_t order = next.order();
    bool perfect = order == series.back().order;
    series.push_back({std::move(next), order});
    if (perfect)
      break;
  }

  return series;
}

bool is_soluble(PermGroup const &group)
{
  return derived_series(group).back().order == 1;
}

std::vector<Permutation> elements(PermGroup const &group, std::uint64_t limit)
{
  Permutation identity(group.degree());
  std::unordered_set<Permutation> seen{identity};
  std::vector<Permutation> result{identity};

  for (std::size_t k = 0; k < result.size(); ++k) {
    for (auto const &g : group.generators()) {
      Permutation next = result[k] * g;
      if (seen.insert(next).second) {
        if (result.size() >= limit)
          throw LimitExceeded("order exceeds limit " + std::to_string(limit));
        result.push_back(std::move(next));
      }
    }
  }

  std::sort(result.begin(), result.end());
  return result;
}

} // namespace mingrp
