#include <algorithm>
#include <chrono>
#include <sstream>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/verdict.hpp"

namespace mingrp
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Identified
{
  FactorDescriptor factor;
  GroupName name;
};

// Names G/N, requiring the quotient to be simple.
std::optional<Identified> identify_simple_quotient(ElementTable const &table, Bitset const &normal)
{
  auto factor = identify_quotient(table, normal);
  if (factor.kind != FactorDescriptor::Kind::identified || !factor.name)
    return std::nullopt;
  if (!is_simple(quotient(table, normal)))
    return std::nullopt;
  factor.name = normalize(*factor.name);
  return Identified{factor, *factor.name};
}

std::string pretty(GroupName const &name) { return render(name); }

} // namespace

std::string to_string(TheoremCase c)
{
  switch (c) {
  case TheoremCase::one: return "1";
  case TheoremCase::two: return "2";
  case TheoremCase::three: return "3";
  case TheoremCase::four: return "4";
  case TheoremCase::violation: return "violation";
  }
  return "violation";
}

ConditionReport condition_holds(SubgroupLattice const &lattice, std::uint64_t limit)
{
  // Largest maximal subgroups first, so the witness is deterministic.
  ConditionReport report;
  for (auto it = lattice.classes.rbegin(); it != lattice.classes.rend(); ++it) {
    auto const &m = *it;
    if (!m.is_maximal || m.soluble)
      continue;
    auto inner = subgroup_classes(m.representative, limit);
    for (auto const &h : inner.classes) {
      if (h.is_maximal && !h.soluble) {
        report.holds = false;
        report.witness = ConditionWitness{m.index, m.order, h.index, h.order,
                                          m.representative, h.representative};
        return report;
      }
    }
  }
  return report;
}

ConditionReport condition_holds(PermGroup const &group, std::uint64_t limit)
{
  return condition_holds(subgroup_classes(group, limit), limit);
}

TheoremCaseReport theorem_case(SubgroupLattice const &lattice, ConditionReport const &condition,
                               std::uint64_t limit)
{
  TheoremCaseReport report;
  report.condition = condition;
  if (!condition.holds) {
    report.kind = TheoremCase::violation;
    return report;
  }

  auto const &group = lattice.ambient();
  if (is_soluble(group)) {
    report.kind = TheoremCase::one;
    return report;
  }

  auto const &table = *lattice.table;
  auto maximals = maximal_subgroups(lattice);
  bool all_soluble = std::all_of(maximals.begin(), maximals.end(),
                                 [](SubgroupClass const &c) { return c.soluble; });

  if (all_soluble) {
    auto phi = frattini_members(lattice);
    report.frattini_order = phi.count();
    auto named = identify_simple_quotient(table, phi);
    if (!named)
      throw IdentificationError("unidentified quotient G/Phi(G) of order "
                                + std::to_string(table.size() / phi.count()));
    auto verdict = in_list1(named->name);
    if (!verdict.member)
      throw IdentificationError("G/Phi(G) = " + pretty(named->name) + " is not on List 1");
    report.kind = TheoremCase::two;
    report.quotient = named->factor;
    report.list = verdict;
    return report;
  }

  // Prime-index normal subgroups, largest first, then by class order.
  std::vector<SubgroupClass const *> candidates;
  for (auto const &c : lattice.classes) {
    if (c.is_normal && c.order < table.size() && is_prime(table.size() / c.order))
      candidates.push_back(&c);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](auto const *a, auto const *b) { return a->order > b->order; });
  for (auto const *c : candidates) {
    auto inner = subgroup_classes(c->representative, limit);
    auto phi0 = frattini_members(inner);
    auto named = identify_simple_quotient(*inner.table, phi0);
    if (!named)
      continue;
    auto verdict = in_list1(named->name);
    if (!verdict.member)
      continue;
    report.kind = TheoremCase::three;
    report.g0_index = c->index;
    report.g0_order = c->order;
    report.g0_prime_index = table.size() / c->order;
    report.g0_frattini_order = phi0.count();
    report.g0 = c->representative;
    report.quotient = named->factor;
    report.list = verdict;
    report.note = "identified quotient is G0/Phi(G0); the literal statement of this case names "
                  "G/Phi(G0), which is not simple here";
    return report;
  }

  auto phi = frattini_members(lattice);
  report.frattini_order = phi.count();
  auto bar = quotient(table, phi);
  auto bar_lattice = phi.count() == 1 ? lattice : subgroup_classes(bar, limit);
  if (normal_subgroups(bar_lattice).size() != 2)
    throw IdentificationError("G/Phi(G) of order " + std::to_string(bar.order())
                              + " is not simple");
  auto factor = identify_quotient(table, phi);
  if (factor.kind != FactorDescriptor::Kind::identified || !factor.name)
    throw IdentificationError("unidentified simple quotient of order "
                              + std::to_string(factor.order));
  factor.name = normalize(*factor.name);
  auto verdict = in_list3(*factor.name);
  if (!verdict.member)
    throw IdentificationError("G/Phi(G) = " + pretty(*factor.name) + " is not on List 3");
  report.kind = TheoremCase::four;
  report.quotient = factor;
  report.list = verdict;
  return report;
}

TheoremCaseReport theorem_case(PermGroup const &group, std::uint64_t limit)
{
  auto lattice = subgroup_classes(group, limit);
  return theorem_case(lattice, condition_holds(lattice, limit), limit);
}

bool factor_conforms(FactorDescriptor const &factor)
{
  if (factor.kind == FactorDescriptor::Kind::cyclic_prime)
    return true;
  if (factor.kind != FactorDescriptor::Kind::identified || !factor.name)
    return false;
  auto name = normalize(*factor.name);
  return in_list1(name).member || in_list3(name).member;
}

CorollaryReport corollary_check(PermGroup const &group, ConditionReport const &condition,
                                std::uint64_t limit)
{
  CorollaryReport report;
  report.second_maximal_soluble = condition.holds;
  if (!report.second_maximal_soluble)
    return report;
  report.factors = composition_factors(group, limit);
  report.conforming = std::all_of(report.factors.begin(), report.factors.end(), factor_conforms);
  return report;
}

CorollaryReport corollary_check(PermGroup const &group, std::uint64_t limit)
{
  return corollary_check(group, condition_holds(group, limit), limit);
}

bool cross_validate(GroupName const &name, std::uint64_t limit)
{
  std::uint64_t order = 0;
  try {
    order = expected_order(name);
  } catch (std::overflow_error const &) {
    throw LimitExceeded(render(name) + ": order exceeds 64 bits");
  }
  if (order > limit)
    throw LimitExceeded(render(name) + ": order " + std::to_string(order)
                        + " exceeds the limit of " + std::to_string(limit));
  auto group = construct(name);
  bool holds = condition_holds(group, limit).holds;
  bool listed = in_list1(name).member || in_list3(name).member;
  return holds == listed;
}

Verification verify(PermGroup const &group, std::string input, std::optional<GroupName> name,
                    std::uint64_t limit)
{
  Verification v;
  v.input = std::move(input);
  v.name = std::move(name);
  v.degree = group.degree();
  v.order = group.order();
  if (v.order > limit)
    throw LimitExceeded("group order " + std::to_string(v.order) + " exceeds the limit of "
                        + std::to_string(limit));

  auto start = Clock::now();
  auto lattice = subgroup_classes(group, limit);
  v.timings["lattice"] = seconds_since(start);

  start = Clock::now();
  auto condition = condition_holds(lattice, limit);
  v.timings["condition"] = seconds_since(start);

  start = Clock::now();
  v.theorem = theorem_case(lattice, condition, limit);
  v.timings["theorem_case"] = seconds_since(start);

  start = Clock::now();
  v.corollary = corollary_check(group, condition, limit);
  v.timings["corollary"] = seconds_since(start);
  return v;
}

nlohmann::json to_json(FactorDescriptor const &factor)
{
  nlohmann::json j{{"order", factor.order}, {"kind", to_string(factor.kind)}};
  if (factor.name)
    j["name"] = render(*factor.name);
  if (!factor.candidates.empty()) {
    auto list = nlohmann::json::array();
    for (auto const &c : factor.candidates)
      list.push_back(render(c));
    j["candidates"] = list;
  }
  auto orders = nlohmann::json::object();
  for (auto [o, count] : factor.element_orders)
    orders[std::to_string(o)] = count;
  j["element_orders"] = orders;
  return j;
}

namespace
{

nlohmann::json to_json(ListVerdict const &v)
{
  return {{"member", v.member}, {"list", to_string(v.list)}, {"item", v.item}, {"reason", v.reason}};
}

nlohmann::json cycles_of(PermGroup const &g)
{
  auto gens = nlohmann::json::array();
  for (auto const &p : g.generators())
    gens.push_back(to_cycles(p));
  return gens;
}

} // namespace

nlohmann::json to_json(Verification const &v)
{
  auto const &t = v.theorem;
  nlohmann::json condition{{"holds", t.condition.holds}, {"levels", t.condition.levels}};
  if (auto const &w = t.condition.witness) {
    condition["witness"] = {{"maximal", {{"class", w->maximal_index},
                                         {"order", w->maximal_order},
                                         {"generators", cycles_of(w->maximal)}}},
                            {"subgroup", {{"class", w->sub_index},
                                          {"order", w->sub_order},
                                          {"soluble", false},
                                          {"generators", cycles_of(w->subgroup)}}}};
  }

  auto details = nlohmann::json::object();
  if (t.frattini_order)
    details["frattini_order"] = *t.frattini_order;
  if (t.quotient)
    details["quotient"] = to_json(*t.quotient);
  if (t.list)
    details["list"] = to_json(*t.list);
  if (t.g0_order) {
    details["g0"] = {{"class", *t.g0_index},
                     {"order", *t.g0_order},
                     {"index", *t.g0_prime_index},
                     {"frattini_order", *t.g0_frattini_order},
                     {"generators", cycles_of(*t.g0)}};
  }
  if (!t.note.empty())
    details["note"] = t.note;

  auto factors = nlohmann::json::array();
  for (auto const &f : v.corollary.factors)
    factors.push_back(to_json(f));

  nlohmann::json j{{"input", v.input}};
  if (v.name)
    j["normalized_name"] = render(normalize(*v.name));
  j["degree"] = v.degree;
  j["order"] = v.order;
  j["condition"] = condition;
  j["case"] = to_string(t.kind);
  j["case_details"] = details;
  j["corollary"] = {{"second_maximal_soluble", v.corollary.second_maximal_soluble},
                    {"factors", factors},
                    {"conforming", v.corollary.conforming}};
  j["timings"] = v.timings;
  return j;
}

std::string render_text(Verification const &v)
{
  std::ostringstream out;
  auto const &t = v.theorem;
  out << "input: " << v.input << "\n";
  if (v.name)
    out << "name: " << render(normalize(*v.name)) << "\n";
  out << "degree: " << v.degree << "\norder: " << v.order << "\n";
  out << "condition: " << (t.condition.holds ? "holds" : "fails") << "\n";
  if (auto const &w = t.condition.witness) {
    out << "witness: G > M (class " << w->maximal_index << ", order " << w->maximal_order
        << ") > H (class " << w->sub_index << " of M, order " << w->sub_order
        << ", insoluble)\n";
  }
  out << "case: " << to_string(t.kind) << "\n";
  if (t.frattini_order)
    out << "frattini order: " << *t.frattini_order << "\n";
  if (t.g0_order) {
    out << "G0: class " << *t.g0_index << ", order " << *t.g0_order << ", prime index "
        << *t.g0_prime_index << ", frattini order " << *t.g0_frattini_order << "\n";
  }
  if (t.quotient)
    out << "quotient: " << describe(*t.quotient) << "\n";
  if (t.list)
    out << "list: " << to_string(t.list->list) << " item " << t.list->item << " ("
        << t.list->reason << ")\n";
  if (!t.note.empty())
    out << "note: " << t.note << "\n";
  out << "second maximal subgroups soluble: " << (v.corollary.second_maximal_soluble ? "yes" : "no")
      << "\n";
  if (v.corollary.second_maximal_soluble) {
    out << "composition factors:";
    for (auto const &f : v.corollary.factors)
      out << " " << describe(f);
    out << "\nfactors conform: " << (v.corollary.conforming ? "yes" : "no") << "\n";
  }
  return out.str();
}

} // namespace mingrp
