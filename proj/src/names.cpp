#include <array>
#include <cctype>
#include <charconv>
#include <limits>

#include "mingrp/error.hpp"
#include "mingrp/lists.hpp"
#include "mingrp/names.hpp"

namespace mingrp
{

namespace
{

constexpr std::uint64_t q_max = std::numeric_limits<std::int64_t>::max();

constexpr std::array sporadic_labels{
  "M11", "M12", "J1",  "M22",  "J2",  "M23",  "HS",   "J3",  "M24",
  "McL", "He",  "Ru",  "Suz",  "O'N", "Co3",  "Co2",  "Fi22", "HN",
  "Ly",  "Th",  "Fi23", "Co1", "J4",  "Fi24'", "B",   "M"};

struct ExceptionalPrefix
{
  std::string_view prefix;
  Family family;
};

// Longer prefixes first where one is a prefix of another.
constexpr std::array exceptional_prefixes{
  ExceptionalPrefix{"Sz", Family::suzuki},
  ExceptionalPrefix{"2G2", Family::ree_g2},
  ExceptionalPrefix{"2F4", Family::ree_f4},
  ExceptionalPrefix{"3D4", Family::triality_d4},
  ExceptionalPrefix{"2E6", Family::twisted_e6},
  ExceptionalPrefix{"G2", Family::g2},
  ExceptionalPrefix{"F4", Family::f4},
  ExceptionalPrefix{"E6", Family::e6},
  ExceptionalPrefix{"E7", Family::e7},
  ExceptionalPrefix{"E8", Family::e8}};

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

class Cursor
{
public:
  Cursor(std::string_view text, std::string_view whole)
  : text_(text), whole_(whole)
  {}

  bool done() const { return text_.empty(); }
  char peek() const { return text_.empty() ? '\0' : text_.front(); }

  bool accept(char c)
  {
    if (peek() != c)
      return false;
    text_.remove_prefix(1);
    return true;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number()
  {
    std::size_t len = 0;
    while (len < text_.size() && std::isdigit(static_cast<unsigned char>(text_[len])))
      ++len;
    if (len == 0)
      fail("expected a number");

    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data(), text_.data() + len, value);
    if (ec == std::errc::result_out_of_range || value > q_max)
      throw OverflowError("\"" + std::string(whole_) + "\": parameter exceeds 2^63-1");
    text_.remove_prefix(len);
    return value;
  }

  [[noreturn]] void fail(std::string const &why) const
  {
    throw ParseError("cannot parse group name \"" + std::string(whole_) + "\": " + why);
  }

private:
  std::string_view text_;
  std::string_view whole_;
};

[[noreturn]] void not_simple(std::string_view raw, std::string const &why)
{
  throw NotSimpleName("\"" + std::string(raw) + "\" is not a simple-group name: " + why);
}

PrimePower field_size(Cursor &cur, std::string_view raw)
{
  cur.expect('(');
  std::uint64_t base = cur.number();
  std::uint64_t q = base;

  if (cur.accept('^')) {
    std::uint64_t e = cur.number();
    if (e == 0)
      cur.fail("exponent must be positive");
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      acc *= base;
      if (acc > q_max)
        throw OverflowError("\"" + std::string(raw) + "\": q exceeds 2^63-1");
      if (base <= 1)
        break;
    }
    q = static_cast<std::uint64_t>(acc);
  }
  cur.expect(')');

  auto pp = prime_power(q);
  if (!pp)
    throw NotSimpleName("\"" + std::string(raw) + "\": " + std::to_string(q)
                        + " is not a prime power");
  return PrimePower{q, pp->first, pp->second};
}

unsigned small_number(Cursor &cur)
{
  std::uint64_t v = cur.number();
  if (v > 1'000'000)
    cur.fail("rank or degree too large");
  return static_cast<unsigned>(v);
}

void validate(GroupName const &name)
{
  auto const &raw = name.raw;
  auto n = name.n.value_or(0);
  auto q = name.q ? name.q->q : 0;
  auto p = name.q ? name.q->p : 0;
  auto e = name.q ? name.q->exponent : 0;

  switch (name.family) {
  case Family::alternating:
    if (n < 5)
      not_simple(raw, "A_n requires n >= 5");
    break;
  case Family::symmetric:
    if (n < 2)
      not_simple(raw, "S_n requires n >= 2");
    break;
  case Family::cyclic:
    if (!is_prime(n))
      not_simple(raw, "cyclic groups of composite order are not simple");
    break;
  case Family::linear:
    if (n < 2)
      not_simple(raw, "L_n(q) requires n >= 2");
    if (n == 2 && (q == 2 || q == 3))
      not_simple(raw, "L2(2) and L2(3) are soluble");
    break;
  case Family::unitary:
    if (n < 3)
      not_simple(raw, "U_n(q) requires n >= 3");
    if (n == 3 && q == 2)
      not_simple(raw, "U3(2) is soluble");
    break;
  case Family::symplectic:
    if (n < 4 || n % 2)
      not_simple(raw, "S_n(q) requires even n >= 4");
    if (n == 4 && q == 2)
      not_simple(raw, "S4(2) is isomorphic to S6");
    if (n == 4 && q == 3)
      not_simple(raw, "S4(3) repeats U4(2)");
    break;
  case Family::orthogonal_odd:
    if (n < 7 || n % 2 == 0)
      not_simple(raw, "O_{2n-1}(q) requires odd dimension >= 7");
    break;
  case Family::orthogonal_plus:
  case Family::orthogonal_minus:
    if (n < 8 || n % 2)
      not_simple(raw, "O_{2n}(q) requires even dimension >= 8");
    break;
  case Family::g2:
    if (q <= 2)
      not_simple(raw, "G2(q) requires q > 2");
    break;
  case Family::suzuki:
    if (p != 2 || e % 2 == 0 || e < 3)
      not_simple(raw, "Sz(q) requires q = 2^(2n+1), n >= 1");
    break;
  case Family::ree_g2:
    if (p != 3 || e % 2 == 0 || e < 3)
      not_simple(raw, "2G2(q) requires q = 3^(2n+1), n >= 1");
    break;
  case Family::ree_f4:
    if (p != 2 || e % 2 == 0 || e < 3)
      not_simple(raw, "2F4(q) requires q = 2^(2n+1), n >= 1 (the Tits group is 2F4(2)')");
    break;
  default:
    break;
  }
}

} // namespace

GroupName parse_name(std::string_view text)
{
  std::string_view body = trim(text);
  GroupName name;
  name.raw = std::string(body);

  if (body.empty())
    throw ParseError("empty group name");

  if (body == "2F4(2)'") {
    name.family = Family::tits;
    name.q = PrimePower{2, 2, 1};
    return name;
  }

  for (auto const *label : sporadic_labels) {
    if (body == label) {
      name.family = Family::sporadic;
      name.label = label;
      return name;
    }
  }

  for (auto const &[prefix, family] : exceptional_prefixes) {
    if (body.starts_with(prefix) && body.size() > prefix.size()
        && body[prefix.size()] == '(') {
      Cursor cur(body.substr(prefix.size()), body);
      name.family = family;
      name.q = field_size(cur, body);
      if (!cur.done())
        cur.fail("trailing characters");
      validate(name);
      return name;
    }
  }

  Cursor cur(body.substr(1), body);
  char head = body.front();

  switch (head) {
  case 'A':
  case 'C':
    name.family = head == 'A' ? Family::alternating : Family::cyclic;
    name.n = small_number(cur);
    break;
  case 'S':
    name.n = small_number(cur);
    if (cur.peek() == '(') {
      name.family = Family::symplectic;
      name.q = field_size(cur, body);
    } else {
      name.family = Family::symmetric;
    }
    break;
  case 'L':
  case 'U':
    name.family = head == 'L' ? Family::linear : Family::unitary;
    name.n = small_number(cur);
    name.q = field_size(cur, body);
    break;
  case 'O':
    name.n = small_number(cur);
    if (cur.accept('+'))
      name.family = Family::orthogonal_plus;
    else if (cur.accept('-'))
      name.family = Family::orthogonal_minus;
    else
      name.family = Family::orthogonal_odd;
    if (name.family != Family::orthogonal_odd && *name.n % 2)
      cur.fail("odd-dimensional orthogonal groups take no sign");
    if (name.family == Family::orthogonal_odd && *name.n % 2 == 0)
      cur.fail("even-dimensional orthogonal groups need a + or - sign");
    name.q = field_size(cur, body);
    break;
  default:
    cur.fail("unknown family");
  }

  if (!cur.done())
    cur.fail("trailing characters");

  validate(name);
  return name;
}

GroupName normalize(GroupName const &name)
{
  if (name.family == Family::linear && name.n && name.q) {
    unsigned n = *name.n;
    std::uint64_t q = name.q->q;
    GroupName result;

    if (n == 2 && (q == 4 || q == 5))
      result = make_alternating(5);
    else if (n == 2 && q == 9)
      result = make_alternating(6);
    else if (n == 4 && q == 2)
      result = make_alternating(8);
    else if (n == 3 && q == 2)
      result = make_classical(Family::linear, 2, 7);
    else
      return name;

    result.raw = name.raw;
    return result;
  }
  return name;
}

std::string render(GroupName const &name)
{
  auto n = std::to_string(name.n.value_or(0));
  auto q = "(" + std::to_string(name.q ? name.q->q : 0) + ")";

  switch (name.family) {
  case Family::alternating: return "A" + n;
  case Family::symmetric: return "S" + n;
  case Family::cyclic: return "C" + n;
  case Family::linear: return "L" + n + q;
  case Family::unitary: return "U" + n + q;
  case Family::symplectic: return "S" + n + q;
  case Family::orthogonal_odd: return "O" + n + q;
  case Family::orthogonal_plus: return "O" + n + "+" + q;
  case Family::orthogonal_minus: return "O" + n + "-" + q;
  case Family::g2: return "G2" + q;
  case Family::f4: return "F4" + q;
  case Family::e6: return "E6" + q;
  case Family::e7: return "E7" + q;
  case Family::e8: return "E8" + q;
  case Family::suzuki: return "Sz" + q;
  case Family::ree_g2: return "2G2" + q;
  case Family::ree_f4: return "2F4" + q;
  case Family::triality_d4: return "3D4" + q;
  case Family::twisted_e6: return "2E6" + q;
  case Family::tits: return "2F4(2)'";
  case Family::sporadic: return name.label;
  }
  return name.raw;
}

GroupName make_alternating(unsigned n)
{
  GroupName g;
  g.family = Family::alternating;
  g.n = n;
  g.raw = render(g);
  return g;
}

GroupName make_symmetric(unsigned n)
{
  GroupName g;
  g.family = Family::symmetric;
  g.n = n;
  g.raw = render(g);
  return g;
}

GroupName make_cyclic(unsigned p)
{
  GroupName g;
  g.family = Family::cyclic;
  g.n = p;
  g.raw = render(g);
  return g;
}

GroupName make_classical(Family family, unsigned n, std::uint64_t q)
{
  GroupName g;
  g.family = family;
  g.n = n;
  auto pp = prime_power(q);
  if (!pp)
    throw NotSimpleName(std::to_string(q) + " is not a prime power");
  g.q = PrimePower{q, pp->first, pp->second};
  g.raw = render(g);
  return g;
}

GroupName make_exceptional(Family family, std::uint64_t q)
{
  GroupName g;
  g.family = family;
  auto pp = prime_power(q);
  if (!pp)
    throw NotSimpleName(std::to_string(q) + " is not a prime power");
  g.q = PrimePower{q, pp->first, pp->second};
  g.raw = render(g);
  return g;
}

GroupName make_sporadic(std::string label)
{
  GroupName g;
  g.family = Family::sporadic;
  g.label = std::move(label);
  g.raw = g.label;
  return g;
}

} // namespace mingrp
