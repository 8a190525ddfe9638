#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"

namespace mingrp
{

namespace
{

using u128 = unsigned __int128;

// Running product with overflow detection; intermediate values may exceed
// 64 bits as long as the final quotient fits.
class Product
{
public:
  Product &operator*=(u128 x)
  {
    if (x != 0 && value_ > limit / x)
      throw std::overflow_error("group order exceeds 64 bits");
    value_ *= x;
    return *this;
  }

  std::uint64_t divided_by(std::uint64_t d) const
  {
    u128 r = value_ / d;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
  }

  u128 value() const { return value_; }

private:
  static constexpr u128 limit = static_cast<u128>(1) << 120;
  u128 value_ = 1;
};

u128 power(u128 base, unsigned e)
{
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > (static_cast<u128>(1) << 120) / base)
      throw std::overflow_error("group order exceeds 64 bits");
    r *= base;
  }
  return r;
}

// q^i - 1 and q^i + 1
u128 qm(std::uint64_t q, unsigned i) { return power(q, i) - 1; }
u128 qp(std::uint64_t q, unsigned i) { return power(q, i) + 1; }

std::uint64_t gcd_mod(std::uint64_t n, u128 x)
{
  return std::gcd(n, static_cast<std::uint64_t>(x % n));
}

std::uint64_t factorial(unsigned n)
{
  Product p;
  for (unsigned i = 2; i <= n; ++i)
    p *= i;
  return p.divided_by(1);
}

std::map<std::string, std::uint64_t> const &sporadic_orders()
{
  static std::map<std::string, std::uint64_t> const orders{
    {"M11", 7920ull},
    {"M12", 95040ull},
    {"J1", 175560ull},
    {"M22", 443520ull},
    {"J2", 604800ull},
    {"M23", 10200960ull},
    {"HS", 44352000ull},
    {"J3", 50232960ull},
    {"M24", 244823040ull},
    {"McL", 898128000ull},
    {"He", 4030387200ull},
    {"Ru", 145926144000ull},
    {"Suz", 448345497600ull},
    {"O'N", 460815505920ull},
    {"Co3", 495766656000ull},
    {"Co2", 42305421312000ull},
    {"Fi22", 64561751654400ull},
    {"HN", 273030912000000ull},
    {"Ly", 51765179004000000ull},
    {"Th", 90745943887872000ull},
    {"Fi23", 4089470473293004800ull},
    {"Co1", 4157776806543360000ull}};
  return orders;
}

} // namespace

std::uint64_t expected_order(GroupName const &name)
{
  std::uint64_t q = name.q ? name.q->q : 0;
  unsigned n = name.n.value_or(0);
  Product p;

  switch (name.family) {
  case Family::alternating:
    if (n < 2)
      return 1;
    return factorial(n) / 2;
  case Family::symmetric:
    return factorial(n);
  case Family::cyclic:
    return n;

  case Family::linear:
    p *= power(q, n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i)
      p *= qm(q, i);
    return p.divided_by(std::gcd<std::uint64_t>(n, q - 1));

  case Family::unitary:
    p *= power(q, n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i)
      p *= i % 2 ? qp(q, i) : qm(q, i);
    return p.divided_by(std::gcd<std::uint64_t>(n, q + 1));

  case Family::symplectic:
  case Family::orthogonal_odd: {
    unsigned m = name.family == Family::symplectic ? n / 2 : (n - 1) / 2;
    p *= power(q, m * m);
    for (unsigned i = 1; i <= m; ++i)
      p *= qm(q, 2 * i);
    return p.divided_by(std::gcd<std::uint64_t>(2, q - 1));
  }

  case Family::orthogonal_plus:
  case Family::orthogonal_minus: {
    unsigned m = n / 2;
    bool plus = name.family == Family::orthogonal_plus;
    u128 top = plus ? qm(q, m) : qp(q, m);
    p *= power(q, m * (m - 1));
    p *= top;
    for (unsigned i = 1; i < m; ++i)
      p *= qm(q, 2 * i);
    return p.divided_by(gcd_mod(4, top));
  }

  case Family::g2:
    p *= power(q, 6);
    p *= qm(q, 6);
    p *= qm(q, 2);
    return p.divided_by(1);

  case Family::f4:
    p *= power(q, 24);
    for (unsigned i : {12u, 8u, 6u, 2u})
      p *= qm(q, i);
    return p.divided_by(1);

  case Family::e6:
    p *= power(q, 36);
    for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u})
      p *= qm(q, i);
    return p.divided_by(std::gcd<std::uint64_t>(3, q - 1));

  case Family::e7:
    p *= power(q, 63);
    for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u})
      p *= qm(q, i);
    return p.divided_by(std::gcd<std::uint64_t>(2, q - 1));

  case Family::e8:
    p *= power(q, 120);
    for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u})
      p *= qm(q, i);
    return p.divided_by(1);

  case Family::twisted_e6:
    p *= power(q, 36);
    p *= qm(q, 12);
    p *= qp(q, 9);
    p *= qm(q, 8);
    p *= qm(q, 6);
    p *= qp(q, 5);
    p *= qm(q, 2);
    return p.divided_by(std::gcd<std::uint64_t>(3, q + 1));

  case Family::triality_d4:
    p *= power(q, 12);
    p *= power(q, 8) + power(q, 4) + 1;
    p *= qm(q, 6);
    p *= qm(q, 2);
    return p.divided_by(1);

  case Family::suzuki:
    p *= power(q, 2);
    p *= qp(q, 2);
    p *= q - 1;
    return p.divided_by(1);

  case Family::ree_g2:
    p *= power(q, 3);
    p *= qp(q, 3);
    p *= q - 1;
    return p.divided_by(1);

  case Family::ree_f4:
    p *= power(q, 12);
    p *= qp(q, 6);
    p *= qm(q, 4);
    p *= qp(q, 3);
    p *= q - 1;
    return p.divided_by(1);

  case Family::tits:
    return 17971200;

  case Family::sporadic: {
    auto const &table = sporadic_orders();
    auto it = table.find(name.label);
    if (it == table.end())
      throw std::overflow_error("order of " + name.label + " exceeds 64 bits");
    return it->second;
  }
  }

  throw Unsupported("no order formula for " + render(name));
}

} // namespace mingrp
