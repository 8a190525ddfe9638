#include <algorithm>
#include <cmath>
#include <numeric>

#include "mingrp/lists.hpp"
#include "mingrp/names.hpp"

namespace mingrp
{

namespace
{

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

constexpr std::uint64_t trial_bound = 1000;

bool miller_rabin(std::uint64_t n)
{
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }

  // Deterministic for n < 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

// Pollard-Brent; n must be composite and odd.
std::uint64_t find_factor(std::uint64_t n)
{
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
      return d;
  }
}

std::uint64_t integer_root(std::uint64_t n, unsigned e)
{
  if (e == 1)
    return n;
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / e)));
  auto power_le = [&](std::uint64_t base) {
    u128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
      acc *= base;
      if (acc > n)
        return false;
    }
    return true;
  };
  while (r > 0 && !power_le(r))
    --r;
  while (power_le(r + 1))
    ++r;
  return r;
}

bool plus_minus_two_mod5(std::uint64_t p) { return p % 5 == 2 || p % 5 == 3; }
bool plus_minus_one_mod5(std::uint64_t p) { return p % 5 == 1 || p % 5 == 4; }

std::string pm_residue(std::uint64_t p)
{
  switch (p % 5) {
  case 1: return "+1";
  case 2: return "+2";
  case 3: return "-2";
  case 4: return "-1";
  default: return "0";
  }
}

std::string power_text(std::uint64_t p, unsigned e)
{
  return std::to_string(p) + "^" + std::to_string(e);
}

ListVerdict hit(ListId list, int item, std::string reason)
{
  return ListVerdict{true, list, item, std::move(reason)};
}

ListVerdict miss(std::string reason)
{
  return ListVerdict{false, ListId::none, 0, std::move(reason)};
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d < trial_bound; ++d) {
    if (d * d > n)
      return true;
    if (n % d == 0)
      return n == d;
  }
  return miller_rabin(n);
}

std::uint64_t smallest_prime_factor(std::uint64_t n)
{
  if (n < 2)
    return n;
  for (std::uint64_t d = 2; d < trial_bound; ++d) {
    if (d * d > n)
      return n;
    if (n % d == 0)
      return d;
  }
  if (is_prime(n))
    return n;
  std::uint64_t d = find_factor(n);
  return std::min(smallest_prime_factor(d), smallest_prime_factor(n / d));
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n)
{
  if (n < 2)
    return std::nullopt;
  for (unsigned e = 63; e >= 1; --e) {
    std::uint64_t r = integer_root(n, e);
    if (r < 2)
      continue;
    u128 acc = 1;
    for (unsigned i = 0; i < e; ++i)
      acc *= r;
    if (acc == n && is_prime(r))
      return std::pair{r, e};
  }
  return std::nullopt;
}

ExponentShape exponent_shape(std::uint64_t n)
{
  ExponentShape shape;
  shape.value = n;
  if (is_prime(n)) {
    shape.kind = ExponentShape::Kind::prime;
    return shape;
  }
  if (n < 4)
    return shape;

  std::uint64_t r = smallest_prime_factor(n);
  std::uint64_t s = n / r;
  if (is_prime(s)) {
    shape.kind = ExponentShape::Kind::semiprime;
    shape.r = r;
    shape.s = s;
  }
  return shape;
}

std::string to_string(ListId list)
{
  switch (list) {
  case ListId::list1: return "List1";
  case ListId::list3: return "List3";
  case ListId::none: return "none";
  }
  return "none";
}

ListVerdict in_list1(GroupName const &input)
{
  GroupName name = normalize(input);

  if (name.family == Family::alternating && name.n == 5u)
    return hit(ListId::list1, 1, "A5 = L2(4), q = 2^2, 2 is a prime");

  if (name.family == Family::linear && name.n == 3u && name.q && name.q->q == 3)
    return hit(ListId::list1, 5, "L3(3)");

  if (name.family == Family::linear && name.n == 2u && name.q) {
    auto [q, p, e] = *name.q;
    if (p == 2 && is_prime(e))
      return hit(ListId::list1, 1, "q = " + power_text(p, e) + ", " + std::to_string(e)
                                     + " is a prime");
    if (p == 3 && e != 2 && is_prime(e))
      return hit(ListId::list1, 2, "q = " + power_text(p, e) + ", " + std::to_string(e)
                                     + " is an odd prime");
    if (e == 1 && p > 3 && plus_minus_two_mod5(p))
      return hit(ListId::list1, 3, "p = " + std::to_string(p) + " is a prime, p > 3, p = "
                                     + pm_residue(p) + " (mod 5)");
    return miss("L2(" + std::to_string(q) + ") matches no item of List 1");
  }

  if (name.family == Family::suzuki && name.q) {
    auto e = name.q->exponent;
    if (e != 2 && is_prime(e))
      return hit(ListId::list1, 4, "q = 2^" + std::to_string(e) + ", " + std::to_string(e)
                                     + " is an odd prime");
    return miss("Sz(2^" + std::to_string(e) + "): exponent is not an odd prime");
  }

  return miss(render(name) + " matches no item of List 1");
}

ListVerdict in_list3(GroupName const &input)
{
  GroupName name = normalize(input);

  if (name.family == Family::alternating && name.n == 6u)
    return hit(ListId::list3, 5, "A6 = L2(9)");

  if (name.family == Family::unitary && name.n == 3u && name.q && name.q->q == 3)
    return hit(ListId::list3, 5, "U3(3)");

  if (name.family == Family::suzuki && name.q) {
    auto e = name.q->exponent;
    auto shape = exponent_shape(e);
    if (shape.kind == ExponentShape::Kind::semiprime && shape.r != 2)
      return hit(ListId::list3, 5, "Sz(2^" + std::to_string(e) + "), " + std::to_string(e)
                                     + " = " + std::to_string(shape.r) + "*"
                                     + std::to_string(shape.s) + ", r and s odd primes");
    return miss("Sz(2^" + std::to_string(e) + "): exponent is not a product of two odd primes");
  }

  if (name.family == Family::linear && name.n == 2u && name.q) {
    auto [q, p, e] = *name.q;
    auto shape = exponent_shape(e);
    bool semiprime = shape.kind == ExponentShape::Kind::semiprime;
    std::string split = std::to_string(e) + " = " + std::to_string(shape.r) + "*"
                        + std::to_string(shape.s);

    if (p == 2 && semiprime)
      return hit(ListId::list3, 1, "q = " + power_text(p, e) + ", " + split
                                     + ", r and s primes");
    if (p == 3 && semiprime && shape.r != 2)
      return hit(ListId::list3, 2, "q = " + power_text(p, e) + ", " + split
                                     + ", r and s odd primes");
    if (e == 1 && plus_minus_one_mod5(p))
      return hit(ListId::list3, 3, "p = " + std::to_string(p) + " is a prime, p = "
                                     + pm_residue(p) + " (mod 5)");
    // p = 2, 3 with prime exponent are minimal simple (List 1 items 1-2).
    if (e != 2 && is_prime(e) && (p == 5 || (p > 3 && plus_minus_two_mod5(p))))
      return hit(ListId::list3, 4, "q = " + power_text(p, e) + ", " + std::to_string(e)
                                     + " is an odd prime, p = " + std::to_string(p)
                                     + (p == 5 ? "" : " = " + pm_residue(p) + " (mod 5)"));
    return miss("L2(" + std::to_string(q) + ") matches no item of List 3");
  }

  return miss(render(name) + " matches no item of List 3");
}

} // namespace mingrp
