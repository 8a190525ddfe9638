#include <algorithm>
#include <limits>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/lists.hpp"

namespace mingrp
{

namespace
{

using Poly = std::vector<std::uint64_t>; // lowest degree first

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// a mod f, f monic.
Poly reduce(Poly a, Poly const &f, std::uint64_t p)
{
  std::size_t k = f.size() - 1;
  trim(a);
  while (a.size() > k) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - k;
    for (std::size_t i = 0; i <= k; ++i)
      a[shift + i] = (a[shift + i] + p - mul_mod(lead, f[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly multiply(Poly const &a, Poly const &b, std::uint64_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly pow_poly(Poly base, std::uint64_t e, Poly const &f, std::uint64_t p)
{
  Poly r{1};
  base = reduce(std::move(base), f, p);
  while (e) {
    if (e & 1)
      r = reduce(multiply(r, base, p), f, p);
    base = reduce(multiply(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic and reduce a modulo b.
    std::uint64_t inv_lead = pow_mod(b.back(), p - 2, p);
    for (auto &c : b)
      c = mul_mod(c, inv_lead, p);
    a = reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

Poly sub(Poly a, Poly const &b, std::uint64_t p)
{
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> result;
  while (n > 1) {
    std::uint64_t r = smallest_prime_factor(n);
    result.push_back(r);
    while (n % r == 0)
      n /= r;
  }
  return result;
}

constexpr std::uint64_t table_limit = 1u << 16;

} // namespace

bool is_irreducible(std::vector<std::uint64_t> const &monic, std::uint64_t p)
{
  std::size_t k = monic.size() - 1;
  if (k == 0 || monic.back() != 1)
    return false;
  if (k == 1)
    return true;

  // x^(p^i) mod f for i = 0..k
  std::vector<Poly> frob{Poly{0, 1}};
  for (std::size_t i = 1; i <= k; ++i)
    frob.push_back(pow_poly(frob.back(), p, monic, p));

  Poly x{0, 1};
  if (sub(frob[k], x, p).size() != 0)
    return false;

  for (std::uint64_t r : distinct_prime_factors(k)) {
    Poly g = gcd(monic, sub(frob[k / r], x, p), p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
: p_(p), k_(k), modulus_(std::move(modulus))
{
  if (!is_prime(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0 || modulus_.size() != k + 1 || modulus_.back() != 1)
    throw FieldError("modulus must be monic of degree " + std::to_string(k));

  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw FieldError("field size " + std::to_string(p) + "^" + std::to_string(k)
                       + " exceeds the 64-bit budget");
  }
  q_ = static_cast<std::uint64_t>(q);

  auto factors = distinct_prime_factors(q_ - 1);
  auto is_generator = [&](value_type a) {
    for (auto r : factors) {
      if (pow(a, (q_ - 1) / r) == 1)
        return false;
    }
    return true;
  };
  for (value_type a = 1; a < q_; ++a) {
    if (is_generator(a)) {
      primitive_ = a;
      break;
    }
  }

  if (q_ <= table_limit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    value_type x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive_);
    }
  }
}

std::vector<std::uint64_t> Field::digits(value_type a) const
{
  std::vector<std::uint64_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Field::value_type Field::from_digits(std::vector<std::uint64_t> const &d) const
{
  value_type v = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    v = v * p_ + d[i] % p_;
  return v;
}

Field::value_type Field::add(value_type a, value_type b) const
{
  if (p_ == 2)
    return a ^ b;
  if (k_ == 1)
    return (a + b) % p_;
  value_type r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Field::value_type Field::neg(value_type a) const
{
  if (p_ == 2)
    return a;
  value_type r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Field::value_type Field::sub(value_type a, value_type b) const
{
  return add(a, neg(b));
}

Field::value_type Field::mul_slow(value_type a, value_type b) const
{
  if (k_ == 1)
    return mul_mod(a, b, p_);
  Poly r = reduce(multiply(digits(a), digits(b), p_), modulus_, p_);
  return from_digits(r);
}

Field::value_type Field::mul(value_type a, value_type b) const
{
  if (a == 0 || b == 0)
    return 0;
  if (!exp_.empty())
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
  return mul_slow(a, b);
}

Field::value_type Field::pow(value_type a, std::uint64_t e) const
{
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  if (!exp_.empty())
    return exp_[static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(log_[a]) * e % (q_ - 1))];

  value_type r = 1;
  while (e) {
    if (e & 1)
      r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Field::value_type Field::inv(value_type a) const
{
  if (a == 0)
    throw FieldError("inversion of zero");
  return pow(a, q_ - 2);
}

FieldPtr field_make(std::uint64_t p, unsigned k)
{
  if (!is_prime(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0)
    throw FieldError("extension degree must be positive");

  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw FieldError("field size " + std::to_string(p) + "^" + std::to_string(k)
                       + " exceeds the 64-bit budget");
  }

  // Candidate code c = sum a_i p^i for modulus x^k + sum a_i x^i.
  for (std::uint64_t code = 0;; ++code) {
    Poly modulus(k + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      modulus[i] = c % p;
      c /= p;
    }
    modulus[k] = 1;
    if (is_irreducible(modulus, p))
      return std::make_shared<Field const>(p, k, std::move(modulus));
  }
}

FieldElement::FieldElement(FieldPtr field, Field::value_type value)
: field_(std::move(field)), value_(value)
{
  if (value_ >= field_->size())
    throw FieldError("element code outside the field");
}

namespace
{

void check_same(FieldElement const &a, FieldElement const &b)
{
  if (a.field() != b.field()
      && (a.field()->characteristic() != b.field()->characteristic()
          || a.field()->modulus() != b.field()->modulus()))
    throw FieldError("field mismatch");
}

} // namespace

FieldElement FieldElement::inverse() const
{
  return FieldElement(field_, field_->inv(value_));
}

FieldElement FieldElement::pow(std::uint64_t e) const
{
  return FieldElement(field_, field_->pow(value_, e));
}

FieldElement FieldElement::frobenius() const
{
  return FieldElement(field_, field_->frobenius(value_));
}

FieldElement operator+(FieldElement const &a, FieldElement const &b)
{
  check_same(a, b);
  return FieldElement(a.field_, a.field_->add(a.value_, b.value_));
}

FieldElement operator-(FieldElement const &a, FieldElement const &b)
{
  check_same(a, b);
  return FieldElement(a.field_, a.field_->sub(a.value_, b.value_));
}

FieldElement operator*(FieldElement const &a, FieldElement const &b)
{
  check_same(a, b);
  return FieldElement(a.field_, a.field_->mul(a.value_, b.value_));
}

bool operator==(FieldElement const &a, FieldElement const &b)
{
  check_same(a, b);
  return a.value_ == b.value_;
}

FieldElement field_arith(FieldElement const &a, FieldElement const &b, FieldOp op,
                         std::uint64_t exponent)
{
  switch (op) {
  case FieldOp::add: return a + b;
  case FieldOp::mul: return a * b;
  case FieldOp::inv: return a.inverse();
  case FieldOp::pow: return a.pow(exponent);
  case FieldOp::frobenius: return a.frobenius();
  }
  throw FieldError("unknown field operation");
}

} // namespace mingrp
