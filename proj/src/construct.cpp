#include <algorithm>
#include <map>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/lists.hpp"

namespace mingrp
{

namespace
{

FieldPtr field_of_order(std::uint64_t q)
{
  auto pp = prime_power(q);
  if (!pp)
    throw FieldError(std::to_string(q) + " is not a prime power");
  return field_make(pp->first, pp->second);
}

Permutation cycle_on(std::size_t degree, point_t first, point_t last)
{
  std::vector<point_t> cycle;
  for (point_t i = first; i <= last; ++i)
    cycle.push_back(i);
  return Permutation::from_cycles(degree, {cycle});
}

PermGroup alternating(unsigned n)
{
  if (n < 3 || n > 12)
    throw Unsupported("A" + std::to_string(n) + ": alternating constructor supports 3 <= n <= 12");
  Permutation three = Permutation::from_cycles(n, {{1, 2, 3}});
  Permutation long_cycle = n % 2 ? cycle_on(n, 1, n) : cycle_on(n, 2, n);
  return PermGroup(n, {three, long_cycle});
}

PermGroup symmetric(unsigned n)
{
  if (n < 2 || n > 12)
    throw Unsupported("S" + std::to_string(n) + ": symmetric constructor supports 2 <= n <= 12");
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), cycle_on(n, 1, n)});
}

PermGroup from_matrices(std::vector<MatrixRep> const &gens, std::vector<Vector> const &points)
{
  return PermGroup(points.size(), projective_action(gens, points));
}

void check_budget(std::string const &name, std::uint64_t degree)
{
  if (degree > construct_degree_budget)
    throw Unsupported(name + ": degree " + std::to_string(degree) + " exceeds the budget of "
                      + std::to_string(construct_degree_budget) + " points");
}

} // namespace

std::vector<MatrixRep> special_linear_generators(FieldPtr const &field, std::size_t dim)
{
  Field const &f = *field;
  auto transvection = [&](Field::value_type t) {
    auto m = MatrixRep::identity(field, dim);
    m(0, 1) = t;
    return m;
  };

  // Signed cyclic permutation matrix e_i -> e_{i+1}; the sign fixes det = 1.
  MatrixRep weyl(field, dim);
  for (std::size_t i = 0; i < dim; ++i)
    weyl(i, (i + 1) % dim) = 1;
  if (dim % 2 == 0)
    weyl(dim - 1, 0) = f.neg(1);

  return {transvection(1), transvection(f.primitive_element()), weyl};
}

MatrixRep hermitian_form(FieldPtr const &field)
{
  MatrixRep j(field, 3);
  j(0, 2) = j(1, 1) = j(2, 0) = 1;
  return j;
}

namespace
{

// Conjugation x -> x^q on GF(q^2).
unsigned half_degree(Field const &f)
{
  if (f.degree() % 2)
    throw FieldError("unitary groups need a field of even degree");
  return f.degree() / 2;
}

bool preserves_form(MatrixRep const &a, MatrixRep const &form, unsigned half)
{
  return a * form * a.conjugate_transpose(half) == form;
}

} // namespace

std::vector<Vector> isotropic_points(FieldPtr const &field)
{
  Field const &f = *field;
  unsigned half = half_degree(f);
  std::uint64_t root = 1;
  for (unsigned i = 0; i < half; ++i)
    root *= f.characteristic();

  std::vector<Vector> result;
  for (auto const &v : projective_points(f, 3)) {
    auto form = f.add(f.add(f.mul(v[0], f.pow(v[2], root)), f.mul(v[1], f.pow(v[1], root))),
                      f.mul(v[2], f.pow(v[0], root)));
    if (form == 0)
      result.push_back(v);
  }
  return result;
}

std::vector<MatrixRep> special_unitary_generators(FieldPtr const &field)
{
  Field const &f = *field;
  unsigned half = half_degree(f);
  std::uint64_t q2 = f.size();
  auto form = hermitian_form(field);

  // Borel (upper unitriangular and diagonal) plus antidiagonal Weyl
  // candidates, in code order.
  std::vector<MatrixRep> candidates;
  for (std::uint64_t a = 0; a < q2; ++a) {
    for (std::uint64_t b = 0; b < q2; ++b) {
      for (std::uint64_t c = 0; c < q2; ++c) {
        auto m = MatrixRep::identity(field, 3);
        m(0, 1) = a;
        m(0, 2) = b;
        m(1, 2) = c;
        if (preserves_form(m, form, half))
          candidates.push_back(std::move(m));
      }
    }
  }
  for (int shape = 0; shape < 2; ++shape) {
    for (std::uint64_t x = 1; x < q2; ++x) {
      for (std::uint64_t y = 1; y < q2; ++y) {
        for (std::uint64_t z = 1; z < q2; ++z) {
          MatrixRep m(field, 3);
          if (shape == 0) {
            m(0, 0) = x;
            m(1, 1) = y;
            m(2, 2) = z;
          } else {
            m(0, 2) = x;
            m(1, 1) = y;
            m(2, 0) = z;
          }
          if (m.determinant() == 1 && preserves_form(m, form, half))
            candidates.push_back(std::move(m));
        }
      }
    }
  }

  // Keep a candidate only if it enlarges the group generated so far.
  auto points = isotropic_points(field);
  std::vector<MatrixRep> chosen;
  std::vector<Permutation> perms;
  for (auto const &m : candidates) {
    auto perm = projective_action({m}, points).front();
    if (PermGroup(points.size(), perms).contains(perm))
      continue;
    chosen.push_back(m);
    perms.push_back(std::move(perm));
  }
  return chosen;
}

std::vector<Vector> suzuki_ovoid(FieldPtr const &field)
{
  Field const &f = *field;
  unsigned e = f.degree();
  if (f.characteristic() != 2 || e % 2 == 0 || e < 3)
    throw FieldError("Suzuki ovoid needs q = 2^(2r+1), r >= 1");
  std::uint64_t sigma = std::uint64_t{1} << ((e + 1) / 2);
  std::uint64_t q = f.size();

  std::vector<Vector> points{Vector{0, 0, 0, 1}};
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      auto z = f.add(f.add(f.mul(x, y), f.pow(x, sigma + 2)), f.pow(y, sigma));
      points.push_back(normalize_projective(f, Vector{1, x, y, z}));
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<MatrixRep> suzuki_generators(FieldPtr const &field)
{
  Field const &f = *field;
  unsigned e = f.degree();
  std::uint64_t sigma = std::uint64_t{1} << ((e + 1) / 2);

  auto translation = [&](Field::value_type a, Field::value_type b) {
    auto m = MatrixRep::identity(field, 4);
    m(0, 1) = a;
    m(0, 2) = b;
    m(0, 3) = f.add(f.add(f.mul(a, b), f.pow(a, sigma + 2)), f.pow(b, sigma));
    m(1, 2) = f.pow(a, sigma);
    m(1, 3) = f.add(b, f.pow(a, sigma + 1));
    m(2, 3) = a;
    return m;
  };

  auto w = f.primitive_element();
  MatrixRep torus(field, 4);
  torus(0, 0) = 1;
  torus(1, 1) = w;
  torus(2, 2) = f.pow(w, sigma + 1);
  torus(3, 3) = f.pow(w, sigma + 2);

  MatrixRep swap(field, 4);
  for (std::size_t i = 0; i < 4; ++i)
    swap(i, 3 - i) = 1;

  return {translation(1, 0), translation(0, 1), torus, swap};
}

PermGroup construct(GroupName const &name)
{
  std::string label = render(name);

  switch (name.family) {
  case Family::alternating:
    return alternating(name.n.value_or(0));
  case Family::symmetric:
    return symmetric(name.n.value_or(0));
  case Family::cyclic: {
    unsigned n = name.n.value_or(0);
    if (n < 2 || n > construct_degree_budget)
      throw Unsupported(label + ": cyclic order out of range");
    return PermGroup(n, {cycle_on(n, 1, n)});
  }
  case Family::linear: {
    std::uint64_t q = name.q->q;
    unsigned d = name.n.value_or(0);
    unsigned __int128 degree = 0, power = 1;
    for (unsigned i = 0; i < d; ++i) {
      degree += power;
      power *= q;
      if (degree > construct_degree_budget)
        break;
    }
    check_budget(label, degree > construct_degree_budget ? construct_degree_budget + 1
                                                         : static_cast<std::uint64_t>(degree));
    auto field = field_of_order(q);
    return from_matrices(special_linear_generators(field, d), projective_points(*field, d));
  }
  case Family::unitary: {
    if (name.n != 3u)
      throw Unsupported(label + ": unitary constructor supports U3(q) only");
    std::uint64_t q = name.q->q;
    if (q > 10)
      check_budget(label, construct_degree_budget + 1);
    check_budget(label, q * q * q + 1);
    auto field = field_make(name.q->p, 2 * name.q->exponent);
    return from_matrices(special_unitary_generators(field), isotropic_points(field));
  }
  case Family::suzuki: {
    std::uint64_t q = name.q->q;
    if (q > 64)
      check_budget(label, construct_degree_budget + 1);
    check_budget(label, q * q + 1);
    auto field = field_of_order(q);
    return from_matrices(suzuki_generators(field), suzuki_ovoid(field));
  }
  default:
    throw Unsupported(label + ": constructor not supported");
  }
}

PermGroup special_linear_on_vectors(std::uint64_t q)
{
  auto field = field_of_order(q);
  std::vector<Vector> vectors;
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      if (a || b)
        vectors.push_back(Vector{a, b});
    }
  }
  check_budget("SL(2," + std::to_string(q) + ")", vectors.size());

  std::map<Vector, point_t> index;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    index.emplace(vectors[i], static_cast<point_t>(i));

  std::vector<Permutation> gens;
  for (auto const &m : special_linear_generators(field, 2)) {
    std::vector<point_t> images;
    for (auto const &v : vectors)
      images.push_back(index.at(m.apply(v)));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(vectors.size(), std::move(gens));
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &g : a.generators())
    gens.push_back(g.extended(n));
  for (auto const &g : b.generators()) {
    std::vector<point_t> images(n);
    for (point_t i = 0; i < n; ++i)
      images[i] = i < a.degree() ? i : static_cast<point_t>(a.degree() + g[i - a.degree()]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

} // namespace mingrp
