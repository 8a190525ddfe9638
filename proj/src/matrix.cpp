#include <algorithm>
#include <map>
#include <stdexcept>

#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"

namespace mingrp
{

MatrixRep::MatrixRep(FieldPtr field, std::size_t dim)
: field_(std::move(field)), dim_(dim), entries_(dim * dim, 0)
{}

MatrixRep MatrixRep::identity(FieldPtr field, std::size_t dim)
{
  MatrixRep m(std::move(field), dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1;
  return m;
}

MatrixRep MatrixRep::from_values(FieldPtr field, std::size_t dim,
                                 std::vector<Field::value_type> entries)
{
  if (entries.size() != dim * dim)
    throw std::invalid_argument("matrix entry count does not match dimension");
  MatrixRep m(std::move(field), dim);
  for (auto v : entries) {
    if (v >= m.field_->size())
      throw FieldError("matrix entry outside the field");
  }
  m.entries_ = std::move(entries);
  return m;
}

Field::value_type MatrixRep::determinant() const
{
  Field const &f = *field_;
  std::vector<Field::value_type> a = entries_;
  Field::value_type det = 1;

  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && a[pivot * dim_ + col] == 0)
      ++pivot;
    if (pivot == dim_)
      return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j)
        std::swap(a[pivot * dim_ + j], a[col * dim_ + j]);
      det = f.neg(det);
    }

    Field::value_type lead = a[col * dim_ + col];
    det = f.mul(det, lead);
    Field::value_type lead_inv = f.inv(lead);

    for (std::size_t row = col + 1; row < dim_; ++row) {
      Field::value_type factor = f.mul(a[row * dim_ + col], lead_inv);
      if (factor == 0)
        continue;
      for (std::size_t j = col; j < dim_; ++j)
        a[row * dim_ + j] = f.sub(a[row * dim_ + j], f.mul(factor, a[col * dim_ + j]));
    }
  }
  return det;
}

MatrixRep MatrixRep::conjugate_transpose(unsigned frobenius_power) const
{
  Field const &f = *field_;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < frobenius_power; ++i)
    e *= f.characteristic();

  MatrixRep r(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j)
      r(i, j) = f.pow((*this)(j, i), e);
  }
  return r;
}

std::vector<Field::value_type> MatrixRep::apply(std::vector<Field::value_type> const &row) const
{
  Field const &f = *field_;
  std::vector<Field::value_type> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (row[i] == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      out[j] = f.add(out[j], f.mul(row[i], (*this)(i, j)));
  }
  return out;
}

MatrixRep operator*(MatrixRep const &a, MatrixRep const &b)
{
  if (a.dim_ != b.dim_)
    throw std::invalid_argument("matrix dimension mismatch");
  Field const &f = *a.field_;
  MatrixRep r(a.field_, a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      auto x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < a.dim_; ++j)
        r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  }
  return r;
}

bool operator==(MatrixRep const &a, MatrixRep const &b)
{
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

Vector normalize_projective(Field const &field, Vector v)
{
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] != 0) {
      auto scale = field.inv(v[i]);
      for (auto &x : v)
        x = field.mul(x, scale);
      return v;
    }
  }
  throw std::invalid_argument("zero vector has no projective point");
}

std::vector<Vector> projective_points(Field const &field, std::size_t dim)
{
  std::uint64_t q = field.size();
  std::vector<Vector> points;

  for (std::size_t last = 0; last < dim; ++last) {
    // Coordinates before `last` range over all of GF(q).
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < last; ++i)
      count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vector v(dim, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < last; ++i) {
        v[i] = c % q;
        c /= q;
      }
      v[last] = 1;
      points.push_back(std::move(v));
    }
  }

  std::sort(points.begin(), points.end());
  return points;
}

std::vector<Permutation> projective_action(std::vector<MatrixRep> const &matrices,
                                           std::vector<Vector> const &points)
{
  std::map<Vector, point_t> index;
  for (std::size_t i = 0; i < points.size(); ++i)
    index.emplace(points[i], static_cast<point_t>(i));

  std::vector<Permutation> result;
  for (auto const &m : matrices) {
    std::vector<point_t> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto it = index.find(normalize_projective(*m.field(), m.apply(points[i])));
      if (it == index.end())
        throw std::invalid_argument("matrix does not preserve the point set");
      images[i] = it->second;
    }
    result.emplace_back(std::move(images));
  }
  return result;
}

} // namespace mingrp
