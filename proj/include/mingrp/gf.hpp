#ifndef MINGRP_GF_HPP
#define MINGRP_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "mingrp/names.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

/// GF(p^k). Elements are encoded as integers in [0, p^k): the base-p digits
/// of the code are the coefficients of the residue polynomial, lowest degree
/// first.
class Field
{
public:
  using value_type = std::uint64_t;

  Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Monic modulus, coefficients lowest degree first (size k + 1).
  std::vector<std::uint64_t> const &modulus() const { return modulus_; }

  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const;
  value_type neg(value_type a) const;
  value_type mul(value_type a, value_type b) const;
  /// Throws FieldError for zero.
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  value_type frobenius(value_type a) const { return pow(a, p_); }

  /// Least generator of the multiplicative group (by code).
  value_type primitive_element() const { return primitive_; }

  std::vector<std::uint64_t> digits(value_type a) const;
  value_type from_digits(std::vector<std::uint64_t> const &digits) const;

private:
  value_type mul_slow(value_type a, value_type b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  value_type primitive_ = 1;
  // Discrete log tables, present for small fields.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<Field const>;

/// GF(p^k) with the least monic irreducible modulus, where candidates are
/// ordered by their code sum(a_i p^i) (so the highest-degree non-leading
/// coefficient is compared first). Throws FieldError when p is not prime or
/// p^k overflows.
FieldPtr field_make(std::uint64_t p, unsigned k);

/// Rabin's irreducibility test for a monic polynomial over GF(p).
bool is_irreducible(std::vector<std::uint64_t> const &monic, std::uint64_t p);

class FieldElement
{
public:
  FieldElement(FieldPtr field, Field::value_type value);

  FieldPtr const &field() const { return field_; }
  Field::value_type value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;

  friend FieldElement operator+(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator-(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator*(FieldElement const &a, FieldElement const &b);
  friend bool operator==(FieldElement const &a, FieldElement const &b);

private:
  FieldPtr field_;
  Field::value_type value_;
};

enum class FieldOp { add, mul, inv, pow, frobenius };

/// Dispatcher over the element operations; `b` is ignored for unary ops and
/// `exponent` is used by pow only.
FieldElement field_arith(FieldElement const &a, FieldElement const &b, FieldOp op,
                         std::uint64_t exponent = 0);

/// Square matrix over a finite field acting on row vectors (v -> vA).
class MatrixRep
{
public:
  MatrixRep(FieldPtr field, std::size_t dim);
  static MatrixRep identity(FieldPtr field, std::size_t dim);
  static MatrixRep from_values(FieldPtr field, std::size_t dim,
                               std::vector<Field::value_type> entries);

  std::size_t dim() const { return dim_; }
  FieldPtr const &field() const { return field_; }
  Field::value_type operator()(std::size_t i, std::size_t j) const
  {
    return entries_[i * dim_ + j];
  }
  Field::value_type &operator()(std::size_t i, std::size_t j)
  {
    return entries_[i * dim_ + j];
  }
  FieldElement at(std::size_t i, std::size_t j) const
  {
    return FieldElement(field_, (*this)(i, j));
  }

  Field::value_type determinant() const;
  /// Entrywise Frobenius power x -> x^(p^power), then transpose.
  MatrixRep conjugate_transpose(unsigned frobenius_power) const;
  std::vector<Field::value_type> apply(std::vector<Field::value_type> const &row) const;

  friend MatrixRep operator*(MatrixRep const &a, MatrixRep const &b);
  friend bool operator==(MatrixRep const &a, MatrixRep const &b);

private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Field::value_type> entries_;
};

using Vector = std::vector<Field::value_type>;

/// Scales `v` so its last nonzero coordinate is 1; v must be nonzero.
Vector normalize_projective(Field const &field, Vector v);

/// Points of PG(d-1, q) as normalized vectors, sorted lexicographically.
std::vector<Vector> projective_points(Field const &field, std::size_t dim);

/// Permutation induced on `points` (normalized vectors, given order).
/// Throws std::invalid_argument if a matrix does not preserve the set.
std::vector<Permutation> projective_action(std::vector<MatrixRep> const &matrices,
                                           std::vector<Vector> const &points);

/// SL(d, q) generators: transvections I + E_12, I + w E_12 (w the primitive
/// element) and a signed cyclic permutation matrix of determinant 1.
std::vector<MatrixRep> special_linear_generators(FieldPtr const &field, std::size_t dim);

/// Antidiagonal Hermitian form over GF(q^2) (field of degree 2k over GF(p)).
MatrixRep hermitian_form(FieldPtr const &field);
/// Isotropic projective points of the form, sorted.
std::vector<Vector> isotropic_points(FieldPtr const &field);
/// SU(3, q) generators of determinant 1 preserving the form; field = GF(q^2).
std::vector<MatrixRep> special_unitary_generators(FieldPtr const &field);

/// Tits ovoid {(0,0,0,1)} u {(1, x, y, xy + x^(t+2) + y^t)} with
/// t = 2^(r+1), q = 2^(2r+1); normalized and sorted.
std::vector<Vector> suzuki_ovoid(FieldPtr const &field);
std::vector<MatrixRep> suzuki_generators(FieldPtr const &field);

/// Faithful transitive permutation representation of a constructible name:
/// A_n / S_n (n <= 12) naturally; L_d(q) on projective points; U3(q) on
/// isotropic points; Sz(q) on the ovoid. Throws Unsupported otherwise.
PermGroup construct(GroupName const &name);

/// Largest degree `construct` will produce for projective actions.
inline constexpr std::size_t construct_degree_budget = 1100;

/// SL(2, q) on the q^2 - 1 nonzero vectors of GF(q)^2.
PermGroup special_linear_on_vectors(std::uint64_t q);

/// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(PermGroup const &a, PermGroup const &b);

/// Closed-form order. Throws Unsupported for sporadic groups whose order does
/// not fit in 64 bits, and std::overflow_error for oversized parameters.
std::uint64_t expected_order(GroupName const &name);

} // namespace mingrp

#endif // MINGRP_GF_HPP
