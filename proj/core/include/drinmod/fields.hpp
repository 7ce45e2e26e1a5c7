// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in towers of finite fields.  A Field is either the prime field
// F_p or an extension of another Field by a monic irreducible modulus; every
// extension is represented relative to its immediate base, so the algorithms
// can move freely between the F_q-linear and k-linear views of the same
// element.

#ifndef DRINMOD_FIELDS_HPP
#define DRINMOD_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "drinmod/errors.hpp"

namespace drinmod {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a Field.  A value type: freely copyable and shareable.
/// Prime-level elements hold a residue in [0, p); extension-level elements
/// hold a coefficient vector over the base level of length degree().
class FieldElem {
 public:
  FieldElem() = default;  // detached element; using it in arithmetic throws

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  FieldElem inverse() const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  /// x^e by square-and-multiply; negative e inverts first.
  FieldElem pow(std::int64_t e) const;

  /// Residue value at the prime level.
  std::int64_t prime_value() const;
  /// Coefficient vector over the base level (extension levels only).
  const std::vector<FieldElem>& coeffs() const;

 private:
  friend class Field;
  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
  std::int64_t value_ = 0;
};

/// A level in a tower of finite fields.  Immutable after construction and
/// shareable across threads.  All elements are created through a Field.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// The prime field F_p.  p must be prime (checked).
  static FieldPtr prime(std::int64_t p);

  /// Extension of `base` by a modulus that is monic (normalized here) and
  /// irreducible over `base` (verified; throws ReducibleModulus).
  /// `var` names the residue class of the modulus variable for printing.
  static FieldPtr extend(const FieldPtr& base, std::vector<FieldElem> modulus,
                         const std::string& var);

  std::int64_t characteristic() const { return p_; }
  bool is_prime_level() const { return base_ == nullptr; }
  /// Degree of this level over its immediate base (1 for the prime field).
  int degree() const { return degree_; }
  /// Degree over F_p: product of the level degrees.
  int abs_degree() const { return abs_degree_; }
  const FieldPtr& base() const { return base_; }
  const std::string& var() const { return var_; }
  /// Modulus coefficients over the base, monic, length degree()+1.
  const std::vector<FieldElem>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  /// Residue class of the modulus variable (extension levels only).
  FieldElem gen() const;
  /// Element from a coefficient vector over the base; any length, reduced.
  FieldElem element(std::vector<FieldElem> coeffs) const;

  /// True if `other` appears in this field's tower (including itself).
  bool has_level(const Field* other) const;
  /// Embed an element of an ancestor level into this field.
  FieldElem embed(const FieldElem& x) const;

 private:
  Field() = default;
  std::int64_t p_ = 0;
  FieldPtr base_;
  std::vector<FieldElem> modulus_;
  std::string var_;
  int degree_ = 1;
  int abs_degree_ = 1;

  friend class FieldElem;
  void reduce(std::vector<FieldElem>& c) const;
};

/// Two Field instances present the same tower (same characteristic, same
/// moduli level by level), so elements can be moved between them.
bool same_structure(const FieldPtr& a, const FieldPtr& b);
/// Move an element to a structurally identical Field instance.
FieldElem transfer(const FieldElem& x, const FieldPtr& target);

/// Coordinates of x over F_p with respect to the product basis of the tower,
/// lowest level varying fastest; length = abs_degree of x's field.
std::vector<std::int64_t> flatten_prime(const FieldElem& x);
FieldElem unflatten_prime(const FieldPtr& field,
                          std::span<const std::int64_t> coords);

/// Coordinates of x over the tower level `sub`, length [field : sub].
std::vector<FieldElem> flatten_to(const FieldElem& x, const FieldPtr& sub);
FieldElem unflatten_to(const FieldPtr& field, const FieldPtr& sub,
                       std::span<const FieldElem> coords);

/// x^(q^e) with q = p^s, by repeated p-th powers.
FieldElem frobenius_power(const FieldElem& x, int e, int s);

/// Cached matrices of the q-power map on a field, q = |subfield|.  Used in
/// hot loops (skew multiplication) where the repeated-squaring route is too
/// slow.  Immutable after construction.
class FrobeniusTable {
 public:
  /// `sub` must be a level of `field`; q = |sub|.
  FrobeniusTable(FieldPtr field, const FieldPtr& sub);

  /// [field : sub]; q_power exponents are reduced modulo this.
  int order() const { return order_; }
  /// x^(q^e) for x in the table's field.
  FieldElem q_power(const FieldElem& x, int e) const;

 private:
  FieldPtr field_;
  int order_ = 1;
  int dim_ = 1;  // abs_degree of field_
  std::int64_t p_ = 0;
  // power_[e] is the dim x dim matrix of x -> x^(q^e) over F_p, row-major.
  std::vector<std::vector<std::int64_t>> power_;
};

}  // namespace drinmod

#endif
