// SPDX-License-Identifier: Apache-2.0
//
// The twisted polynomial ring k{tau} with the commutation rule
// tau c = c^q tau.  SkewPoly is a plain coefficient vector; the ring
// context (which subfield plays the role of F_q, plus the cached
// Frobenius matrices driving the twist) lives in SkewRing.

#ifndef DRINMOD_SKEW_HPP
#define DRINMOD_SKEW_HPP

#include <utility>
#include <vector>

#include "drinmod/fields.hpp"

namespace drinmod {

class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(FieldPtr k) : k_(std::move(k)) {}

  static SkewPoly zero(const FieldPtr& k) { return SkewPoly(k); }
  static SkewPoly one(const FieldPtr& k) { return constant(k->one()); }
  static SkewPoly constant(FieldElem c);
  static SkewPoly tau_power(const FieldPtr& k, int e);
  static SkewPoly from_coeffs(FieldPtr k, std::vector<FieldElem> c);

  const FieldPtr& field() const { return k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElem coeff(int i) const;
  const FieldElem& lc() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const FieldElem& c) const;  // left scalar multiple
  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

 private:
  FieldPtr k_;
  std::vector<FieldElem> c_;  // coefficient of tau^i, normalized
  void norm();
};

class SkewRing {
 public:
  /// k with distinguished subfield fq; the twist is c -> c^|fq|.
  SkewRing(FieldPtr k, FieldPtr fq);

  const FieldPtr& k() const { return k_; }
  const FieldPtr& fq() const { return fq_; }
  /// [k : F_q]; tau^n is the Frobenius pi of k.
  int n() const { return table_.order(); }

  SkewPoly one() const { return SkewPoly::one(k_); }
  FieldElem twist(const FieldElem& c, int e) const {
    return table_.q_power(c, e);
  }

  SkewPoly mul(const SkewPoly& u, const SkewPoly& v) const;
  /// d = u * s + r with deg r < deg s; unique.  Throws DivisorZero.
  std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& d,
                                             const SkewPoly& s) const;
  bool commutes(const SkewPoly& u, const SkewPoly& v) const;
  /// The additive polynomial sum u_i x^(q^i) evaluated at x, which may lie
  /// in k or in any extension of k.
  FieldElem apply(const SkewPoly& u, const FieldElem& x) const;

 private:
  FieldPtr k_, fq_;
  int s_;  // |fq| = p^s
  FrobeniusTable table_;
};

}  // namespace drinmod

#endif
