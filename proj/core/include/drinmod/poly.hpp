// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomial arithmetic over a Field, used both for
// A = F_q[T] itself and for polynomials over any other tower level
// (field moduli, torsion polynomials, minimal polynomials).  Also the
// fraction field of A, complete factorization into monic irreducibles,
// and polynomials in a second variable x with coefficients in A.

#ifndef DRINMOD_POLY_HPP
#define DRINMOD_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drinmod/fields.hpp"

namespace drinmod {

class Poly {
 public:
  Poly() = default;  // detached
  explicit Poly(FieldPtr k) : k_(std::move(k)) {}  // zero polynomial

  static Poly zero(const FieldPtr& k) { return Poly(k); }
  static Poly one(const FieldPtr& k) { return constant(k->one()); }
  static Poly gen(const FieldPtr& k);  // the variable
  static Poly constant(FieldElem c);
  static Poly from_coeffs(FieldPtr k, std::vector<FieldElem> c);
  /// Coefficients given as integers (reduced into the field).
  static Poly from_ints(const FieldPtr& k, const std::vector<std::int64_t>& c);

  const FieldPtr& field() const { return k_; }
  bool valid() const { return k_ != nullptr; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return degree() == 0 && c_[0].is_one(); }
  bool is_monic() const { return !is_zero() && c_.back().is_one(); }
  FieldElem coeff(int i) const;
  const FieldElem& lc() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const FieldElem& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Division with remainder; the divisor may be non-monic.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  /// Quotient asserting remainder zero; throws on non-divisibility.
  Poly exact_div(const Poly& d) const;
  bool divides(const Poly& multiple) const;

  Poly pow(std::int64_t e) const;
  Poly shifted(int k) const;  // multiply by x^k
  Poly derivative() const;
  /// Evaluate at a point in this field or in an extension of it.
  FieldElem eval(const FieldElem& x) const;

  /// Monic associate; `unit` reports the leading coefficient factored out.
  Poly monic(FieldElem* unit = nullptr) const;

 private:
  FieldPtr k_;
  std::vector<FieldElem> c_;  // little-endian, normalized (no trailing zeros)
  void norm();
};

Poly gcd(const Poly& a, const Poly& b);
/// g = gcd(a, b) = u*a + v*b.
struct XgcdResult {
  Poly g, u, v;
};
XgcdResult xgcd(const Poly& a, const Poly& b);

/// Deterministic order on polynomials over one field: by degree, then by
/// coefficients from the leading one down (flattened F_p coordinates).
int poly_cmp(const Poly& a, const Poly& b);

/// unit * prod(factors[i].first ^ factors[i].second) with monic, pairwise
/// distinct irreducible factors, sorted by poly_cmp.
struct Factorization {
  FieldElem unit;
  std::vector<std::pair<Poly, int>> factors;
  Poly reassemble() const;
};

/// (g_i, m_i) with prod g_i^(m_i) = monic(a), each g_i squarefree.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

/// Distinct-degree splitting of a squarefree monic polynomial: pairs
/// (product of all irreducible factors of degree d, d), increasing d.
std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& a);

/// Complete factorization, deterministic for a fixed seed
/// (squarefree -> distinct-degree -> Cantor-Zassenhaus equal-degree).
Factorization factor(const Poly& a, std::uint64_t seed = 0);

bool is_irreducible(const Poly& a);

/// First monic irreducible of the given degree in the deterministic
/// coefficient enumeration order.
Poly find_irreducible(const FieldPtr& k, int degree);

/// Fraction num/den over the polynomial ring of one field, always stored
/// reduced with monic denominator, so equality is structural.
class Frac {
 public:
  Frac() = default;
  Frac(Poly num, Poly den);
  explicit Frac(Poly num);  // denominator 1
  static Frac zero(const FieldPtr& k) { return Frac(Poly::zero(k)); }
  static Frac one(const FieldPtr& k) { return Frac(Poly::one(k)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_.is_one(); }

  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;
  Frac operator-() const;
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac inverse() const;
  bool operator==(const Frac& o) const;
  bool operator!=(const Frac& o) const { return !(*this == o); }

 private:
  Poly num_, den_;
};

/// Element of A[x]: polynomial in x whose coefficients are polynomials in T
/// over F_q (or over any other field).
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(FieldPtr k) : k_(std::move(k)) {}

  static XPoly zero(const FieldPtr& k) { return XPoly(k); }
  static XPoly one(const FieldPtr& k);
  static XPoly gen(const FieldPtr& k);  // x
  static XPoly constant(Poly c);
  static XPoly from_coeffs(FieldPtr k, std::vector<Poly> c);

  const FieldPtr& field() const { return k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !is_zero() && c_.back().is_one(); }
  Poly coeff(int i) const;
  const std::vector<Poly>& coeffs() const { return c_; }

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator-() const;
  XPoly operator*(const Poly& c) const;
  bool operator==(const XPoly& o) const;
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  /// Division with remainder by a divisor whose leading coefficient is a
  /// unit of A (in practice: monic).
  std::pair<XPoly, XPoly> divmod(const XPoly& d) const;
  /// Exact quotient in A[x]; throws on non-divisibility.
  XPoly exact_div(const XPoly& d) const;

  XPoly pow(std::int64_t e) const;
  XPoly derivative() const;  // in x
  /// Evaluate at an element of A.
  Poly eval(const Poly& a) const;
  /// Map T -> t (an element of some extension of the coefficient field),
  /// producing a univariate polynomial in x over t's field.
  Poly map_coeffs(const FieldElem& t) const;

 private:
  FieldPtr k_;
  std::vector<Poly> c_;  // coefficient of x^i, normalized
  void norm();
};

/// Resultant in x of two nonzero elements of A[x], computed by the
/// subresultant polynomial remainder sequence (exact, fraction-free).
Poly resultant_x(const XPoly& a, const XPoly& b);

}  // namespace drinmod

#endif
