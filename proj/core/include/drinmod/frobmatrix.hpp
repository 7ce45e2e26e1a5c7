// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in K = F[x]/(P), the multiplication-by-pi matrix F(p) in the
// triangular basis of the endomorphism ring, structure constants of E,
// reductions mod n, and the splitting/reciprocity tests on division fields.

#ifndef DRINMOD_FROBMATRIX_HPP
#define DRINMOD_FROBMATRIX_HPP

#include <vector>

#include "drinmod/endoring.hpp"
#include "drinmod/linalg.hpp"

namespace drinmod {

/// K = F(pi) presented as F[x]/(P); elements are coordinate vectors of
/// length r over Frac(A) in the power basis of x.
class KField {
 public:
  explicit KField(const CharPoly& P);

  using Elt = std::vector<Frac>;

  int rank() const { return r_; }
  const FieldPtr& fq() const { return fq_; }

  Elt zero() const;
  Elt one() const;
  Elt x_power(int j) const;  // x^j mod P
  Elt from_xpoly(const XPoly& g) const;
  Elt scale(const Elt& a, const Frac& c) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  /// Trace of multiplication by a on K over F.
  Frac trace(const Elt& a) const;

 private:
  FieldPtr fq_;
  int r_;
  XPoly P_;
  std::vector<std::vector<Frac>> xpow_;  // x^j mod P for j <= 2r-2
};

/// The matrix of multiplication by pi on E in the basis
/// {1, f_1(pi)/b_1, ...}; entries are integral (asserted), the
/// characteristic polynomial equals P, and the subdiagonal carries
/// (b_1, b_2/b_1, ...).
struct FrobMatrix {
  PolyMat mat;
  FrobeniusIndex index;
};

FrobMatrix frobenius_matrix(const CharPoly& P, const EndoBasis& basis);

/// e_i * e_j = sum_k table[i][j][k] e_k with all entries in A.
struct StructureConstants {
  int r = 0;
  std::vector<std::vector<std::vector<Poly>>> table;
};

StructureConstants structure_constants(const CharPoly& P,
                                       const EndoBasis& basis);

/// Entrywise reduction mod n (entries as remainders of degree < deg n).
/// Requires gcd(n, prime) = 1; throws PrimeDividesModulus otherwise.
PolyMat reduce_mod(const FrobMatrix& M, const Poly& n, const Poly& prime);

/// True iff F(p) reduces to the identity mod n, i.e. the Frobenius class
/// in the division field of conductor n is trivial.
bool splits_completely(const FrobMatrix& M, const Poly& n, const Poly& prime);

/// The congruence form of the splitting law: n | b_1 and n | c_{r-1} + r.
/// Requires gcd(r, char) = 1; throws RankCharClash otherwise.
bool reciprocity_check(const FrobeniusIndex& index, const CharPoly& P,
                       const Poly& n);

}  // namespace drinmod

#endif
