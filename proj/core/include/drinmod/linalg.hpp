// SPDX-License-Identifier: Apache-2.0
//
// Exact linear algebra: solve/kernel/rank over any Field (and over the
// fraction field of A), fraction-free determinants and characteristic
// polynomials over A, Smith normal form over the Euclidean ring k[T],
// and GL-conjugacy testing via invariant factors of xI - M.

#ifndef DRINMOD_LINALG_HPP
#define DRINMOD_LINALG_HPP

#include <optional>
#include <vector>

#include "drinmod/poly.hpp"

namespace drinmod {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using FieldMat = Mat<FieldElem>;
using PolyMat = Mat<Poly>;

FieldMat identity_mat(const FieldPtr& k, int n);
FieldMat mat_mul(const FieldMat& a, const FieldMat& b);
FieldMat mat_add(const FieldMat& a, const FieldMat& b);
FieldMat mat_scale(const FieldMat& a, const FieldElem& c);
std::vector<FieldElem> mat_vec(const FieldMat& a,
                               const std::vector<FieldElem>& v);
FieldMat mat_pow(const FieldMat& a, std::int64_t e);
FieldMat mat_from_columns(const FieldPtr& k, int dim,
                          const std::vector<std::vector<FieldElem>>& cols);

/// One solution of M x = v together with a basis of the kernel of M;
/// nullopt if the system is inconsistent.
struct AffineSolution {
  std::vector<FieldElem> particular;
  std::vector<std::vector<FieldElem>> kernel;
};
std::optional<AffineSolution> solve_affine(const FieldMat& M,
                                           const std::vector<FieldElem>& v);

std::vector<std::vector<FieldElem>> kernel_basis(const FieldMat& M);
int rank(FieldMat M);
FieldElem det(FieldMat M);
std::optional<FieldMat> inverse(const FieldMat& M);

/// det(xI - M) for a matrix over a field, monic of degree n.
Poly charpoly(const FieldMat& M);
/// Minimal polynomial of a matrix over a field, monic.
Poly minpoly(const FieldMat& M);

/// Fraction-free Bareiss determinant over an integral domain with exact
/// division (Poly over a field, or A[x]).
Poly det_bareiss(Mat<Poly> M);
XPoly det_bareiss(Mat<XPoly> M);

/// det(xI - M) for a square matrix over A, computed fraction-free.
XPoly charpoly_mat(const PolyMat& M);

/// Smith normal form over k[T]: U M V = diag(d_1 | d_2 | ... ), with U, V
/// unimodular and the d_i monic (zero rows/columns trailing).
struct SmithResult {
  PolyMat U, V;
  std::vector<Poly> invariant_factors;
};
SmithResult smith_normal_form(const PolyMat& M, bool require_full_rank = false);

/// True iff xI - M and xI - N have equal invariant-factor lists, i.e. the
/// matrices are GL-conjugate over the coefficient field.
bool conjugacy_test(const FieldMat& M, const FieldMat& N);

// Solving over the fraction field of A.
using FracMat = Mat<Frac>;
std::optional<std::vector<Frac>> solve_linear(const FracMat& M,
                                              const std::vector<Frac>& v);
Frac det(FracMat M);

}  // namespace drinmod

#endif
