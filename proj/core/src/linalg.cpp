// SPDX-License-Identifier: Apache-2.0
#include "drinmod/linalg.hpp"

#include <algorithm>
#include <utility>

namespace drinmod {

namespace {

// Row-reduce [M | aug] in place over a field-like type (FieldElem or Frac);
// returns the pivot column of each pivot row.
template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    T inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      T f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
struct RingOps;

template <>
struct RingOps<FieldElem> {
  static FieldElem zero(const FieldElem& sample) {
    return sample.field()->zero();
  }
  static FieldElem one(const FieldElem& sample) { return sample.field()->one(); }
};
template <>
struct RingOps<Frac> {
  static Frac zero(const Frac& sample) { return Frac::zero(sample.num().field()); }
  static Frac one(const Frac& sample) { return Frac::one(sample.num().field()); }
};

template <class T>
std::optional<std::vector<T>> solve_square_or_general(
    const Mat<T>& M, const std::vector<T>& v,
    std::vector<std::vector<T>>* kernel_out) {
  if (M.rows() != static_cast<int>(v.size()))
    throw Error("solve: dimension mismatch");
  T zero = RingOps<T>::zero(M.rows() && M.cols() ? M.at(0, 0) : v.at(0));
  T one = RingOps<T>::one(zero);
  Mat<T> aug(M.rows(), M.cols() + 1, zero);
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols()) = v[i];
  }
  std::vector<int> pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;
  std::vector<T> part(M.cols(), zero);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    part[pivots[r]] = aug.at(static_cast<int>(r), M.cols());
  if (kernel_out) {
    kernel_out->clear();
    std::vector<char> is_pivot(M.cols(), 0);
    for (int pc : pivots) is_pivot[pc] = 1;
    for (int fc = 0; fc < M.cols(); ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<T> kv(M.cols(), zero);
      kv[fc] = one;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        kv[pivots[r]] = zero - aug.at(static_cast<int>(r), fc);
      kernel_out->push_back(std::move(kv));
    }
  }
  return part;
}

}  // namespace

FieldMat identity_mat(const FieldPtr& k, int n) {
  FieldMat m(n, n, k->zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = k->one();
  return m;
}

FieldMat mat_mul(const FieldMat& a, const FieldMat& b) {
  if (a.cols() != b.rows()) throw Error("mat_mul: dimension mismatch");
  const FieldPtr& k = a.at(0, 0).field();
  FieldMat r(a.rows(), b.cols(), k->zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      if (a.at(i, l).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) += a.at(i, l) * b.at(l, j);
    }
  return r;
}

FieldMat mat_add(const FieldMat& a, const FieldMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("mat_add: dimension mismatch");
  FieldMat r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

FieldMat mat_scale(const FieldMat& a, const FieldElem& c) {
  FieldMat r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) *= c;
  return r;
}

std::vector<FieldElem> mat_vec(const FieldMat& a,
                               const std::vector<FieldElem>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw Error("mat_vec: dimension mismatch");
  const FieldPtr& k = a.at(0, 0).field();
  std::vector<FieldElem> r(a.rows(), k->zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
  return r;
}

FieldMat mat_pow(const FieldMat& a, std::int64_t e) {
  if (a.rows() != a.cols()) throw Error("mat_pow: non-square");
  if (e < 0) throw Error("mat_pow: negative exponent");
  FieldMat acc = identity_mat(a.at(0, 0).field(), a.rows());
  FieldMat base = a;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldMat mat_from_columns(const FieldPtr& k, int dim,
                          const std::vector<std::vector<FieldElem>>& cols) {
  FieldMat m(dim, static_cast<int>(cols.size()), k->zero());
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (static_cast<int>(cols[j].size()) != dim)
      throw Error("mat_from_columns: column length mismatch");
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::optional<AffineSolution> solve_affine(const FieldMat& M,
                                           const std::vector<FieldElem>& v) {
  std::vector<std::vector<FieldElem>> ker;
  auto part = solve_square_or_general(M, v, &ker);
  if (!part) return std::nullopt;
  return AffineSolution{std::move(*part), std::move(ker)};
}

std::vector<std::vector<FieldElem>> kernel_basis(const FieldMat& M) {
  const FieldPtr& k = M.at(0, 0).field();
  std::vector<FieldElem> zero(M.rows(), k->zero());
  auto sol = solve_affine(M, zero);
  return sol->kernel;
}

int rank(FieldMat M) { return static_cast<int>(rref(M).size()); }

FieldElem det(FieldMat M) {
  if (M.rows() != M.cols()) throw Error("det: non-square");
  const FieldPtr& k = M.at(0, 0).field();
  FieldElem d = k->one();
  int n = M.rows();
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!M.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return k->zero();
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(M.at(sel, j), M.at(col, j));
      d = -d;
    }
    d *= M.at(col, col);
    FieldElem inv = M.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (M.at(i, col).is_zero()) continue;
      FieldElem f = M.at(i, col) * inv;
      for (int j = col; j < n; ++j) M.at(i, j) -= f * M.at(col, j);
    }
  }
  return d;
}

std::optional<FieldMat> inverse(const FieldMat& M) {
  if (M.rows() != M.cols()) throw Error("inverse: non-square");
  const FieldPtr& k = M.at(0, 0).field();
  int n = M.rows();
  Mat<FieldElem> aug(n, 2 * n, k->zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n + i) = k->one();
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  FieldMat r(n, n, k->zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

// ---------------------------------------------------------------------------
// Fraction-free determinants / characteristic polynomials

namespace {

template <class T>
T det_bareiss_impl(Mat<T>& m, const T& one) {
  int n = m.rows();
  if (n == 0) return one;
  int sign = 1;
  T prev = one;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) return m.at(k, k) - m.at(k, k);  // zero
      for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j))
                         .exact_div(prev);
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace

Poly det_bareiss(Mat<Poly> M) {
  if (M.rows() != M.cols()) throw Error("det_bareiss: non-square");
  if (M.rows() == 0) throw Error("det_bareiss: empty matrix");
  Poly one = Poly::one(M.at(0, 0).field());
  return det_bareiss_impl(M, one);
}

XPoly det_bareiss(Mat<XPoly> M) {
  if (M.rows() != M.cols()) throw Error("det_bareiss: non-square");
  if (M.rows() == 0) throw Error("det_bareiss: empty matrix");
  XPoly one = XPoly::one(M.at(0, 0).field());
  return det_bareiss_impl(M, one);
}

Poly charpoly(const FieldMat& M) {
  if (M.rows() != M.cols()) throw Error("charpoly: non-square");
  const FieldPtr& k = M.at(0, 0).field();
  int n = M.rows();
  Mat<Poly> xm(n, n, Poly::zero(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e = Poly::constant(-M.at(i, j));
      if (i == j) e += Poly::gen(k);
      xm.at(i, j) = std::move(e);
    }
  return det_bareiss(std::move(xm));
}

Poly minpoly(const FieldMat& M) {
  if (M.rows() != M.cols()) throw Error("minpoly: non-square");
  const FieldPtr& k = M.at(0, 0).field();
  int n = M.rows();
  // Stack I, M, M^2, ... as flat vectors until linearly dependent.
  std::vector<std::vector<FieldElem>> pows;
  FieldMat acc = identity_mat(k, n);
  for (int d = 0; d <= n; ++d) {
    std::vector<FieldElem> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(acc.at(i, j));
    pows.push_back(std::move(flat));
    FieldMat sys(n * n, d, k->zero());
    for (int c = 0; c < d; ++c)
      for (int rix = 0; rix < n * n; ++rix) sys.at(rix, c) = pows[c][rix];
    std::vector<FieldElem> rhs = pows[d];
    auto sol = solve_affine(sys, rhs);
    if (sol) {
      std::vector<FieldElem> c = sol->particular;
      std::vector<FieldElem> coeffs;
      for (auto& x : c) coeffs.push_back(-x);
      coeffs.push_back(k->one());
      return Poly::from_coeffs(k, std::move(coeffs));
    }
    acc = mat_mul(acc, M);
  }
  throw InternalInconsistency("minpoly: no relation up to dimension");
}

// ---------------------------------------------------------------------------
// Smith normal form over k[T]

namespace {

void row_swap(PolyMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(PolyMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_sub(PolyMat& m, int a, int b, const Poly& q) {
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_sub(PolyMat& m, int a, int b, const Poly& q) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}
void row_scale(PolyMat& m, int a, const FieldElem& c) {
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) = m.at(a, j) * c;
}
void col_add(PolyMat& m, int dst, int src) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += m.at(i, src);
}

}  // namespace

SmithResult smith_normal_form(const PolyMat& M, bool require_full_rank) {
  if (M.rows() == 0 || M.cols() == 0) throw Error("smith: empty matrix");
  const FieldPtr& k = M.at(0, 0).field();
  PolyMat D = M;
  int nr = D.rows(), nc = D.cols();
  PolyMat U(nr, nr, Poly::zero(k)), V(nc, nc, Poly::zero(k));
  for (int i = 0; i < nr; ++i) U.at(i, i) = Poly::one(k);
  for (int i = 0; i < nc; ++i) V.at(i, i) = Poly::one(k);

  int t = 0;
  int tmax = std::min(nr, nc);
  while (t < tmax) {
    // Degree-minimal nonzero pivot in the trailing submatrix.
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j)
        if (!D.at(i, j).is_zero() &&
            (pi < 0 || D.at(i, j).degree() < D.at(pi, pj).degree())) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // submatrix is zero
    if (pi != t) {
      row_swap(D, pi, t);
      row_swap(U, pi, t);
    }
    if (pj != t) {
      col_swap(D, pj, t);
      col_swap(V, pj, t);
    }
    bool clean = true;
    for (int i = t + 1; i < nr; ++i) {
      if (D.at(i, t).is_zero()) continue;
      auto [q, r] = D.at(i, t).divmod(D.at(t, t));
      row_sub(D, i, t, q);
      row_sub(U, i, t, q);
      if (!r.is_zero()) clean = false;
    }
    for (int j = t + 1; j < nc; ++j) {
      if (D.at(t, j).is_zero()) continue;
      auto [q, r] = D.at(t, j).divmod(D.at(t, t));
      col_sub(D, j, t, q);
      col_sub(V, j, t, q);
      if (!r.is_zero()) clean = false;
    }
    if (!clean) continue;  // pivot degree dropped somewhere; redo this t
    // Pivot must divide every remaining entry; otherwise mix that row in.
    bool divides_all = true;
    for (int i = t + 1; i < nr && divides_all; ++i)
      for (int j = t + 1; j < nc && divides_all; ++j)
        if (!(D.at(i, j) % D.at(t, t)).is_zero()) {
          // add row i to row t, creating a reducible entry in row t
          row_sub(D, t, i, -Poly::one(k));
          row_sub(U, t, i, -Poly::one(k));
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }
  // Monic normalization.
  std::vector<Poly> inv;
  for (int i = 0; i < tmax; ++i) {
    Poly d = D.at(i, i);
    if (!d.is_zero() && !d.lc().is_one()) {
      FieldElem u = d.lc().inverse();
      row_scale(D, i, u);
      row_scale(U, i, u);
    }
    inv.push_back(D.at(i, i));
  }
  if (require_full_rank)
    for (const auto& d : inv)
      if (d.is_zero()) throw SingularInput("smith: matrix is singular");
  return SmithResult{std::move(U), std::move(V), std::move(inv)};
}

XPoly charpoly_mat(const PolyMat& M) {
  if (M.rows() != M.cols()) throw Error("charpoly_mat: non-square");
  const FieldPtr& k = M.at(0, 0).field();
  int n = M.rows();
  Mat<XPoly> xm(n, n, XPoly::zero(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      XPoly e = XPoly::constant(-M.at(i, j));
      if (i == j) e = e + XPoly::gen(k);
      xm.at(i, j) = std::move(e);
    }
  return det_bareiss(std::move(xm));
}

bool conjugacy_test(const FieldMat& M, const FieldMat& N) {
  if (M.rows() != M.cols() || N.rows() != N.cols())
    throw Error("conjugacy_test: non-square");
  if (M.rows() != N.rows()) return false;
  if (M.at(0, 0).field().get() != N.at(0, 0).field().get())
    throw Error("conjugacy_test: different fields");
  const FieldPtr& k = M.at(0, 0).field();
  int n = M.rows();
  auto char_mat = [&](const FieldMat& A) {
    PolyMat xm(n, n, Poly::zero(k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly e = Poly::constant(-A.at(i, j));
        if (i == j) e += Poly::gen(k);
        xm.at(i, j) = std::move(e);
      }
    return xm;
  };
  auto fa = smith_normal_form(char_mat(M)).invariant_factors;
  auto fb = smith_normal_form(char_mat(N)).invariant_factors;
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i] != fb[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fraction-field solving

std::optional<std::vector<Frac>> solve_linear(const FracMat& M,
                                              const std::vector<Frac>& v) {
  return solve_square_or_general<Frac>(M, v, nullptr);
}

Frac det(FracMat M) {
  if (M.rows() != M.cols()) throw Error("det: non-square");
  const FieldPtr& k = M.at(0, 0).num().field();
  Frac d = Frac::one(k);
  int n = M.rows();
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!M.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Frac::zero(k);
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(M.at(sel, j), M.at(col, j));
      d = -d;
    }
    d = d * M.at(col, col);
    Frac inv = M.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (M.at(i, col).is_zero()) continue;
      Frac f = M.at(i, col) * inv;
      for (int j = col; j < n; ++j)
        M.at(i, j) = M.at(i, j) - f * M.at(col, j);
    }
  }
  return d;
}

}  // namespace drinmod
