// SPDX-License-Identifier: Apache-2.0
#include "drinmod/frobmatrix.hpp"

#include <utility>

namespace drinmod {

// ---------------------------------------------------------------------------
// KField

KField::KField(const CharPoly& P) : fq_(P.P.field()), r_(P.rank), P_(P.P) {
  if (!P.P.is_monic() || P.P.degree() != r_)
    throw Error("KField: P must be monic of degree r");
  // x^j mod P for j <= 2r-2, by the monic recurrence.
  std::vector<std::vector<Poly>> pows;
  for (int j = 0; j <= std::max(0, 2 * r_ - 2); ++j) {
    std::vector<Poly> v(r_, Poly::zero(fq_));
    if (j < r_) {
      v[j] = Poly::one(fq_);
    } else {
      const auto& prev = pows[j - 1];
      // x * prev, reduced: x^r = -(c_{r-1} x^{r-1} + ... + c_0)
      Poly top = prev[r_ - 1];
      for (int i = r_ - 1; i >= 1; --i) v[i] = prev[i - 1];
      for (int i = 0; i < r_; ++i) v[i] -= top * P.P.coeff(i);
    }
    pows.push_back(std::move(v));
  }
  xpow_.reserve(pows.size());
  for (auto& v : pows) {
    std::vector<Frac> f;
    f.reserve(r_);
    for (auto& c : v) f.emplace_back(std::move(c));
    xpow_.push_back(std::move(f));
  }
}

KField::Elt KField::zero() const {
  return Elt(r_, Frac::zero(fq_));
}

KField::Elt KField::one() const { return x_power(0); }

KField::Elt KField::x_power(int j) const {
  if (j < 0 || j >= static_cast<int>(xpow_.size()))
    throw Error("x_power out of precomputed range");
  return xpow_[j];
}

KField::Elt KField::from_xpoly(const XPoly& g) const {
  auto [q, rem] = g.divmod(P_);
  (void)q;
  Elt out = zero();
  for (int i = 0; i <= rem.degree(); ++i) out[i] = Frac(rem.coeff(i));
  return out;
}

KField::Elt KField::scale(const Elt& a, const Frac& c) const {
  Elt r = a;
  for (auto& x : r) x = x * c;
  return r;
}

KField::Elt KField::add(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (int i = 0; i < r_; ++i) r[i] = r[i] + b[i];
  return r;
}

KField::Elt KField::mul(const Elt& a, const Elt& b) const {
  std::vector<Frac> conv(2 * r_ - 1, Frac::zero(fq_));
  for (int i = 0; i < r_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < r_; ++j) conv[i + j] = conv[i + j] + a[i] * b[j];
  }
  Elt out = zero();
  for (int d = 0; d < 2 * r_ - 1; ++d) {
    if (conv[d].is_zero()) continue;
    const auto& pw = xpow_[d];
    for (int i = 0; i < r_; ++i) out[i] = out[i] + conv[d] * pw[i];
  }
  return out;
}

Frac KField::trace(const Elt& a) const {
  // Trace of multiplication by a: sum over i of the x^i-coordinate of a*x^i.
  Frac t = Frac::zero(fq_);
  for (int i = 0; i < r_; ++i) {
    Elt col = mul(a, x_power(i));
    t = t + col[i];
  }
  return t;
}

// ---------------------------------------------------------------------------
// Frobenius matrix and structure constants

namespace {

std::vector<KField::Elt> basis_elements(const KField& K,
                                        const EndoBasis& basis) {
  const FieldPtr& fq = K.fq();
  std::vector<KField::Elt> beta{K.one()};
  for (std::size_t i = 0; i < basis.f.size(); ++i) {
    KField::Elt el = K.zero();
    const XPoly& f = basis.f[i];
    for (int j = 0; j <= f.degree(); ++j) {
      auto pw = K.x_power(j);
      for (int c = 0; c < K.rank(); ++c)
        el[c] = el[c] + Frac(f.coeff(j)) * pw[c];
    }
    beta.push_back(K.scale(el, Frac(Poly::one(fq), basis.index.b[i])));
  }
  return beta;
}

std::vector<Frac> solve_in_basis(const KField& K,
                                 const std::vector<KField::Elt>& beta,
                                 const KField::Elt& target) {
  int r = K.rank();
  FracMat B(r, r, Frac::zero(K.fq()));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) B.at(i, j) = beta[j][i];
  auto sol = solve_linear(B, target);
  if (!sol) throw InternalInconsistency("triangular basis does not span K");
  return *sol;
}

Poly integral_or_throw(const Frac& v, const char* what) {
  if (!v.is_integral()) throw NonIntegralEntry(what);
  return v.num();
}

}  // namespace

FrobMatrix frobenius_matrix(const CharPoly& P, const EndoBasis& basis) {
  KField K(P);
  const FieldPtr& fq = K.fq();
  int r = K.rank();
  if (static_cast<int>(basis.f.size()) != r - 1)
    throw Error("frobenius_matrix: basis does not match rank");
  auto beta = basis_elements(K, basis);
  PolyMat M(r, r, Poly::zero(fq));
  for (int j = 0; j < r; ++j) {
    KField::Elt img = K.mul(K.x_power(1), beta[j]);
    auto y = solve_in_basis(K, beta, img);
    for (int i = 0; i < r; ++i)
      M.at(i, j) = integral_or_throw(
          y[i], "frobenius matrix entry outside A (invalid basis or index)");
  }
  FrobMatrix out{std::move(M), basis.index};

  // Structural assertions from the triangular form.
  if (charpoly_mat(out.mat) != P.P)
    throw InternalInconsistency("charpoly(F) != P");
  for (int j = 0; j + 1 < r; ++j) {
    Poly expect = basis.index.b[j];
    if (j > 0) expect = expect.exact_div(basis.index.b[j - 1]);
    if (out.mat.at(j + 1, j) != expect)
      throw InternalInconsistency("subdiagonal of F is not (b_1, b_2/b_1, ...)");
    for (int i = j + 2; i < r; ++i)
      if (!out.mat.at(i, j).is_zero())
        throw InternalInconsistency("F is not lower-Hessenberg");
  }
  return out;
}

StructureConstants structure_constants(const CharPoly& P,
                                       const EndoBasis& basis) {
  KField K(P);
  int r = K.rank();
  auto beta = basis_elements(K, basis);
  StructureConstants out;
  out.r = r;
  out.table.assign(r, std::vector<std::vector<Poly>>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto y = solve_in_basis(K, beta, K.mul(beta[i], beta[j]));
      std::vector<Poly> row;
      row.reserve(r);
      for (int c = 0; c < r; ++c)
        row.push_back(integral_or_throw(
            y[c], "structure constant outside A (invalid basis or index)"));
      out.table[i][j] = std::move(row);
    }
  // Commutativity and associativity on basis triples.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (out.table[i][j] != out.table[j][i])
        throw InternalInconsistency("structure constants not symmetric");
  return out;
}

PolyMat reduce_mod(const FrobMatrix& M, const Poly& n, const Poly& prime) {
  if (n.is_zero()) throw Error("reduce_mod: n must be nonzero");
  if (gcd(n, prime).degree() > 0)
    throw PrimeDividesModulus("reduce_mod: the characteristic prime divides n");
  const FieldPtr& fq = n.field();
  PolyMat out(M.mat.rows(), M.mat.cols(), Poly::zero(fq));
  for (int i = 0; i < M.mat.rows(); ++i)
    for (int j = 0; j < M.mat.cols(); ++j) out.at(i, j) = M.mat.at(i, j) % n;
  return out;
}

bool splits_completely(const FrobMatrix& M, const Poly& n, const Poly& prime) {
  PolyMat red = reduce_mod(M, n, prime);
  if (n.degree() == 0) return true;  // trivial ring
  const Poly one_red = Poly::one(n.field()) % n;
  for (int i = 0; i < red.rows(); ++i)
    for (int j = 0; j < red.cols(); ++j) {
      const Poly expect = (i == j) ? one_red : Poly::zero(n.field());
      if (red.at(i, j) != expect) return false;
    }
  return true;
}

bool reciprocity_check(const FrobeniusIndex& index, const CharPoly& P,
                       const Poly& n) {
  const FieldPtr& fq = P.P.field();
  std::int64_t p = fq->characteristic();
  if (P.rank % p == 0)
    throw RankCharClash("reciprocity law assumes gcd(r, char) = 1");
  if (n.is_zero()) throw Error("reciprocity_check: n must be nonzero");
  if (n.degree() == 0) return true;
  if (!index.b.empty() && !(index.b[0] % n).is_zero()) return false;
  Poly tail = P.P.coeff(P.rank - 1) + Poly::constant(fq->from_int(P.rank));
  return (tail % n).is_zero();
}

}  // namespace drinmod
