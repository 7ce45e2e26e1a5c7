// SPDX-License-Identifier: Apache-2.0
#include "drinmod/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace drinmod {

// ---------------------------------------------------------------------------
// FiniteCommAlgebra

FiniteCommAlgebra FiniteCommAlgebra::create(
    FieldPtr fl, std::vector<std::vector<Vec>> table, Vec unit) {
  FiniteCommAlgebra a;
  a.fl_ = std::move(fl);
  a.dim_ = static_cast<int>(table.size());
  a.sc_ = std::move(table);
  a.unit_ = std::move(unit);
  int n = a.dim_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.sc_[i][j] != a.sc_[j][i])
        throw Error("algebra is not commutative");
  for (int j = 0; j < n; ++j)
    if (a.mul(a.unit_, a.basis_vec(j)) != a.basis_vec(j))
      throw Error("unit element fails the unit law");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (a.mul(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(l)) !=
            a.mul(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(l))))
          throw Error("algebra is not associative");
  return a;
}

FiniteCommAlgebra::Vec FiniteCommAlgebra::basis_vec(int i) const {
  Vec v = zero();
  v[i] = fl_->one();
  return v;
}

FiniteCommAlgebra::Vec FiniteCommAlgebra::mul(const Vec& a,
                                              const Vec& b) const {
  Vec out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      FieldElem c = a[i] * b[j];
      for (int l = 0; l < dim_; ++l) out[l] += c * sc_[i][j][l];
    }
  }
  return out;
}

FiniteCommAlgebra::Vec FiniteCommAlgebra::pow(const Vec& a,
                                              std::int64_t e) const {
  if (e < 0) throw Error("negative power in a finite algebra");
  Vec acc = unit_;
  Vec base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldMat FiniteCommAlgebra::mult_matrix(const Vec& a) const {
  FieldMat m(dim_, dim_, fl_->zero());
  for (int j = 0; j < dim_; ++j) {
    Vec col = mul(a, basis_vec(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Poly FiniteCommAlgebra::element_minpoly(const Vec& a) const {
  return minpoly(mult_matrix(a));
}

// ---------------------------------------------------------------------------
// algebra_mod_l

FiniteCommAlgebra algebra_mod_l(const StructureConstants& sc, const Poly& l) {
  if (!l.is_monic() || !is_irreducible(l))
    throw Error("algebra_mod_l: l must be monic irreducible");
  FieldPtr fl = Field::extend(l.field(), l.coeffs(), "t");
  FieldElem t = fl->gen();
  int r = sc.r;
  std::vector<std::vector<FiniteCommAlgebra::Vec>> table(
      r, std::vector<FiniteCommAlgebra::Vec>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      FiniteCommAlgebra::Vec v;
      v.reserve(r);
      for (int c = 0; c < r; ++c) v.push_back(sc.table[i][j][c].eval(t));
      table[i][j] = std::move(v);
    }
  FiniteCommAlgebra::Vec unit(r, fl->zero());
  unit[0] = fl->one();
  return FiniteCommAlgebra::create(std::move(fl), std::move(table),
                                   std::move(unit));
}

// ---------------------------------------------------------------------------
// Nilradical and local decomposition

namespace {

std::int64_t field_size_i64(const FieldPtr& f) {
  std::int64_t s = 1;
  for (int i = 0; i < f->abs_degree(); ++i) {
    if (s > (std::int64_t(1) << 40)) throw Error("residue field too large");
    s *= f->characteristic();
  }
  return s;
}

// Matrix of x -> x^|F_l| on the algebra (F_l-linear: scalars are fixed).
FieldMat frobenius_matrix_of(const FiniteCommAlgebra& a) {
  std::int64_t L = field_size_i64(a.fl());
  FieldMat m(a.dim(), a.dim(), a.fl()->zero());
  for (int j = 0; j < a.dim(); ++j) {
    auto col = a.pow(a.basis_vec(j), L);
    for (int i = 0; i < a.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

// Greedily extend `have` (columns, may be empty) to include v if independent.
bool extend_span(std::vector<std::vector<FieldElem>>& have,
                 const std::vector<FieldElem>& v, const FieldPtr& f) {
  int dim = static_cast<int>(v.size());
  FieldMat m(dim, static_cast<int>(have.size()) + 1, f->zero());
  for (std::size_t j = 0; j < have.size(); ++j)
    for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(j)) = have[j][i];
  for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(have.size())) = v[i];
  if (rank(m) == static_cast<int>(have.size()) + 1) {
    have.push_back(v);
    return true;
  }
  return false;
}

}  // namespace

std::vector<FiniteCommAlgebra::Vec> nilradical(const FiniteCommAlgebra& a) {
  std::int64_t L = field_size_i64(a.fl());
  int e = 0;
  std::int64_t cover = 1;
  while (cover < a.dim()) {
    cover *= L;
    ++e;
  }
  FieldMat m = identity_mat(a.fl(), a.dim());
  FieldMat frob = frobenius_matrix_of(a);
  for (int i = 0; i < e; ++i) m = mat_mul(frob, m);
  auto ker = kernel_basis(m);
  return ker;
}

std::vector<FiniteCommAlgebra> local_decomposition(const FiniteCommAlgebra& a) {
  const FieldPtr& fl = a.fl();
  auto nil = nilradical(a);

  // Quotient by the nilradical: complete nil to a basis, project onto the
  // complementary coordinates.
  std::vector<std::vector<FieldElem>> cols = nil;
  std::vector<int> comp;  // indices of standard vectors completing nil
  for (int i = 0; i < a.dim() && static_cast<int>(cols.size()) < a.dim(); ++i) {
    std::vector<FieldElem> unit(a.dim(), fl->zero());
    unit[i] = fl->one();
    if (extend_span(cols, unit, fl)) comp.push_back(i);
  }
  int qd = static_cast<int>(comp.size());
  FieldMat full(a.dim(), a.dim(), fl->zero());
  for (int j = 0; j < a.dim(); ++j)
    for (int i = 0; i < a.dim(); ++i) full.at(i, j) = cols[j][i];
  auto fullinv = inverse(full);
  if (!fullinv) throw InternalInconsistency("basis completion failed");
  auto project = [&](const FiniteCommAlgebra::Vec& v) {
    auto c = mat_vec(*fullinv, v);  // coordinates in [nil | comp]
    FiniteCommAlgebra::Vec out(qd, fl->zero());
    for (int i = 0; i < qd; ++i) out[i] = c[nil.size() + i];
    return out;
  };
  auto lift = [&](const FiniteCommAlgebra::Vec& v) {
    FiniteCommAlgebra::Vec out(a.dim(), fl->zero());
    for (int i = 0; i < qd; ++i)
      for (int j = 0; j < a.dim(); ++j)
        out[j] += v[i] * cols[nil.size() + i][j];
    return out;
  };
  // Quotient multiplication through lift/project.
  auto qmul = [&](const FiniteCommAlgebra::Vec& x,
                  const FiniteCommAlgebra::Vec& y) {
    return project(a.mul(lift(x), lift(y)));
  };
  FiniteCommAlgebra::Vec qunit = project(a.unit());

  // The Frobenius-fixed subalgebra of the (semisimple) quotient is split
  // etale; splitting along its elements' eigenvalues is complete.
  std::int64_t L = field_size_i64(fl);
  FieldMat qfrob(qd, qd, fl->zero());
  for (int j = 0; j < qd; ++j) {
    FiniteCommAlgebra::Vec bj(qd, fl->zero());
    bj[j] = fl->one();
    // power inside the quotient
    FiniteCommAlgebra::Vec acc = qunit, base = bj;
    std::int64_t e = L;
    while (e > 0) {
      if (e & 1) acc = qmul(acc, base);
      base = qmul(base, base);
      e >>= 1;
    }
    for (int i = 0; i < qd; ++i) qfrob.at(i, j) = acc[i];
  }
  FieldMat fixed_sys = mat_add(qfrob, mat_scale(identity_mat(fl, qd),
                                                -fl->one()));
  auto fixed = kernel_basis(fixed_sys);

  std::vector<FiniteCommAlgebra::Vec> idems{qunit};
  for (const auto& z : fixed) {
    std::vector<FiniteCommAlgebra::Vec> next;
    for (const auto& eps : idems) {
      FiniteCommAlgebra::Vec w = qmul(z, eps);
      // Minimal polynomial of w on the block eps*Q: compute in Q and factor
      // into distinct roots (it splits: w is Frobenius-fixed).
      // Use powers of w inside the block: 1_block = eps.
      std::vector<std::vector<FieldElem>> pows{eps};
      for (int d = 1; d <= qd; ++d)
        pows.push_back(qmul(pows.back(), w));
      // find the monic relation of least degree
      std::vector<FieldElem> relation;
      int reldeg = -1;
      for (int d = 1; d <= qd; ++d) {
        FieldMat sys(qd, d, fl->zero());
        for (int c = 0; c < d; ++c)
          for (int i = 0; i < qd; ++i) sys.at(i, c) = pows[c][i];
        std::vector<FieldElem> rhs(qd, fl->zero());
        for (int i = 0; i < qd; ++i) rhs[i] = pows[d][i];
        auto sol = solve_affine(sys, rhs);
        if (sol) {
          relation = sol->particular;
          reldeg = d;
          break;
        }
      }
      if (reldeg < 0)
        throw InternalInconsistency("no minimal polynomial in quotient");
      std::vector<FieldElem> mc;
      for (auto& c : relation) mc.push_back(-c);
      mc.push_back(fl->one());
      Poly mp = Poly::from_coeffs(fl, std::move(mc));
      // roots of mp over F_l (mp splits into distinct linear factors)
      std::vector<FieldElem> roots;
      {
        Factorization f = factor(mp, 1);
        for (auto& [fac, mult] : f.factors) {
          if (fac.degree() != 1 || mult != 1)
            throw InternalInconsistency(
                "fixed element has a non-split minimal polynomial");
          roots.push_back(-fac.coeff(0));
        }
      }
      if (roots.size() == 1) {
        next.push_back(eps);
        continue;
      }
      for (const auto& lam : roots) {
        FiniteCommAlgebra::Vec elam = eps;
        FieldElem denom = fl->one();
        for (const auto& mu : roots) {
          if (mu == lam) continue;
          // elam *= (w - mu*eps)
          FiniteCommAlgebra::Vec shifted = w;
          for (int i = 0; i < qd; ++i) shifted[i] -= mu * eps[i];
          elam = qmul(elam, shifted);
          denom *= (lam - mu);
        }
        FieldElem dinv = denom.inverse();
        for (auto& c : elam) c *= dinv;
        next.push_back(std::move(elam));
      }
    }
    idems = std::move(next);
  }

  // Lift idempotents through the nilradical: e <- 3e^2 - 2e^3.
  std::vector<FiniteCommAlgebra> out;
  for (const auto& qe : idems) {
    FiniteCommAlgebra::Vec e = lift(qe);
    for (int iter = 0; iter < 64; ++iter) {
      auto e2 = a.mul(e, e);
      if (e2 == e) break;
      auto e3 = a.mul(e2, e);
      for (int i = 0; i < a.dim(); ++i)
        e[i] = a.fl()->from_int(3) * e2[i] - a.fl()->from_int(2) * e3[i];
      if (iter == 63)
        throw InternalInconsistency("idempotent lifting did not converge");
    }
    // Factor algebra e*A: basis from the image of multiplication by e.
    std::vector<std::vector<FieldElem>> image;
    for (int j = 0; j < a.dim(); ++j)
      extend_span(image, a.mul(e, a.basis_vec(j)), fl);
    int fd = static_cast<int>(image.size());
    FieldMat B(a.dim(), fd, fl->zero());
    for (int j = 0; j < fd; ++j)
      for (int i = 0; i < a.dim(); ++i) B.at(i, j) = image[j][i];
    auto in_image = [&](const FiniteCommAlgebra::Vec& v) {
      auto sol = solve_affine(B, v);
      if (!sol) throw InternalInconsistency("product left the ideal");
      return sol->particular;
    };
    std::vector<std::vector<FiniteCommAlgebra::Vec>> tb(
        fd, std::vector<FiniteCommAlgebra::Vec>(fd));
    for (int i = 0; i < fd; ++i)
      for (int j = 0; j < fd; ++j)
        tb[i][j] = in_image(a.mul(image[i], image[j]));
    out.push_back(
        FiniteCommAlgebra::create(fl, std::move(tb), in_image(e)));
  }
  return out;
}

LocalVerdict is_gorenstein(const FiniteCommAlgebra& local) {
  const FieldPtr& fl = local.fl();
  auto nil = nilradical(local);
  LocalVerdict v;
  v.dim = local.dim();
  v.residue_degree = local.dim() - static_cast<int>(nil.size());
  if (nil.empty()) {
    // A field: Gorenstein by definition; Ann(0) is everything.
    v.socle_dim = v.residue_degree;
    v.gorenstein = true;
    return v;
  }
  // Socle = Ann(M) with M the maximal ideal = nilradical.
  int n = local.dim();
  FieldMat sys(n * static_cast<int>(nil.size()), n, fl->zero());
  for (std::size_t j = 0; j < nil.size(); ++j) {
    FieldMat mj = local.mult_matrix(nil[j]);
    for (int rr = 0; rr < n; ++rr)
      for (int cc = 0; cc < n; ++cc)
        sys.at(static_cast<int>(j) * n + rr, cc) = mj.at(rr, cc);
  }
  v.socle_dim = static_cast<int>(kernel_basis(sys).size());
  v.gorenstein = (v.socle_dim == v.residue_degree);
  return v;
}

std::optional<bool> gorenstein_shortcuts(const Poly& l,
                                         const FrobeniusIndex& index, int r) {
  if (r <= 2) return true;
  Poly prod = Poly::one(l.field());
  for (const auto& b : index.b) prod *= b;
  if (!(prod % l).is_zero()) return true;  // E_l = A_l[pi], monogenic
  return std::nullopt;
}

GorensteinReport gorenstein_report(const StructureConstants& sc, const Poly& l,
                                   const FrobeniusIndex& index, int r) {
  GorensteinReport rep;
  auto algebra = algebra_mod_l(sc, l);
  for (const auto& factor : local_decomposition(algebra))
    rep.factors.push_back(is_gorenstein(factor));
  rep.gorenstein = true;
  for (const auto& f : rep.factors) rep.gorenstein = rep.gorenstein && f.gorenstein;
  auto quick = gorenstein_shortcuts(l, index, r);
  if (quick) {
    if (*quick != rep.gorenstein)
      throw InternalInconsistency("Gorenstein shortcut disagrees with full test");
    rep.shortcut = (r <= 2) ? "rank <= 2 (monogenic)"
                            : "l does not divide the index (E_l = A_l[pi])";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// F_l-structure on the torsion and the cyclic-vector test

namespace {

struct FlTorsion {
  FieldPtr fl;
  int r, d, bigd;
  FieldMat basis_cols;     // bigd x bigd over F_q, columns M_T^j w_i
  FieldMat basis_cols_inv; // cached inverse... stored as matrix

  // F_l coordinates of a vector given in torsion coordinates.
  std::vector<FieldElem> to_fl(const std::vector<FieldElem>& v) const {
    auto c = mat_vec(basis_cols_inv, v);
    std::vector<FieldElem> out;
    out.reserve(r);
    for (int i = 0; i < r; ++i) {
      std::vector<FieldElem> digits(c.begin() + i * d,
                                    c.begin() + (i + 1) * d);
      out.push_back(fl->element(std::move(digits)));
    }
    return out;
  }
  // Convert an F_q-linear operator commuting with T into r x r over F_l.
  FieldMat to_fl_operator(const FieldMat& op) const {
    const FieldPtr& fq = fl->base();
    FieldMat m(r, r, fl->zero());
    for (int i = 0; i < r; ++i) {
      std::vector<FieldElem> w(bigd, fq->zero());
      for (int rr = 0; rr < bigd; ++rr) w[rr] = basis_cols.at(rr, i * d);
      auto img = to_fl(mat_vec(op, w));
      for (int rr = 0; rr < r; ++rr) m.at(rr, i) = img[rr];
    }
    return m;
  }
};

FlTorsion build_fl_torsion(const TorsionModule& tor, const FieldPtr& fq) {
  FlTorsion out;
  out.d = tor.l.degree();
  out.bigd = static_cast<int>(tor.basis.size());
  out.r = out.bigd / out.d;
  out.fl = Field::extend(fq, tor.l.coeffs(), "t");
  std::vector<std::vector<FieldElem>> cols;
  for (int cand = 0; cand < out.bigd; ++cand) {
    if (static_cast<int>(cols.size()) == out.bigd) break;
    std::vector<FieldElem> w(out.bigd, fq->zero());
    w[cand] = fq->one();
    // try to add the full T-orbit of w
    auto saved = cols;
    bool ok = extend_span(cols, w, fq);
    if (!ok) continue;
    std::vector<FieldElem> cur = w;
    for (int j = 1; j < out.d; ++j) {
      cur = mat_vec(tor.phi_t_action, cur);
      if (!extend_span(cols, cur, fq)) {
        ok = false;
        break;
      }
    }
    if (!ok) cols = std::move(saved);  // A/l-span must be free; skip this w
  }
  if (static_cast<int>(cols.size()) != out.bigd)
    throw InternalInconsistency("could not build an F_l-basis of the torsion");
  out.basis_cols = mat_from_columns(fq, out.bigd, cols);
  auto inv = inverse(out.basis_cols);
  if (!inv) throw InternalInconsistency("F_l-basis is singular");
  out.basis_cols_inv = std::move(*inv);
  return out;
}

}  // namespace

TateFreeResult is_tate_free(const DrinfeldModule& phi, const Poly& l,
                            const EndoBasis& basis) {
  TorsionModule tor = phi.torsion_space(l);
  const FieldPtr& fq = phi.fq();
  FlTorsion flt = build_fl_torsion(tor, fq);
  int r = phi.rank();
  int bigd = flt.bigd;

  // tor.basis spans phi[l] inside the splitting field; operator images are
  // solved against the matrix of flattened basis vectors.
  std::vector<std::vector<FieldElem>> bcols;
  for (const auto& v : tor.basis) bcols.push_back(flatten_to(v, fq));
  FieldMat B =
      mat_from_columns(fq, static_cast<int>(bcols[0].size()), bcols);
  auto op_matrix = [&](const SkewPoly& u) {
    FieldMat m(bigd, bigd, fq->zero());
    for (int j = 0; j < bigd; ++j) {
      FieldElem img = phi.ring().apply(u, tor.basis[j]);
      auto coords = flatten_to(img, fq);
      auto sol = solve_affine(B, coords);
      if (!sol)
        throw InternalInconsistency("endomorphism does not preserve phi[l]");
      for (int i = 0; i < bigd; ++i) m.at(i, j) = sol->particular[i];
    }
    return m;
  };

  TateFreeResult out;
  out.fl = flt.fl;
  for (int i = 0; i < r; ++i)
    out.ebar.push_back(flt.to_fl_operator(op_matrix(basis.e[i])));
  out.pibar = flt.to_fl_operator(tor.pi_action);

  // Cyclic vector search over F_l^r, with early exit.
  const FieldPtr& fl = flt.fl;
  int digits = fl->abs_degree();
  std::vector<std::int64_t> odo(static_cast<std::size_t>(r) * digits, 0);
  for (;;) {
    std::vector<FieldElem> v;
    v.reserve(r);
    for (int i = 0; i < r; ++i)
      v.push_back(unflatten_prime(
          fl, std::span<const std::int64_t>(odo).subspan(
                  static_cast<std::size_t>(i) * digits, digits)));
    bool nonzero = false;
    for (const auto& c : v) nonzero = nonzero || !c.is_zero();
    if (nonzero) {
      FieldMat m(r, r, fl->zero());
      for (int i = 0; i < r; ++i) {
        auto col = mat_vec(out.ebar[i], v);
        for (int rr = 0; rr < r; ++rr) m.at(rr, i) = col[rr];
      }
      if (!det(m).is_zero()) {
        out.free_rank_one = true;
        out.cyclic = v;
        return out;
      }
    }
    std::size_t pos = 0;
    while (pos < odo.size() &&
           ++odo[pos] == fl->characteristic())
      odo[pos++] = 0;
    if (pos == odo.size()) break;
  }
  out.free_rank_one = false;
  return out;
}

FieldMat pi_action_on_torsion(const DrinfeldModule& phi, const Poly& l) {
  TorsionModule tor = phi.torsion_space(l);
  FlTorsion flt = build_fl_torsion(tor, phi.fq());
  return flt.to_fl_operator(tor.pi_action);
}

bool cyclic_det_identically_zero(const std::vector<FieldMat>& ops) {
  int r = static_cast<int>(ops.size());
  if (r < 1 || r > 3)
    throw Error("symbolic cyclic determinant implemented for r <= 3");
  const FieldPtr& fl = ops[0].at(0, 0).field();
  // Multivariate polynomials in x_0..x_{r-1} as exponent-vector maps.
  using Mono = std::vector<int>;
  using MPoly = std::map<Mono, FieldElem>;
  auto madd = [&](MPoly& a, const Mono& m, const FieldElem& c) {
    auto it = a.find(m);
    if (it == a.end()) {
      if (!c.is_zero()) a.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  };
  auto mmul = [&](const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono m(r, 0);
        for (int i = 0; i < r; ++i) m[i] = ma[i] + mb[i];
        madd(out, m, ca * cb);
      }
    return out;
  };
  // entry(row, col) = sum_j ops[col][row][j] x_j
  auto entry = [&](int row, int col) {
    MPoly p;
    for (int j = 0; j < r; ++j) {
      Mono m(r, 0);
      m[j] = 1;
      madd(p, m, ops[col].at(row, j));
    }
    return p;
  };
  // permutation expansion
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  MPoly detp;
  do {
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inv;
    MPoly term;
    term.emplace(Mono(r, 0), inv % 2 ? -fl->one() : fl->one());
    for (int row = 0; row < r; ++row) term = mmul(term, entry(row, perm[row]));
    for (const auto& [m, c] : term) madd(detp, m, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return detp.empty();
}

}  // namespace drinmod
