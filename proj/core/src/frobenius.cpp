// SPDX-License-Identifier: Apache-2.0
#include "drinmod/frobenius.hpp"

#include <utility>

#include "drinmod/linalg.hpp"

namespace drinmod {

namespace {

// Attempt a monic relation pi^s + sum_{i<s} phi_{c_i} pi^i = 0 with
// deg_T(c_i) <= bounds[i].  Returns the c_i if the system is solvable and
// reports whether the solution was unique.
struct RelationAttempt {
  bool solvable = false;
  bool unique = false;
  std::vector<Poly> c;
};

RelationAttempt try_relation(const DrinfeldModule& phi, int s,
                             const std::vector<int>& bounds) {
  const FieldPtr& fq = phi.fq();
  const FieldPtr& k = phi.k();
  int n = phi.n();
  int qdim = fq->abs_degree();
  int kdim = k->abs_degree() / qdim;  // [k : F_q]

  // Column skew polynomials S_{i,l} = phi_T^l * tau^(n i).
  struct Col {
    int i, l;
    SkewPoly s;
  };
  std::vector<Col> cols;
  SkewPoly phi_pow = SkewPoly::one(k);
  int maxdeg = n * s;
  std::vector<SkewPoly> phi_t_pows;  // phi_T^l
  int lmax = 0;
  for (int i = 0; i < s; ++i) lmax = std::max(lmax, bounds[i]);
  phi_t_pows.push_back(SkewPoly::one(k));
  for (int l = 1; l <= lmax; ++l)
    phi_t_pows.push_back(phi.ring().mul(phi_t_pows.back(), phi.phi_t()));
  for (int i = 0; i < s; ++i) {
    for (int l = 0; l <= bounds[i]; ++l) {
      SkewPoly S = phi.ring().mul(phi_t_pows[l], SkewPoly::tau_power(k, n * i));
      maxdeg = std::max(maxdeg, S.degree());
      cols.push_back({i, l, std::move(S)});
    }
  }
  int rows = (maxdeg + 1) * kdim;
  FieldMat M(rows, static_cast<int>(cols.size()), fq->zero());
  auto fill_col = [&](const SkewPoly& sp, auto&& put) {
    for (int d = 0; d <= sp.degree(); ++d) {
      auto coords = flatten_to(sp.coeff(d), fq);
      for (int j = 0; j < kdim; ++j) put(d * kdim + j, coords[j]);
    }
  };
  for (std::size_t c = 0; c < cols.size(); ++c)
    fill_col(cols[c].s,
             [&](int r, const FieldElem& v) { M.at(r, static_cast<int>(c)) = v; });
  std::vector<FieldElem> rhs(rows, fq->zero());
  SkewPoly pis = SkewPoly::tau_power(k, n * s);
  fill_col(pis, [&](int r, const FieldElem& v) { rhs[r] = -v; });

  auto sol = solve_affine(M, rhs);
  RelationAttempt out;
  if (!sol) return out;
  out.solvable = true;
  out.unique = sol->kernel.empty();
  out.c.assign(s, Poly::zero(fq));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const FieldElem& v = sol->particular[c];
    if (v.is_zero()) continue;
    out.c[cols[c].i] += Poly::constant(v).shifted(cols[c].l);
  }
  return out;
}

std::vector<int> weil_bounds(int s, int n) {
  std::vector<int> b(s);
  for (int i = 0; i < s; ++i) b[i] = ((s - i) * n) / s;
  return b;
}

}  // namespace

CharPoly min_poly_frobenius(const DrinfeldModule& phi) {
  int r = phi.rank();
  int n = phi.n();
  // Minimal-degree probe: an s < r relation means [K:F] < r.
  for (int s = 1; s < r; ++s) {
    auto attempt = try_relation(phi, s, weil_bounds(s, n));
    if (attempt.solvable)
      throw AssumptionViolated(
          "pi satisfies a monic relation of degree " + std::to_string(s) +
          " < r; the endomorphism algebra is not commutative");
  }
  auto attempt = try_relation(phi, r, weil_bounds(r, n));
  if (!attempt.solvable) {
    // Guard against rounding edge cases: widen each bound once.
    auto bounds = weil_bounds(r, n);
    for (auto& b : bounds) ++b;
    attempt = try_relation(phi, r, bounds);
    if (!attempt.solvable)
      throw InternalInconsistency("no monic degree-r relation found for pi");
  }
  if (!attempt.unique)
    throw InternalInconsistency(
        "degree-r relation not unique despite no smaller relation");

  CharPoly out;
  out.rank = r;
  out.prime = phi.prime();
  out.m = phi.m();
  std::vector<Poly> xc = std::move(attempt.c);
  xc.push_back(Poly::one(phi.fq()));
  out.P = XPoly::from_coeffs(phi.fq(), std::move(xc));

  // P(pi) = 0 as an exact skew identity.
  if (!phi.eval_at_pi(out.P).is_zero())
    throw InternalInconsistency("P(pi) != 0 after solving");
  // c_0 = mu * prime^m for a unit mu.
  Poly c0 = out.P.coeff(0);
  Poly pm = phi.prime().pow(phi.m());
  auto [quo, rem] = c0.divmod(pm);
  if (!rem.is_zero() || quo.degree() != 0)
    throw InternalInconsistency("c_0 is not a unit multiple of prime^m");
  out.c0_unit = quo.coeff(0);
  // Degree bounds hold on the result.
  for (int i = 0; i < r; ++i)
    if (out.P.coeff(i).degree() > ((r - i) * n) / r)
      throw InternalInconsistency("coefficient degree bound violated");
  return out;
}

Poly disc_order(const CharPoly& cp) {
  XPoly deriv = cp.P.derivative();
  if (deriv.is_zero())
    throw InseparableCase("disc(A[pi]) = 0: K/F is inseparable");
  Poly res = resultant_x(cp.P, deriv);
  int r = cp.rank;
  if ((r * (r - 1) / 2) % 2 == 1) res = -res;
  if (res.is_zero())
    throw InseparableCase("disc(A[pi]) = 0: K/F is inseparable");
  return res;
}

}  // namespace drinmod
