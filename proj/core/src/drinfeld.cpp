// SPDX-License-Identifier: Apache-2.0
#include "drinmod/drinfeld.hpp"

#include <numeric>
#include <utility>

namespace drinmod {

FieldPtr DrinfeldModule::build_field(const FieldPtr& fq, const Poly& prime,
                                     int m, const std::optional<Poly>& kmod) {
  if (!prime.is_monic() || !is_irreducible(prime))
    throw Error("the characteristic prime must be monic irreducible");
  FieldPtr fp = Field::extend(fq, prime.coeffs(), "t");
  if (m == 1) return fp;
  if (m < 1) throw Error("relative degree m must be >= 1");
  Poly mod;
  if (kmod) {
    if (kmod->degree() != m)
      throw Error("k-modulus must have degree m over F_p");
    // the caller may have built its own copy of the residue field
    std::vector<FieldElem> c;
    for (const auto& x : kmod->coeffs()) c.push_back(transfer(x, fp));
    mod = Poly::from_coeffs(fp, std::move(c));
  } else {
    mod = find_irreducible(fp, m);
  }
  return Field::extend(fp, mod.coeffs(), "u");
}

DrinfeldModule::DrinfeldModule(FieldPtr fq, Poly prime, int m, FieldPtr k,
                               std::vector<FieldElem> g)
    : fq_(std::move(fq)), k_(std::move(k)), prime_(std::move(prime)), m_(m),
      ring_(k_, fq_) {
  if (g.empty() || g.back().is_zero())
    throw Error("rank-r module needs g_r != 0");
  r_ = static_cast<int>(g.size());
  n_ = m_ * prime_.degree();
  if (k_->abs_degree() != n_ * fq_->abs_degree())
    throw Error("coefficient field does not match m * deg(prime)");
  // locate the F_p level (the extension of fq by the prime)
  fp_ = k_;
  while (fp_->base().get() != fq_.get()) {
    fp_ = fp_->base();
    if (!fp_) throw Error("F_q is not a level of k");
  }
  gamma_t_ = k_->embed(fp_->gen());
  g_ = std::move(g);
  std::vector<FieldElem> c;
  c.reserve(r_ + 1);
  c.push_back(gamma_t_);
  for (const auto& gi : g_) {
    if (gi.field().get() != k_.get())
      throw Error("phi_T coefficients must lie in k");
    c.push_back(gi);
  }
  phi_t_ = SkewPoly::from_coeffs(k_, std::move(c));
}

SkewPoly DrinfeldModule::phi_of(const Poly& a) const {
  if (a.field().get() != fq_.get())
    throw Error("phi_of: argument must lie in A = F_q[T]");
  SkewPoly acc = SkewPoly::zero(k_);
  for (int i = a.degree(); i >= 0; --i) {
    acc = ring_.mul(acc, phi_t_);
    acc = acc + SkewPoly::constant(k_->embed(a.coeff(i)));
  }
  return acc;
}

SkewPoly DrinfeldModule::eval_at_pi(const XPoly& g) const {
  SkewPoly acc = SkewPoly::zero(k_);
  for (int j = 0; j <= g.degree(); ++j) {
    if (g.coeff(j).is_zero()) continue;
    SkewPoly term = ring_.mul(phi_of(g.coeff(j)),
                              SkewPoly::tau_power(k_, n_ * j));
    acc = acc + term;
  }
  return acc;
}

TorsionModule DrinfeldModule::torsion_space(const Poly& l) const {
  if (l.field().get() != fq_.get() || !l.is_monic() || !is_irreducible(l))
    throw Error("torsion_space: l must be monic irreducible in A");
  if (l == prime_)
    throw PrimeDividesModulus("torsion at the characteristic prime");
  SkewPoly phil = phi_of(l);
  int bigd = phil.degree();  // r * deg l

  // phi_l(x)/x over k: an ordinary polynomial of degree q^D - 1.  Guarded;
  // the kernel route below needs only the splitting degree from its
  // distinct-degree split.
  std::int64_t q = 1;
  for (int i = 0; i < fq_->abs_degree(); ++i) q *= fq_->characteristic();
  double size = 1;
  for (int i = 0; i < bigd; ++i) {
    size *= static_cast<double>(q);
    if (size > 2e6) throw Error("torsion polynomial too large to factor");
  }
  std::int64_t qd = 1;
  for (int i = 0; i < bigd; ++i) qd *= q;
  std::vector<FieldElem> pc(static_cast<std::size_t>(qd), k_->zero());
  for (int i = 0; i <= bigd; ++i) {
    std::int64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= q;
    pc[qi - 1] = phil.coeff(i);  // coefficient of x^(q^i), divided by x
  }
  Poly phix = Poly::from_coeffs(k_, std::move(pc));
  if (phix.coeff(0).is_zero())
    throw InternalInconsistency("torsion polynomial is inseparable");
  int s = 1;
  for (const auto& [part, d] : distinct_degree_split(phix))
    s = std::lcm(s, d);

  FieldPtr ext = k_;
  if (s > 1) ext = Field::extend(k_, find_irreducible(k_, s).coeffs(), "y");

  // Kernel of the F_q-linear map apply(phi_l, .) on ext.
  int dim = ext->abs_degree() / fq_->abs_degree();
  auto to_coords = [&](const FieldElem& x) { return flatten_to(x, fq_); };
  auto from_coords = [&](const std::vector<FieldElem>& v) {
    return unflatten_to(ext, fq_, v);
  };
  FieldMat M(dim, dim, fq_->zero());
  for (int j = 0; j < dim; ++j) {
    std::vector<FieldElem> unit(dim, fq_->zero());
    unit[j] = fq_->one();
    FieldElem img = ring_.apply(phil, from_coords(unit));
    auto col = to_coords(img);
    for (int i = 0; i < dim; ++i) M.at(i, j) = col[i];
  }
  auto ker = kernel_basis(M);
  if (static_cast<int>(ker.size()) != bigd)
    throw InternalInconsistency("torsion space has wrong dimension");

  TorsionModule out;
  out.l = l;
  out.splitting = ext;
  for (const auto& kv : ker) out.basis.push_back(from_coords(kv));

  // Coordinates of operator images in the kernel basis.
  FieldMat B = mat_from_columns(fq_, dim, ker);
  auto operator_matrix = [&](const SkewPoly& op) {
    FieldMat A(bigd, bigd, fq_->zero());
    for (int j = 0; j < bigd; ++j) {
      FieldElem img = ring_.apply(op, out.basis[j]);
      auto sol = solve_affine(B, to_coords(img));
      if (!sol)
        throw InternalInconsistency("operator does not preserve the torsion");
      for (int i = 0; i < bigd; ++i) A.at(i, j) = sol->particular[i];
    }
    return A;
  };
  out.phi_t_action = operator_matrix(phi_t_);
  out.pi_action = operator_matrix(pi());

  // l evaluated at the phi_T action must vanish on phi[l].
  FieldMat acc(bigd, bigd, fq_->zero());
  for (int i = l.degree(); i >= 0; --i) {
    acc = mat_mul(acc, out.phi_t_action);
    acc = mat_add(acc, mat_scale(identity_mat(fq_, bigd), l.coeff(i)));
  }
  for (int i = 0; i < bigd; ++i)
    for (int j = 0; j < bigd; ++j)
      if (!acc.at(i, j).is_zero())
        throw InternalInconsistency("l(phi_T) nonzero on the torsion");
  return out;
}

DrinfeldModule reduce_at(const GlobalDrinfeld& Phi, const Poly& prime, int m) {
  if (Phi.g.empty()) throw Error("global module of rank 0");
  const FieldPtr& fq = Phi.g.back().field();
  if (!prime.is_monic() || !is_irreducible(prime))
    throw Error("reduction: prime must be monic irreducible");
  if ((Phi.g.back() % prime).is_zero())
    throw BadReduction("ord_p(g_r) > 0: bad reduction at this prime");
  FieldPtr k = DrinfeldModule::build_field(fq, prime, m);
  // F_p level: first step above fq
  FieldPtr fp = k;
  while (fp->base().get() != fq.get()) fp = fp->base();
  FieldElem t = fp->gen();
  std::vector<FieldElem> g;
  g.reserve(Phi.g.size());
  for (const auto& gi : Phi.g) g.push_back(k->embed(gi.eval(t)));
  return DrinfeldModule(fq, prime, m, k, std::move(g));
}

}  // namespace drinmod
