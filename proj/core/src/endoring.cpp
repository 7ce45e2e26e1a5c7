// SPDX-License-Identifier: Apache-2.0
#include "drinmod/endoring.hpp"

#include <algorithm>
#include <utility>

#include "drinmod/frobmatrix.hpp"
#include "drinmod/linalg.hpp"

namespace drinmod {

// ---------------------------------------------------------------------------
// Candidate enumeration

namespace {

// Exponent tuples (a_1..a_{r-1}) for one prime of the discriminant:
// nondecreasing, superadditive, sum <= cap, r(r-1) a_1 <= e.
void enumerate_exponents(int r, int cap, int e, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  int pos = static_cast<int>(cur.size()) + 1;  // next index i (1-based)
  if (pos > r - 1) {
    out.push_back(cur);
    return;
  }
  int sum = 0;
  for (int a : cur) sum += a;
  int lo = cur.empty() ? 0 : cur.back();
  for (int a = lo; sum + a <= cap; ++a) {
    if (pos == 1 && r * (r - 1) * a > e) break;
    bool ok = true;
    // a_i + a_j <= a_{i+j} for i + j = pos
    for (int i = 1; ok && i <= pos - i; ++i) {
      int ai = cur[i - 1];
      int aj = (pos - i == i) ? ai : cur[pos - i - 1];
      if (ai + aj > a) ok = false;
    }
    if (ok) {
      cur.push_back(a);
      enumerate_exponents(r, cap, e, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<FrobeniusIndex> candidate_indices(const Factorization& disc,
                                              int r) {
  if (r < 1) throw Error("candidate_indices: rank must be >= 1");
  const FieldPtr& fq = disc.unit.field();
  if (r == 1) return {FrobeniusIndex{}};

  std::vector<std::vector<std::vector<int>>> per_prime;
  for (const auto& [p, e] : disc.factors) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    enumerate_exponents(r, e / 2, e, cur, tuples);
    per_prime.push_back(std::move(tuples));
  }
  std::vector<FrobeniusIndex> cands;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  for (;;) {
    FrobeniusIndex idx;
    idx.b.assign(r - 1, Poly::one(fq));
    for (std::size_t t = 0; t < per_prime.size(); ++t) {
      const auto& a = per_prime[t][pick[t]];
      for (int i = 0; i < r - 1; ++i)
        if (a[i] > 0) idx.b[i] *= disc.factors[t].first.pow(a[i]);
    }
    // strict degree chain when deg b_1 > 0
    bool keep = true;
    if (idx.b[0].degree() > 0)
      for (int i = 0; i + 1 < r - 1; ++i)
        if (idx.b[i].degree() >= idx.b[i + 1].degree()) keep = false;
    if (keep) cands.push_back(std::move(idx));
    // advance odometer
    std::size_t t = 0;
    while (t < pick.size() && ++pick[t] == per_prime[t].size()) pick[t++] = 0;
    if (t == pick.size()) break;
    if (pick.empty()) break;
  }
  if (per_prime.empty()) cands.push_back([&] {
    FrobeniusIndex idx;
    idx.b.assign(r - 1, Poly::one(fq));
    return idx;
  }());

  std::sort(cands.begin(), cands.end(),
            [](const FrobeniusIndex& x, const FrobeniusIndex& y) {
              int dx = 0, dy = 0;
              for (const auto& b : x.b) dx += b.degree();
              for (const auto& b : y.b) dy += b.degree();
              if (dx != dy) return dx > dy;
              for (std::size_t i = 0; i < x.b.size(); ++i)
                if (x.b[i].degree() != y.b[i].degree())
                  return x.b[i].degree() > y.b[i].degree();
              for (std::size_t i = 0; i < x.b.size(); ++i) {
                int c = poly_cmp(x.b[i], y.b[i]);
                if (c != 0) return c < 0;
              }
              return false;
            });
  return cands;
}

// ---------------------------------------------------------------------------
// Membership and the f_i search

std::optional<SkewPoly> membership_test(const DrinfeldModule& phi,
                                        const XPoly& g, const Poly& b) {
  if (b.is_zero()) throw DivisorZero("membership test with b = 0");
  SkewPoly gpi = phi.eval_at_pi(g);
  SkewPoly phib = phi.phi_of(b);
  auto [u, rem] = phi.ring().right_divmod(gpi, phib);
  if (!rem.is_zero()) return std::nullopt;
  if (!phi.ring().commutes(u, phi.phi_t())) return std::nullopt;
  return u;
}

namespace {

// The pair (remainder, commutator-of-quotient) is F_q-linear in the
// dividend for a fixed divisor; this packs it as one flat F_q vector.
struct MembershipMap {
  const DrinfeldModule& phi;
  SkewPoly phib;
  int rem_terms, com_terms, kdim;

  MembershipMap(const DrinfeldModule& p, const Poly& b, int max_dividend_deg)
      : phi(p), phib(p.phi_of(b)) {
    kdim = p.k()->abs_degree() / p.fq()->abs_degree();
    rem_terms = phib.degree();  // remainder has tau-degree < deg phib
    int max_quot = std::max(0, max_dividend_deg - phib.degree());
    com_terms = max_quot + p.rank() + 1;  // commutator degree bound
  }
  int rows() const { return (rem_terms + com_terms) * kdim; }

  std::vector<FieldElem> image(const SkewPoly& dividend) const {
    auto [quot, rem] = phi.ring().right_divmod(dividend, phib);
    SkewPoly com = phi.ring().mul(quot, phi.phi_t()) -
                   phi.ring().mul(phi.phi_t(), quot);
    const FieldPtr& fq = phi.fq();
    std::vector<FieldElem> out(rows(), fq->zero());
    for (int d = 0; d <= rem.degree(); ++d) {
      auto c = flatten_to(rem.coeff(d), fq);
      for (int j = 0; j < kdim; ++j) out[d * kdim + j] = c[j];
    }
    for (int d = 0; d <= com.degree(); ++d) {
      if (d >= com_terms)
        throw InternalInconsistency("commutator degree bound violated");
      auto c = flatten_to(com.coeff(d), fq);
      for (int j = 0; j < kdim; ++j)
        out[(rem_terms + d) * kdim + j] = c[j];
    }
    return out;
  }
};

}  // namespace

std::optional<XPoly> find_f(const DrinfeldModule& phi, int i, const Poly& b) {
  const FieldPtr& fq = phi.fq();
  if (i < 1 || i > phi.rank() - 1) throw Error("find_f: index out of range");
  XPoly xi = XPoly::gen(fq).pow(i);
  int db = b.degree();
  if (db == 0) {
    // No free coefficients: f = x^i, and f(pi) lies in E automatically.
    if (!membership_test(phi, xi, b))
      throw InternalInconsistency("x^i not a member at unit b");
    return xi;
  }
  int n = phi.n(), r = phi.rank();
  // Dividends: pi^i (constant part) and D_{j,l} = phi_T^l pi^j.
  int max_deg = std::max(i * n, r * (db - 1) + n * (i - 1));
  MembershipMap psi(phi, b, max_deg);

  struct Unknown {
    int j, l;
  };
  std::vector<Unknown> unknowns;
  for (int j = 0; j < i; ++j)
    for (int l = 0; l < db; ++l) unknowns.push_back({j, l});

  std::vector<SkewPoly> phi_t_pows{SkewPoly::one(phi.k())};
  for (int l = 1; l < db; ++l)
    phi_t_pows.push_back(phi.ring().mul(phi_t_pows.back(), phi.phi_t()));

  FieldMat M(psi.rows(), static_cast<int>(unknowns.size()), fq->zero());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    SkewPoly d = phi.ring().mul(phi_t_pows[unknowns[c].l],
                                SkewPoly::tau_power(phi.k(), n * unknowns[c].j));
    auto col = psi.image(d);
    for (int rr = 0; rr < psi.rows(); ++rr) M.at(rr, static_cast<int>(c)) = col[rr];
  }
  auto rhs = psi.image(SkewPoly::tau_power(phi.k(), n * i));
  for (auto& v : rhs) v = -v;
  auto sol = solve_affine(M, rhs);
  if (!sol) return std::nullopt;

  // Canonical representative: minimize the coefficient profile, highest
  // T-degrees first (this pins, e.g., f = (x+4)^2 over f = x^2+(4T+4)x+T).
  std::vector<std::size_t> order(unknowns.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    if (unknowns[a].l != unknowns[c].l) return unknowns[a].l > unknowns[c].l;
    return unknowns[a].j < unknowns[c].j;
  });
  auto key_of = [&](const std::vector<FieldElem>& v) {
    std::vector<std::int64_t> key;
    for (std::size_t c : order) {
      auto digits = flatten_prime(v[c]);
      key.insert(key.end(), digits.begin(), digits.end());
    }
    return key;
  };
  std::vector<FieldElem> best = sol->particular;
  if (!sol->kernel.empty()) {
    double count = 1;
    std::int64_t q = 1;
    for (int d = 0; d < fq->abs_degree(); ++d) q *= fq->characteristic();
    for (std::size_t d = 0; d < sol->kernel.size() && count <= 4096; ++d)
      count *= static_cast<double>(q);
    if (count <= 4096) {
      std::vector<std::int64_t> best_key = key_of(best);
      int dim = static_cast<int>(sol->kernel.size());
      std::vector<std::vector<std::int64_t>> odo(
          dim, std::vector<std::int64_t>(fq->abs_degree(), 0));
      for (;;) {
        // advance odometer first (skip the all-zero combination = particular)
        int pos = 0;
        bool done = false;
        for (;;) {
          if (pos == dim) {
            done = true;
            break;
          }
          std::size_t digit = 0;
          auto& vec = odo[pos];
          while (digit < vec.size() &&
                 ++vec[digit] == fq->characteristic())
            vec[digit++] = 0;
          if (digit < vec.size()) break;
          ++pos;
        }
        if (done) break;
        std::vector<FieldElem> cand = sol->particular;
        for (int d = 0; d < dim; ++d) {
          FieldElem t = unflatten_prime(fq, odo[d]);
          if (t.is_zero()) continue;
          for (std::size_t c = 0; c < cand.size(); ++c)
            cand[c] += t * sol->kernel[d][c];
        }
        auto ck = key_of(cand);
        if (ck < best_key) {
          best_key = std::move(ck);
          best = std::move(cand);
        }
      }
    }
  }

  std::vector<Poly> fc(i + 1, Poly::zero(fq));
  fc[i] = Poly::one(fq);
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    if (!best[c].is_zero())
      fc[unknowns[c].j] += Poly::constant(best[c]).shifted(unknowns[c].l);
  XPoly f = XPoly::from_coeffs(fq, std::move(fc));
  if (!membership_test(phi, f, b))
    throw InternalInconsistency("find_f produced a non-member");
  return f;
}

// ---------------------------------------------------------------------------
// The full Step 1-2 pipeline

EndoBasis frobenius_index(const DrinfeldModule& phi, const CharPoly& P,
                          std::uint64_t seed) {
  int r = phi.rank();
  EndoBasis out;
  out.e.push_back(SkewPoly::one(phi.k()));
  if (r == 1) return out;

  Factorization disc_fact = factor(disc_order(P).monic(), seed);
  auto cands = candidate_indices(disc_fact, r);
  for (const auto& cand : cands) {
    std::vector<XPoly> fs;
    std::vector<SkewPoly> es{SkewPoly::one(phi.k())};
    bool ok = true;
    for (int i = 1; i < r && ok; ++i) {
      auto f = find_f(phi, i, cand.b[i - 1]);
      if (!f) {
        ok = false;
        break;
      }
      auto u = membership_test(phi, *f, cand.b[i - 1]);
      if (!u) throw InternalInconsistency("member lost between solves");
      fs.push_back(std::move(*f));
      es.push_back(std::move(*u));
    }
    if (ok) {
      out.index = cand;
      out.f = std::move(fs);
      out.e = std::move(es);
      return out;
    }
  }
  throw InternalInconsistency("no candidate Frobenius index passed");
}

// ---------------------------------------------------------------------------
// Verification

namespace {

// Coordinates of a K-element in the basis {beta_0, ..., beta_{r-1}}.
std::vector<Frac> coords_in_basis(const KField& K,
                                  const std::vector<KField::Elt>& basis,
                                  const KField::Elt& target) {
  int r = K.rank();
  FracMat B(r, r, Frac::zero(K.fq()));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) B.at(i, j) = basis[j][i];
  auto sol = solve_linear(B, target);
  if (!sol) throw InternalInconsistency("basis does not span K");
  return *sol;
}

}  // namespace

VerifyReport verify_basis(const DrinfeldModule& phi, const CharPoly& P,
                          const EndoBasis& basis) {
  VerifyReport rep;
  const FieldPtr& fq = phi.fq();
  int r = phi.rank();
  auto fail = [](const std::string& what) {
    throw VerificationFailed("verify_basis: " + what);
  };

  rep.disc_order_exact = disc_order(P);

  KField K(P);
  // Power-basis Gram determinant must reproduce the resultant form exactly.
  FracMat gram_pow(r, r, Frac::zero(fq));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram_pow.at(i, j) = K.trace(K.x_power(i + j));
  Frac disc_pow = det(gram_pow);
  if (!disc_pow.is_integral() || disc_pow.num() != rep.disc_order_exact)
    fail("trace-form disc(A[pi]) != resultant disc(A[pi])");
  rep.checks.push_back("disc(A[pi]) trace form == resultant form");

  // Basis elements beta_i = f_i(x)/b_i.
  std::vector<KField::Elt> beta{K.one()};
  for (int i = 1; i < r; ++i) {
    auto el = K.from_xpoly(basis.f[i - 1]);
    beta.push_back(
        K.scale(el, Frac(Poly::one(fq), basis.index.b[i - 1])));
  }
  FracMat gram(r, r, Frac::zero(fq));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Frac t = K.trace(K.mul(beta[i], beta[j]));
      if (!t.is_integral()) fail("trace form of E has a non-integral entry");
      gram.at(i, j) = t;
    }
  Frac disc_endo = det(gram);
  if (!disc_endo.is_integral()) fail("disc(E) not integral");
  rep.disc_endo = disc_endo.num();

  Poly prod2 = Poly::one(fq);
  for (const auto& b : basis.index.b) prod2 *= b * b;
  if (prod2 * rep.disc_endo != rep.disc_order_exact)
    fail("disc(A[pi]) != (prod b_i)^2 * disc(E)");
  rep.checks.push_back("disc(A[pi]) == (prod b_i)^2 * disc(E)");

  // Smith-normal-form certification: the power basis expressed in the
  // e-basis has invariant factors (1, b_1, ..., b_{r-1}).
  PolyMat W(r, r, Poly::zero(fq));
  for (int j = 0; j < r; ++j) {
    auto y = coords_in_basis(K, beta, K.x_power(j));
    for (int i = 0; i < r; ++i) {
      if (!y[i].is_integral()) fail("power basis not integral over e-basis");
      W.at(i, j) = y[i].num();
    }
  }
  auto snf = smith_normal_form(W, /*require_full_rank=*/true);
  rep.snf_factors = snf.invariant_factors;
  std::vector<Poly> expect{Poly::one(fq)};
  for (const auto& b : basis.index.b) expect.push_back(b.monic());
  if (rep.snf_factors != expect)
    fail("Smith normal form does not certify the index");
  rep.checks.push_back("SNF(power basis -> e-basis) == (1, b_1, ..., b_{r-1})");

  // Skew identities.
  for (int i = 1; i < r; ++i) {
    SkewPoly lhs = phi.ring().mul(basis.e[i], phi.phi_of(basis.index.b[i - 1]));
    if (lhs != phi.eval_at_pi(basis.f[i - 1]))
      fail("e_i * phi_{b_i} != f_i(pi)");
    if (!phi.ring().commutes(basis.e[i], phi.phi_t()))
      fail("e_i does not commute with phi_T");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!phi.ring().commutes(basis.e[i], basis.e[j]))
        fail("basis elements do not commute");
  rep.checks.push_back("skew identities (membership, commutation)");
  return rep;
}

}  // namespace drinmod
