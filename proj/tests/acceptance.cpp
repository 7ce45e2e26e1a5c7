// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: reproduces the two worked rank-3 examples exactly,
// checks the splitting law table, and runs the randomized property,
// oracle-equivalence, maximality, and scalar-reduction suites.  Prints one
// pass/fail line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drinmod/gorenstein.hpp"
#include "drinmod/io.hpp"

using namespace drinmod;

namespace {

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

template <class T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) throw Failure{what};
}

void expect_str(const std::string& got, const std::string& want,
                const std::string& what) {
  if (got != want)
    throw Failure{what + ": got \"" + got + "\", want \"" + want + "\""};
}

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_s,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string verdict = "PASS";
  std::string detail;
  try {
    body();
  } catch (const Failure& f) {
    verdict = "FAIL";
    detail = f.what;
    ++g_failures;
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = std::string("exception: ") + e.what();
    ++g_failures;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (verdict == "PASS" && budget_s > 0 && secs > budget_s) {
    verdict = "FAIL";
    detail = "runtime budget exceeded";
    ++g_failures;
  }
  std::printf("criterion %d [%s]: %s (%.2f s)%s\n", number, name.c_str(),
              verdict.c_str(), secs,
              detail.empty() ? "" : ("  // " + detail).c_str());
  std::fflush(stdout);
}

GlobalDrinfeld example_global(const FieldPtr& F5) {
  return GlobalDrinfeld{
      {parse_poly(F5, "T"), parse_poly(F5, "T"), parse_poly(F5, "1")}};
}

FieldElem random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  std::vector<std::int64_t> v(k->abs_degree());
  for (auto& x : v)
    x = static_cast<std::int64_t>(
        rng() % static_cast<std::uint64_t>(k->characteristic()));
  return unflatten_prime(k, v);
}

Poly random_poly(const FieldPtr& k, int deg, std::mt19937_64& rng,
                 bool monic = false) {
  std::vector<FieldElem> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_elem(k, rng));
  if (monic) {
    c.push_back(k->one());
  } else {
    FieldElem lead = random_elem(k, rng);
    while (lead.is_zero()) lead = random_elem(k, rng);
    c.push_back(lead);
  }
  return Poly::from_coeffs(k, std::move(c));
}

Poly random_monic_irreducible(const FieldPtr& k, int deg,
                              std::mt19937_64& rng) {
  for (;;) {
    Poly f = random_poly(k, deg, rng, true);
    if (is_irreducible(f)) return f;
  }
}

DrinfeldModule random_module(const FieldPtr& fq, int prime_deg, int r,
                             std::mt19937_64& rng) {
  Poly prime = random_monic_irreducible(fq, prime_deg, rng);
  FieldPtr k = DrinfeldModule::build_field(fq, prime, 1);
  std::vector<FieldElem> g;
  for (int i = 0; i < r - 1; ++i) g.push_back(random_elem(k, rng));
  FieldElem lead = random_elem(k, rng);
  while (lead.is_zero()) lead = random_elem(k, rng);
  g.push_back(lead);
  return DrinfeldModule(fq, prime, 1, k, std::move(g));
}

// Rank <= 3 irreducibility oracle: no root of the form unit * prime^j.
bool irreducible_by_roots(const CharPoly& P) {
  const FieldPtr& fq = P.P.field();
  std::int64_t q = 1;
  for (int i = 0; i < fq->abs_degree(); ++i) q *= fq->characteristic();
  for (std::int64_t u = 1; u < q; ++u) {
    std::vector<std::int64_t> digits;
    std::int64_t v = u;
    for (int i = 0; i < fq->abs_degree(); ++i) {
      digits.push_back(v % fq->characteristic());
      v /= fq->characteristic();
    }
    FieldElem unit = unflatten_prime(fq, digits);
    for (int j = 0; j <= P.m; ++j)
      if (P.P.eval(Poly::constant(unit) * P.prime.pow(j)).is_zero())
        return false;
  }
  return true;
}

std::string canon(const FieldPtr& fq, const std::string& s) {
  return to_string(parse_poly(fq, s));
}

// ---------------------------------------------------------------------------

void criterion1() {
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  CharPoly P = min_poly_frobenius(phi);
  expect_str(to_string(P.P),
             to_string(parse_xpoly(
                 F5, "x^3+2T^2x^2+(3T^4+T^2+3T+1)x+4(T^6+3T^5+T^2+3T+3)")),
             "P(x)");
  Poly disc = disc_order(P);
  expect_str(to_string(disc.monic()),
             canon(F5, "(T+4)^6(T^4+2T^3+4T^2+3T+4)"), "disc(A[pi])");
  auto fac = factor(disc.monic(), 0);
  expect(fac.factors.size() == 2 &&
             to_string(fac.factors[0].first) == "T+4" &&
             fac.factors[0].second == 6 &&
             to_string(fac.factors[1].first) == canon(F5, "T^4+2T^3+4T^2+3T+4") &&
             fac.factors[1].second == 1,
         "disc factorization");
  EndoBasis B = frobenius_index(phi, P);
  expect(B.index.b.size() == 2, "index size");
  expect_str(to_string(B.index.b[0]), "T+4", "b_1");
  expect_str(to_string(B.index.b[1]), canon(F5, "(T+4)^2"), "b_2");
  expect_str(to_string(B.f[0]), "x+4", "f_1");
  expect_str(to_string(B.f[1]), to_string(parse_xpoly(F5, "(x+4)^2")), "f_2");
  // e_2 = tau^3 + (2t^5+3t^4+t+1)tau^2 + (4t^3+2t+3)tau + t^5+4t^4+4t^3+4t^2+3
  const FieldPtr& k = phi.k();
  expect(B.e[1].degree() == 3 && B.e[1].coeff(3).is_one(), "e_2 top");
  expect_str(to_string(B.e[1].coeff(2)), "2t^5+3t^4+t+1", "e_2 tau^2");
  expect_str(to_string(B.e[1].coeff(1)), "4t^3+2t+3", "e_2 tau");
  expect_str(to_string(B.e[1].coeff(0)), "t^5+4t^4+4t^3+4t^2+3", "e_2 const");
  expect(B.e[2] == phi.ring().mul(B.e[1], B.e[1]), "e_3 = e_2^2");
  verify_basis(phi, P, B);
  FrobMatrix F = frobenius_matrix(P, B);
  const char* expectmat[3][3] = {{"1", "0", "T^4+T^2+2T+1"},
                                 {"T+4", "1", "2T^3+2T^2+2T+4"},
                                 {"0", "T+4", "3(T^2+1)"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect_str(to_string(F.mat.at(i, j)), canon(F5, expectmat[i][j]),
                 "matrix entry");
  (void)k;
}

void criterion2() {
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+4T^4+4T^2+T+1"));
  CharPoly P = min_poly_frobenius(phi);
  expect_str(to_string(P.P),
             to_string(parse_xpoly(
                 F5, "x^3+2T^2x^2+(3T^4+2T^3+2T^2+1)x+4(T^6+4T^4+4T^2+T+1)")),
             "P(x)");
  Poly disc = disc_order(P);
  expect_str(to_string(disc.monic()), canon(F5, "(T+4)^6(T^4+3T^3+T^2+2)"),
             "disc(A[pi])");
  EndoBasis B = frobenius_index(phi, P);
  expect(B.index.b[0].is_one(), "b_1 = 1");
  expect_str(to_string(B.index.b[1]), "T+4", "b_2");
  verify_basis(phi, P, B);

  // The paper displays the basis {1, pi+4, (pi+4)^2/(T+4)}; reconstruct it
  // and check its structure relations exactly.  (Our canonical basis takes
  // f_1 = x, the normal form with deg coefficients < deg b_1 = 0, which is
  // the basis the displayed matrix F(p) is written in.)
  EndoBasis shown;
  shown.index = B.index;
  shown.f = {parse_xpoly(F5, "x+4"), parse_xpoly(F5, "(x+4)^2")};
  shown.e.push_back(SkewPoly::one(phi.k()));
  for (int i = 0; i < 2; ++i) {
    auto u = membership_test(phi, shown.f[i], shown.index.b[i]);
    expect(u.has_value(), "paper basis membership");
    shown.e.push_back(*u);
  }
  expect(shown.e[1] == SkewPoly::tau_power(phi.k(), 6) +
                           SkewPoly::constant(phi.k()->from_int(4)),
         "e_2 = tau^6 + 4");
  // the displayed e_3 expansion, coefficient by coefficient
  {
    const char* coeffs[10] = {
        "4t^5+4t^4+t",
        "3t^5+t^4+3t^3+4t^2+t+1",
        "2t^4+t^3+t^2+4t+4",
        "4t^5+t^2+3t+2",
        "3t^4+2t^3+2t+4",
        "2t^5+3t^4+3t^3+t^2+3",
        "3t^5+t^4+2t^2+3t+1",
        "t^5+t^4+4t^3+4t^2+t+3",
        "3t^5+2t^3+2t^2+1",
        "1"};
    expect(shown.e[2].degree() == 9, "e_3 degree");
    for (int i = 0; i <= 9; ++i)
      expect_str(to_string(shown.e[2].coeff(i)), coeffs[i], "e_3 coefficient");
  }
  StructureConstants sc = structure_constants(P, shown);
  // e_2^2 = (T+4) e_3
  expect(sc.table[1][1][0].is_zero() && sc.table[1][1][1].is_zero(),
         "e_2^2 lower terms");
  expect_str(to_string(sc.table[1][1][2]), "T+4", "e_2^2 = (T+4) e_3");
  // e_2 e_3 = (T+3)(T+4)^2(T^2+2) e_1 + 2(T+2)(T+4)^2 e_2 + 3(T+1)(T+4) e_3
  expect_str(to_string(sc.table[1][2][0]), canon(F5, "(T+3)(T+4)^2(T^2+2)"),
             "e_2 e_3 @ e_1");
  expect_str(to_string(sc.table[1][2][1]), canon(F5, "2(T+2)(T+4)^2"),
             "e_2 e_3 @ e_2");
  expect_str(to_string(sc.table[1][2][2]), canon(F5, "3(T+1)(T+4)"),
             "e_2 e_3 @ e_3");
  // e_3^2: the displayed coefficients are the monic associates of the exact
  // ones (the print drops the units 3 and 2); assert monic parts and the
  // exact values, certified independently through skew arithmetic.
  expect_str(to_string(sc.table[2][2][0].monic()),
             canon(F5, "(T+1)(T+3)(T+4)^2(T^2+2)"), "e_3^2 @ e_1 monic");
  expect_str(to_string(sc.table[2][2][1].monic()),
             to_string(parse_poly(F5, "(T+4)(T^3+3T+2)").monic()),
             "e_3^2 @ e_2 monic");
  expect_str(to_string(sc.table[2][2][2]), canon(F5, "(T+4)T^2"),
             "e_3^2 @ e_3");
  for (int i = 1; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      SkewPoly lhs = phi.ring().mul(shown.e[i], shown.e[j]);
      SkewPoly rhs = SkewPoly::zero(phi.k());
      for (int kk = 0; kk < 3; ++kk)
        rhs = rhs + phi.ring().mul(phi.phi_of(sc.table[i][j][kk]), shown.e[kk]);
      expect(lhs == rhs, "structure relation fails in k{tau}");
    }

  // Gorenstein: local, socle 2-dimensional, verdict false.
  StructureConstants scc = structure_constants(P, B);
  GorensteinReport rep = gorenstein_report(scc, parse_poly(F5, "T+4"),
                                           B.index, 3);
  expect(!rep.gorenstein, "Gorenstein verdict");
  expect(rep.factors.size() == 1, "local");
  expect(rep.factors[0].socle_dim == 2, "socle dimension");

  // Tate-freeness fails; pi action conjugate to F(p) mod l.
  Poly l = parse_poly(F5, "T+4");
  // the printed torsion polynomial phi_l(x) = x^125 + t x^25 + t x^5 + (t+4)x
  SkewPoly phil = phi.phi_of(l);
  expect(phil.degree() == 3 && phil.coeff(3).is_one() &&
             to_string(phil.coeff(2)) == "t" && to_string(phil.coeff(1)) == "t" &&
             to_string(phil.coeff(0)) == "t+4",
         "phi_l coefficients");
  // the printed root v_1 = t^5+2t^3+t^2+3 lies in the kernel
  expect(phi.ring().apply(phil, parse_element(phi.fp_level(),
                                              "t^5+2t^3+t^2+3")).is_zero(),
         "v_1 is a torsion point");
  TateFreeResult tf = is_tate_free(phi, l, B);
  expect(!tf.free_rank_one, "not free");
  expect(cyclic_det_identically_zero(tf.ebar), "symbolic determinant vanishes");
  FrobMatrix F = frobenius_matrix(P, B);
  const char* expectmat[3][3] = {{"0", "4", "(T+4)^2(T^3+3T^2+2)"},
                                 {"1", "2", "2(T+2)(T+4)^2"},
                                 {"0", "T+4", "3(T+2)(T+3)"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect_str(to_string(F.mat.at(i, j)), canon(F5, expectmat[i][j]),
                 "F(p) entry");
  // F(p) mod l = [[0,4,0],[1,2,0],[0,0,1]]
  PolyMat red = reduce_mod(F, l, P.prime);
  const int redmat[3][3] = {{0, 4, 0}, {1, 2, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect(red.at(i, j) == Poly::constant(F5->from_int(redmat[i][j])),
             "F(p) mod l entry");
  FieldMat redf(3, 3, tf.fl->zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      redf.at(i, j) = red.at(i, j).eval(tf.fl->gen());
  expect(conjugacy_test(tf.pibar, redf), "pi action conjugate to F(p) mod l");
  // the paper's displayed pi matrix is in the same class
  FieldMat paperpi(3, 3, tf.fl->zero());
  const int pip[3][3] = {{1, 0, 0}, {0, 4, 3}, {0, 2, 3}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) paperpi.at(i, j) = tf.fl->from_int(pip[i][j]);
  expect(conjugacy_test(tf.pibar, paperpi), "pi action vs printed matrix");
  // the printed torsion actions of e_2 and e_3 up to GL-conjugacy: undo the
  // basis translate (our e_2 is pi = their e_2 - 4)
  auto make = [&](const int (&v)[3][3]) {
    FieldMat m(3, 3, tf.fl->zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = tf.fl->from_int(v[i][j]);
    return m;
  };
  const int pe2[3][3] = {{0, 0, 0}, {0, 3, 3}, {0, 2, 2}};
  const int pe3[3][3] = {{0, 0, 0}, {4, 3, 3}, {1, 2, 2}};
  FieldMat shifted = mat_add(
      tf.ebar[1], mat_scale(identity_mat(tf.fl, 3), tf.fl->from_int(4)));
  expect(conjugacy_test(shifted, make(pe2)), "e_2 torsion action class");
  expect(conjugacy_test(tf.ebar[2], make(pe3)), "e_3 torsion action class");
}

void criterion3() {
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  CharPoly P = min_poly_frobenius(phi);
  EndoBasis B = frobenius_index(phi, P);
  FrobMatrix F = frobenius_matrix(P, B);
  auto agree = [&](const std::string& n, bool want) {
    Poly np = parse_poly(F5, n);
    bool s = splits_completely(F, np, P.prime);
    bool r = reciprocity_check(B.index, P, np);
    expect(s == want, "splits_completely(" + n + ")");
    expect(r == want, "reciprocity_check(" + n + ")");
  };
  agree("T+4", true);
  for (const char* n : {"T", "T+1", "T+2", "T+3", "(T+4)^2"}) agree(n, false);
}

void criterion4() {
  std::mt19937_64 rng(20260809);
  int done = 0;
  int scalar_checked = 0;
  while (done < 200) {
    std::int64_t qs[3] = {2, 3, 5};
    std::int64_t q = qs[rng() % 3];
    auto F = Field::prime(q);
    int r = 2 + static_cast<int>(rng() % 2);
    int dp = 1 + static_cast<int>(rng() % 4);
    DrinfeldModule phi = random_module(F, dp, r, rng);
    CharPoly P;
    EndoBasis B;
    try {
      P = min_poly_frobenius(phi);
      B = frobenius_index(phi, P);
    } catch (const AssumptionViolated&) {
      continue;  // outside the commutative case; not counted
    } catch (const InseparableCase&) {
      continue;  // disc(A[pi]) = 0; the index bound does not apply
    }
    expect(phi.eval_at_pi(P.P).is_zero(), "P(pi) = 0");
    expect(P.P.coeff(0).monic() == phi.prime(), "c_0 = unit * prime");
    expect(irreducible_by_roots(P), "P irreducible");
    VerifyReport rep = verify_basis(phi, P, B);  // trace-form disc identity,
                                                 // SNF certificate, skew laws
    FrobMatrix Fm = frobenius_matrix(P, B);      // charpoly(F) = P and the
                                                 // subdiagonal, asserted
    if (r == 2 && q % 2 == 1) {
      FieldElem half = F->from_int(2).inverse();
      Poly c1_half = P.P.coeff(1) * half;
      expect(((B.f[0].coeff(0) - c1_half) % B.index.b[0]).is_zero(),
             "a_10 = c_1/2 mod b_1");
    }
    if (B.index.b[0].degree() > 0) {
      // scalar property for every prime divisor of b_1
      for (const auto& [fac, mult] : factor(B.index.b[0], 0).factors) {
        PolyMat red = reduce_mod(Fm, fac, P.prime);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            expect(red.at(i, j) == (i == j ? red.at(0, 0) : Poly::zero(F)),
                   "reduction mod a divisor of b_1 is scalar");
        ++scalar_checked;
      }
    }
    (void)rep;
    ++done;
  }
  std::printf("  (criterion 4: 200 instances, %d scalar reductions)\n",
              scalar_checked);
}

void criterion5() {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 50) {
    std::int64_t q = (rng() % 2) ? 2 : 3;
    auto F = Field::prime(q);
    DrinfeldModule phi = random_module(F, 1 + static_cast<int>(rng() % 2),
                                       2 + static_cast<int>(rng() % 2), rng);
    CharPoly P;
    try {
      P = min_poly_frobenius(phi);
    } catch (const AssumptionViolated&) {
      continue;
    } catch (const InseparableCase&) {
      continue;
    }
    int i = 1 + static_cast<int>(rng() % std::min(2, phi.rank() - 1));
    Poly b = random_monic_irreducible(F, 1, rng);
    auto fast = find_f(phi, i, b);
    // brute force: all monic degree-i f with constant coefficients
    bool brute = false;
    {
      std::int64_t qq = q;
      std::vector<std::int64_t> odo(i, 0);
      for (;;) {
        std::vector<Poly> c;
        for (int j = 0; j < i; ++j)
          c.push_back(Poly::constant(F->from_int(odo[j])));
        c.push_back(Poly::one(F));
        if (membership_test(phi, XPoly::from_coeffs(F, c), b)) {
          brute = true;
          break;
        }
        std::size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == qq) odo[pos++] = 0;
        if (pos == odo.size()) break;
      }
    }
    expect(fast.has_value() == brute, "find_f existence vs brute force");
    ++done;
  }
}

void criterion6() {
  std::mt19937_64 rng(987654);
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  CharPoly P = min_poly_frobenius(phi);
  EndoBasis B = frobenius_index(phi, P);
  auto phi2 = reduce_at(example_global(F5),
                        parse_poly(F5, "T^6+4T^4+4T^2+T+1"));
  CharPoly P2 = min_poly_frobenius(phi2);
  EndoBasis B2 = frobenius_index(phi2, P2);
  int passed = 0;
  auto drive = [&](const DrinfeldModule& m, const EndoBasis& basis) {
    int i = 1 + static_cast<int>(rng() % 2);
    const Poly& bi = basis.index.b[i - 1];
    XPoly g;
    Poly b = bi;
    if (rng() % 2) {
      // guaranteed member: f_i + b_i * h
      std::vector<Poly> hc;
      for (int j = 0; j < i; ++j) hc.push_back(random_poly(F5, 1, rng));
      g = basis.f[i - 1] + XPoly::from_coeffs(F5, hc) * bi;
      // sometimes shrink b to a divisor
      if (rng() % 2 && bi.degree() > 0) b = parse_poly(F5, "T+4");
    } else {
      std::vector<Poly> gc;
      for (int j = 0; j < i; ++j) gc.push_back(random_poly(F5, 2, rng));
      gc.push_back(Poly::one(F5));
      g = XPoly::from_coeffs(F5, gc);
      std::vector<Poly> pool{parse_poly(F5, "T+4"), parse_poly(F5, "T"),
                             Poly::one(F5)};
      b = pool[rng() % pool.size()];
    }
    if (!g.is_monic() || g.degree() != i) return;
    if (membership_test(m, g, b)) {
      expect(b.divides(basis.index.b[i - 1]), "b divides b_i");
      ++passed;
    }
  };
  while (passed < 100) {
    drive(phi, B);
    drive(phi2, B2);
  }
}

void criterion7() {
  // Every computed instance with deg b_1 > 0, any n | b_1: reduction is
  // scalar.  The worked example has b_1 = T+4; random instances are covered
  // inside criterion 4, so here the divisors of b_1 are driven exhaustively.
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  CharPoly P = min_poly_frobenius(phi);
  EndoBasis B = frobenius_index(phi, P);
  FrobMatrix F = frobenius_matrix(P, B);
  expect(B.index.b[0].degree() > 0, "worked example has deg b_1 > 0");
  for (const Poly& n : {B.index.b[0], Poly::one(F5)}) {
    if (n.degree() == 0) continue;
    PolyMat red = reduce_mod(F, n, P.prime);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        expect(red.at(i, j) == (i == j ? red.at(0, 0) : Poly::zero(F5)),
               "reduction mod b_1 is scalar");
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion(1, "worked example, maximal endomorphism ring", 60, criterion1);
  criterion(2, "worked example, non-Gorenstein at T+4", 120, criterion2);
  criterion(3, "splitting law table", 0, criterion3);
  criterion(4, "property suite, 200 random instances", 0, criterion4);
  criterion(5, "oracle equivalence for the f_i search", 0, criterion5);
  criterion(6, "maximality fuzz", 0, criterion6);
  criterion(7, "scalar reduction mod divisors of b_1", 0, criterion7);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
