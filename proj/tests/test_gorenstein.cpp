// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drinmod/gorenstein.hpp"
#include "drinmod/io.hpp"
#include "test_util.hpp"

using namespace drinmod;
using drinmod::testutil::random_module;

namespace {

GlobalDrinfeld example_global(const FieldPtr& F5) {
  return GlobalDrinfeld{
      {parse_poly(F5, "T"), parse_poly(F5, "T"), parse_poly(F5, "1")}};
}

struct Worked {
  DrinfeldModule phi;
  CharPoly P;
  EndoBasis B;
  StructureConstants sc;
};

Worked worked(const FieldPtr& F5, const std::string& prime) {
  auto phi = reduce_at(example_global(F5), parse_poly(F5, prime));
  CharPoly P = min_poly_frobenius(phi);
  EndoBasis B = frobenius_index(phi, P);
  StructureConstants sc = structure_constants(P, B);
  return Worked{std::move(phi), std::move(P), std::move(B), std::move(sc)};
}

FieldPtr residue_field(const FieldPtr& fq, const std::string& l) {
  Poly lp = parse_poly(fq, l);
  return Field::extend(fq, lp.coeffs(), "t");
}

}  // namespace

TEST_CASE("hand-built algebras") {
  auto F5 = Field::prime(5);
  auto fl = residue_field(F5, "T+4");
  using V = FiniteCommAlgebra::Vec;
  SUBCASE("dual numbers F_l[eps]/(eps^2): local, Gorenstein") {
    V u{fl->one(), fl->zero()}, eps{fl->zero(), fl->one()},
        z{fl->zero(), fl->zero()};
    std::vector<std::vector<V>> tb{{u, eps}, {eps, z}};
    auto alg = FiniteCommAlgebra::create(fl, tb, u);
    auto nil = nilradical(alg);
    REQUIRE(nil.size() == 1);
    // the nilradical is spanned by eps
    CHECK(nil[0][0].is_zero());
    auto loc = local_decomposition(alg);
    REQUIRE(loc.size() == 1);
    auto v = is_gorenstein(loc[0]);
    CHECK(v.gorenstein);
    CHECK(v.socle_dim == 1);
    CHECK(v.residue_degree == 1);
  }
  SUBCASE("split quadratic F_l x F_l: two field factors") {
    V u{fl->one(), fl->zero()}, w{fl->zero(), fl->one()};
    std::vector<std::vector<V>> tb{{u, w}, {w, w}};  // w^2 = w
    auto alg = FiniteCommAlgebra::create(fl, tb, u);
    CHECK(nilradical(alg).empty());
    auto loc = local_decomposition(alg);
    REQUIRE(loc.size() == 2);
    int total = 0;
    for (const auto& f : loc) {
      auto v = is_gorenstein(f);
      CHECK(v.gorenstein);
      CHECK(v.dim == 1);
      total += f.dim();
    }
    CHECK(total == alg.dim());
  }
  SUBCASE("a non-commutative or non-associative table is rejected") {
    V u{fl->one(), fl->zero()}, w{fl->zero(), fl->one()},
        z{fl->zero(), fl->zero()};
    std::vector<std::vector<V>> bad{{u, w}, {z, w}};
    CHECK_THROWS_AS(FiniteCommAlgebra::create(fl, bad, u), Error);
  }
}

TEST_CASE("algebra_mod_l on the pipelines") {
  auto F5 = Field::prime(5);
  SUBCASE("etale case: trivial index away from the discriminant") {
    Worked w = worked(F5, "T^6+3T^5+T^2+3T+3");
    // l = T does not divide disc(A[pi]) = (T+4)^6 (irreducible quartic)
    auto alg = algebra_mod_l(w.sc, parse_poly(F5, "T"));
    CHECK(alg.dim() == 3);
    CHECK(nilradical(alg).empty());
    // P mod T factors decide the factor count; just check dims add up
    auto loc = local_decomposition(alg);
    int total = 0;
    for (const auto& f : loc) total += f.dim();
    CHECK(total == 3);
    for (const auto& f : loc) CHECK(is_gorenstein(f).gorenstein);
  }
  SUBCASE("rank 1 gives the residue field") {
    auto F3 = Field::prime(3);
    std::mt19937_64 rng(131);
    auto phi = random_module(F3, 2, 1, rng);
    CharPoly P = min_poly_frobenius(phi);
    EndoBasis B = frobenius_index(phi, P);
    auto sc = structure_constants(P, B);
    auto alg = algebra_mod_l(sc, parse_poly(F3, "T"));
    CHECK(alg.dim() == 1);
    auto v = is_gorenstein(alg);
    CHECK(v.gorenstein);
  }
}

TEST_CASE("the non-Gorenstein example") {
  auto F5 = Field::prime(5);
  Worked w = worked(F5, "T^6+4T^4+4T^2+T+1");
  Poly l = parse_poly(F5, "T+4");
  auto alg = algebra_mod_l(w.sc, l);
  SUBCASE("nilradical is 2-dimensional, the algebra is local") {
    auto nil = nilradical(alg);
    CHECK(nil.size() == 2);
    for (const auto& n : nil) {
      // every member is nilpotent: x^3 = 0 at dimension 3
      auto x3 = alg.mul(alg.mul(n, n), n);
      for (const auto& c : x3) CHECK(c.is_zero());
    }
    auto loc = local_decomposition(alg);
    CHECK(loc.size() == 1);
  }
  SUBCASE("socle is 2-dimensional: not Gorenstein") {
    auto rep = gorenstein_report(w.sc, l, w.B.index, 3);
    CHECK(!rep.gorenstein);
    REQUIRE(rep.factors.size() == 1);
    CHECK(rep.factors[0].socle_dim == 2);
    CHECK(rep.factors[0].residue_degree == 1);
    CHECK(!rep.shortcut.has_value());
  }
  SUBCASE("products of the nilpotent part vanish mod l") {
    // In the displayed basis {1, pi+4, (pi+4)^2/(T+4)} the reductions of
    // e_2 and e_3 square to zero; our basis differs by the unimodular
    // translate e_2 -> e_2 + 4, so check through that translate.
    const FieldPtr& fl = alg.fl();
    FiniteCommAlgebra::Vec e2bar{fl->from_int(4), fl->one(), fl->zero()};
    FiniteCommAlgebra::Vec e3bar{fl->zero(), fl->zero(), fl->one()};
    for (const auto& x : {e2bar, e3bar})
      for (const auto& y : {e2bar, e3bar})
        for (const auto& c : alg.mul(x, y)) CHECK(c.is_zero());
  }
}

TEST_CASE("shortcuts") {
  auto F5 = Field::prime(5);
  Worked w = worked(F5, "T^6+4T^4+4T^2+T+1");
  // r = 2 always has a shortcut
  CHECK(gorenstein_shortcuts(parse_poly(F5, "T"), w.B.index, 2) ==
        std::optional<bool>(true));
  // l not dividing the index
  CHECK(gorenstein_shortcuts(parse_poly(F5, "T"), w.B.index, 3) ==
        std::optional<bool>(true));
  // l = T+4 divides b_2 and r = 3: no shortcut
  CHECK(!gorenstein_shortcuts(parse_poly(F5, "T+4"), w.B.index, 3));
  // agreement where both apply, on random rank-2 instances
  auto F3 = Field::prime(3);
  std::mt19937_64 rng(137);
  int done = 0;
  while (done < 5) {
    auto phi = random_module(F3, 1 + static_cast<int>(rng() % 2), 2, rng);
    CharPoly P;
    try {
      P = min_poly_frobenius(phi);
    } catch (const AssumptionViolated&) {
      continue;
    } catch (const InseparableCase&) {
      continue;
    }
    EndoBasis B = frobenius_index(phi, P);
    auto sc = structure_constants(P, B);
    Poly l = drinmod::testutil::random_monic_irreducible(F3, 1, rng);
    if (l == phi.prime()) continue;
    auto rep = gorenstein_report(sc, l, B.index, 2);
    CHECK(rep.gorenstein);  // shortcut runs inside and must agree
    CHECK(rep.shortcut.has_value());
    ++done;
  }
}

TEST_CASE("tate-freeness on the worked examples") {
  auto F5 = Field::prime(5);
  Poly l = parse_poly(F5, "T+4");
  SUBCASE("maximal endomorphism ring: free") {
    Worked w = worked(F5, "T^6+3T^5+T^2+3T+3");
    auto tf = is_tate_free(w.phi, l, w.B);
    CHECK(tf.free_rank_one);
    CHECK(tf.cyclic.has_value());
    // found vector really is cyclic
    FieldMat m(3, 3, tf.fl->zero());
    for (int i = 0; i < 3; ++i) {
      auto col = mat_vec(tf.ebar[i], *tf.cyclic);
      for (int r = 0; r < 3; ++r) m.at(r, i) = col[r];
    }
    CHECK(!det(m).is_zero());
    // the symbolic determinant agrees (|F_l| = 5 > r = 3)
    CHECK(!cyclic_det_identically_zero(tf.ebar));
    // freeness implies the pi action is conjugate to F(p) mod l
    FrobMatrix F = frobenius_matrix(w.P, w.B);
    PolyMat red = reduce_mod(F, l, w.P.prime);
    FieldMat redf(3, 3, tf.fl->zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        redf.at(i, j) = red.at(i, j).eval(tf.fl->gen());
    CHECK(conjugacy_test(tf.pibar, redf));
  }
  SUBCASE("the non-Gorenstein example: not free") {
    Worked w = worked(F5, "T^6+4T^4+4T^2+T+1");
    auto tf = is_tate_free(w.phi, l, w.B);
    CHECK(!tf.free_rank_one);
    CHECK(!tf.cyclic.has_value());
    CHECK(cyclic_det_identically_zero(tf.ebar));
    // pi action still conjugate to F(p) mod l here (the paper's final
    // observation), and it satisfies P mod l
    FieldMat pibar = pi_action_on_torsion(w.phi, l);
    const FieldPtr& plf = pibar.at(0, 0).field();
    Poly Pmodl = w.P.P.map_coeffs(plf->gen());
    FieldMat acc(3, 3, plf->zero());
    for (int i = Pmodl.degree(); i >= 0; --i) {
      acc = mat_mul(acc, pibar);
      acc = mat_add(acc, mat_scale(identity_mat(plf, 3), Pmodl.coeff(i)));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(acc.at(i, j).is_zero());
  }
}

TEST_CASE("trivial index away from the discriminant: free") {
  auto F3 = Field::prime(3);
  std::mt19937_64 rng(139);
  int done = 0;
  while (done < 3) {
    auto phi = random_module(F3, 1 + static_cast<int>(rng() % 2), 2, rng);
    CharPoly P;
    try {
      P = min_poly_frobenius(phi);
    } catch (const AssumptionViolated&) {
      continue;
    } catch (const InseparableCase&) {
      continue;
    }
    EndoBasis B = frobenius_index(phi, P);
    if (!B.index.b[0].is_one()) continue;
    Poly disc = disc_order(P);
    Poly l = drinmod::testutil::random_monic_irreducible(F3, 1, rng);
    if (l == phi.prime() || (disc % l).is_zero()) continue;
    auto tf = is_tate_free(phi, l, B);
    CHECK(tf.free_rank_one);
    ++done;
  }
}

TEST_CASE("pi action on torsion with deg l = 2") {
  auto F2 = Field::prime(2);
  GlobalDrinfeld Phi{{parse_poly(F2, "1"), parse_poly(F2, "1")}};
  auto phi = reduce_at(Phi, parse_poly(F2, "T"));
  CharPoly P = min_poly_frobenius(phi);
  EndoBasis B = frobenius_index(phi, P);
  Poly l = parse_poly(F2, "T^2+T+1");
  FieldMat pibar = pi_action_on_torsion(phi, l);
  CHECK(pibar.rows() == 2);
  // Cayley-Hamilton for the Frobenius action: P(pibar) = 0 over F_l
  const FieldPtr& fl = pibar.at(0, 0).field();
  Poly Pmodl = P.P.map_coeffs(fl->gen());
  FieldMat acc(2, 2, fl->zero());
  for (int i = Pmodl.degree(); i >= 0; --i) {
    acc = mat_mul(acc, pibar);
    acc = mat_add(acc, mat_scale(identity_mat(fl, 2), Pmodl.coeff(i)));
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(acc.at(i, j).is_zero());
  // rank 2 is Gorenstein, so the torsion is free and conjugacy holds
  auto tf = is_tate_free(phi, l, B);
  CHECK(tf.free_rank_one);
  FrobMatrix F = frobenius_matrix(P, B);
  PolyMat red = reduce_mod(F, l, P.prime);
  FieldMat redf(2, 2, tf.fl->zero());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      redf.at(i, j) = red.at(i, j).eval(tf.fl->gen());
  CHECK(conjugacy_test(tf.pibar, redf));
}
