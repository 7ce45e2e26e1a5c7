// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drinmod/frobenius.hpp"
#include "drinmod/io.hpp"
#include "test_util.hpp"

using namespace drinmod;
using drinmod::testutil::random_module;

namespace {

GlobalDrinfeld example_global(const FieldPtr& F5) {
  return GlobalDrinfeld{
      {parse_poly(F5, "T"), parse_poly(F5, "T"), parse_poly(F5, "1")}};
}

// Root-search irreducibility oracle, valid for degree <= 3: a monic cubic
// or quadratic over F is reducible iff it has a root in F; for the Frobenius
// polynomial any root must be an associate of a power of the prime.
bool irreducible_by_roots(const CharPoly& P) {
  const FieldPtr& fq = P.P.field();
  REQUIRE(P.rank <= 3);
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
    for (int j = 0; j <= P.m * 1; ++j) {
      Poly cand = Poly::constant(unit) * P.prime.pow(j);
      if (P.P.eval(cand).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("minimal polynomial of the two worked examples") {
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  CharPoly P = min_poly_frobenius(phi);
  CHECK(P.P ==
        parse_xpoly(F5, "x^3+2T^2x^2+(3T^4+T^2+3T+1)x+4(T^6+3T^5+T^2+3T+3)"));
  CHECK(P.c0_unit == F5->from_int(4));
  auto phi2 = reduce_at(example_global(F5), parse_poly(F5, "T^6+4T^4+4T^2+T+1"));
  CharPoly P2 = min_poly_frobenius(phi2);
  CHECK(P2.P ==
        parse_xpoly(F5, "x^3+2T^2x^2+(3T^4+2T^3+2T^2+1)x+4(T^6+4T^4+4T^2+T+1)"));
}

TEST_CASE("rank 1: P = x - mu * prime") {
  auto F5 = Field::prime(5);
  std::mt19937_64 rng(89);
  for (int it = 0; it < 10; ++it) {
    auto phi = random_module(F5, 1 + static_cast<int>(rng() % 3), 1, rng);
    CharPoly P = min_poly_frobenius(phi);
    CHECK(P.P.degree() == 1);
    // cross-check by skew arithmetic
    CHECK(phi.eval_at_pi(P.P).is_zero());
    Poly c0 = P.P.coeff(0);
    CHECK(c0.monic() == phi.prime());
  }
}

TEST_CASE("assumption violated when [K:F] < r") {
  // q = 2, prime = T, m = 2, phi_T = tau^2: then pi = tau^2 = phi_T, so pi
  // satisfies x - T.
  auto F2 = Field::prime(2);
  Poly pT = parse_poly(F2, "T");
  auto k = DrinfeldModule::build_field(F2, pT, 2);
  DrinfeldModule sup(F2, pT, 2, k, {k->zero(), k->one()});
  CHECK_THROWS_AS(min_poly_frobenius(sup), AssumptionViolated);
}

TEST_CASE("discriminant of the worked examples") {
  auto F5 = Field::prime(5);
  auto phi = reduce_at(example_global(F5), parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  Poly disc = disc_order(min_poly_frobenius(phi));
  CHECK(disc.monic() == parse_poly(F5, "(T+4)^6(T^4+2T^3+4T^2+3T+4)"));
  auto phi2 = reduce_at(example_global(F5), parse_poly(F5, "T^6+4T^4+4T^2+T+1"));
  Poly disc2 = disc_order(min_poly_frobenius(phi2));
  CHECK(disc2.monic() == parse_poly(F5, "(T+4)^6(T^4+3T^3+T^2+2)"));
}

TEST_CASE("disc of x^2 - T") {
  auto F5 = Field::prime(5);
  CharPoly P;
  P.P = parse_xpoly(F5, "x^2-T");
  P.rank = 2;
  P.prime = parse_poly(F5, "T");
  P.m = 1;
  P.c0_unit = F5->from_int(4);
  CHECK(disc_order(P) == parse_poly(F5, "4T"));
}

TEST_CASE("invariants on random instances") {
  std::mt19937_64 rng(97);
  for (std::int64_t q : {2, 3, 5}) {
    auto F = Field::prime(q);
    for (int it = 0; it < 8; ++it) {
      int r = 2 + static_cast<int>(rng() % 2);
      int dp = 1 + static_cast<int>(rng() % 3);
      auto phi = random_module(F, dp, r, rng);
      CharPoly P;
      try {
        P = min_poly_frobenius(phi);
      } catch (const AssumptionViolated&) {
        continue;  // [K:F] < r happens for special modules; out of scope
      }
      CHECK(phi.eval_at_pi(P.P).is_zero());
      // c_0 = unit * prime
      CHECK(P.P.coeff(0).monic() == phi.prime());
      // degree bounds
      for (int i = 0; i < r; ++i)
        CHECK(P.P.coeff(i).degree() <= ((r - i) * phi.n()) / r);
      // irreducibility oracle (rank <= 3: no roots in F means irreducible)
      CHECK(irreducible_by_roots(P));
    }
  }
}

TEST_CASE("m = 2 instances satisfy the same identities") {
  auto F3 = Field::prime(3);
  std::mt19937_64 rng(101);
  for (int it = 0; it < 4; ++it) {
    Poly prime = drinmod::testutil::random_monic_irreducible(F3, 1, rng);
    auto k = DrinfeldModule::build_field(F3, prime, 2);
    std::vector<FieldElem> g{drinmod::testutil::random_elem(k, rng),
                             drinmod::testutil::random_nonzero(k, rng)};
    DrinfeldModule phi(F3, prime, 2, k, std::move(g));
    CharPoly P;
    try {
      P = min_poly_frobenius(phi);
    } catch (const AssumptionViolated&) {
      continue;
    }
    CHECK(phi.eval_at_pi(P.P).is_zero());
    // c_0 = unit * prime^2
    CHECK(P.P.coeff(0).monic() == phi.prime().pow(2));
  }
}
