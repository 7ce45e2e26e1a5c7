// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drinmod/fields.hpp"
#include "drinmod/io.hpp"
#include "test_util.hpp"

using namespace drinmod;
using drinmod::testutil::random_elem;
using drinmod::testutil::random_nonzero;

TEST_CASE("prime field basics") {
  auto F5 = Field::prime(5);
  CHECK(F5->one().inverse() == F5->one());
  CHECK(F5->from_int(2).inverse() == F5->from_int(3));  // 2*3 = 6 = 1
  CHECK(F5->from_int(-1) == F5->from_int(4));
  CHECK_THROWS_AS(F5->zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("extension construction and reducible modulus") {
  auto F5 = Field::prime(5);
  // T^2+1 = (T+2)(T+3) over F_5: first establish reducibility by exhaustive
  // root search, then expect the construction to refuse it.
  Poly q = parse_poly(F5, "T^2+1");
  int roots = 0;
  for (int a = 0; a < 5; ++a)
    if (q.eval(F5->from_int(a)).is_zero()) ++roots;
  CHECK(roots == 2);
  CHECK_THROWS_AS(Field::extend(F5, q.coeffs(), "t"), ReducibleModulus);

  Poly p = parse_poly(F5, "T^6+3T^5+T^2+3T+3");
  auto Fp = Field::extend(F5, p.coeffs(), "t");
  CHECK(Fp->abs_degree() == 6);  // field of size 5^6
  CHECK(Fp->degree() == 6);

  // degree-1 modulus: an identity tower step, not an error
  auto triv = Field::extend(F5, parse_poly(F5, "T").coeffs(), "z");
  CHECK(triv->abs_degree() == 1);
  CHECK(triv->gen().is_zero());  // class of z with z = 0
}

TEST_CASE("field axioms on random elements") {
  auto F5 = Field::prime(5);
  auto Fp = Field::extend(F5, parse_poly(F5, "T^6+3T^5+T^2+3T+3").coeffs(), "t");
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    FieldElem a = random_elem(Fp, rng), b = random_elem(Fp, rng),
              c = random_elem(Fp, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Fp->zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == Fp->one());
  }
}

TEST_CASE("frobenius powers") {
  auto F5 = Field::prime(5);
  auto Fp = Field::extend(F5, parse_poly(F5, "T^6+3T^5+T^2+3T+3").coeffs(), "t");
  FieldElem t = Fp->gen();
  CHECK(frobenius_power(t, 0, 1) == t);
  CHECK(frobenius_power(t, 6, 1) == t);  // |k| = 5^6
  // elements of F_q are fixed
  FieldElem two = Fp->from_int(2);
  CHECK(frobenius_power(two, 3, 1) == two);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    FieldElem x = random_elem(Fp, rng), y = random_elem(Fp, rng);
    CHECK(frobenius_power(x, Fp->abs_degree(), 1) == x);
    CHECK(frobenius_power(x + y, 2, 1) ==
          frobenius_power(x, 2, 1) + frobenius_power(y, 2, 1));
    CHECK(frobenius_power(x * y, 2, 1) ==
          frobenius_power(x, 2, 1) * frobenius_power(y, 2, 1));
  }
}

TEST_CASE("frobenius table matches repeated squaring") {
  auto F3 = Field::prime(3);
  auto Fq = Field::extend(F3, parse_poly(F3, "w^2+1", "w").coeffs(), "w");
  auto K = Field::extend(Fq, parse_poly(Fq, "T^3+T+w", "T").coeffs(), "t");
  FrobeniusTable tbl(K, Fq);
  CHECK(tbl.order() == 3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    FieldElem x = random_elem(K, rng);
    for (int e = 0; e < 4; ++e)
      CHECK(tbl.q_power(x, e) == frobenius_power(x, e % 3, 2));
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  auto F5 = Field::prime(5);
  auto Fp = Field::extend(F5, parse_poly(F5, "T^2+2").coeffs(), "t");
  auto Ext = Field::extend(Fp, find_irreducible(Fp, 3).coeffs(), "y");
  std::mt19937_64 rng(13);
  for (int it = 0; it < 30; ++it) {
    FieldElem a = random_elem(Fp, rng), b = random_elem(Fp, rng);
    CHECK(Ext->embed(a + b) == Ext->embed(a) + Ext->embed(b));
    CHECK(Ext->embed(a * b) == Ext->embed(a) * Ext->embed(b));
  }
  CHECK(Ext->embed(Fp->one()) == Ext->one());
}

TEST_CASE("flatten round trips") {
  auto F2 = Field::prime(2);
  auto F4 = Field::extend(F2, parse_poly(F2, "w^2+w+1", "w").coeffs(), "w");
  auto K = Field::extend(F4, parse_poly(F4, "T^2+T+w", "T").coeffs(), "t");
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    FieldElem x = random_elem(K, rng);
    CHECK(unflatten_prime(K, flatten_prime(x)) == x);
    auto rel = flatten_to(x, F4);
    CHECK(static_cast<int>(rel.size()) == 2);
    CHECK(unflatten_to(K, F4, rel) == x);
  }
}

TEST_CASE("element parse/print round trip") {
  auto F5 = Field::prime(5);
  auto Fp = Field::extend(F5, parse_poly(F5, "T^6+3T^5+T^2+3T+3").coeffs(), "t");
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    FieldElem x = random_elem(Fp, rng);
    CHECK(parse_element(Fp, to_string(x)) == x);
  }
  CHECK(to_string(parse_element(Fp, "2t^5 + 3*t^4 + t + 1")) ==
        "2t^5+3t^4+t+1");
  CHECK_THROWS_AS(parse_element(Fp, "2z+1"), ParseError);
  CHECK_THROWS_AS(parse_element(Fp, "t++1"), ParseError);
}
