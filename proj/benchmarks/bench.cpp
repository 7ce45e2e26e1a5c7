// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the arithmetic kernels.  The skew product is the
// dominant cost of the pipeline (the naive O(d^2) kernel with the cached
// twist); these numbers are the baseline for any future fast multiplication.

#include <benchmark/benchmark.h>

#include <random>

#include "drinmod/frobenius.hpp"
#include "drinmod/io.hpp"

using namespace drinmod;

namespace {

struct Fixture {
  FieldPtr F5, Fp;
  SkewRing ring;
  Fixture()
      : F5(Field::prime(5)),
        Fp(Field::extend(F5, parse_poly(F5, "T^6+3T^5+T^2+3T+3").coeffs(),
                         "t")),
        ring(Fp, F5) {}
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

SkewPoly random_skew(const FieldPtr& k, int deg, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= deg; ++i) {
    std::vector<std::int64_t> v(k->abs_degree());
    for (auto& x : v)
      x = static_cast<std::int64_t>(
          rng() % static_cast<std::uint64_t>(k->characteristic()));
    c.push_back(unflatten_prime(k, v));
  }
  return SkewPoly::from_coeffs(k, std::move(c));
}

void BM_skew_mul(benchmark::State& state) {
  Fixture& f = fixture();
  std::mt19937_64 rng(1);
  int d = static_cast<int>(state.range(0));
  SkewPoly u = random_skew(f.Fp, d, rng), v = random_skew(f.Fp, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f.ring.mul(u, v));
}
BENCHMARK(BM_skew_mul)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_right_divmod(benchmark::State& state) {
  Fixture& f = fixture();
  std::mt19937_64 rng(2);
  int d = static_cast<int>(state.range(0));
  SkewPoly a = random_skew(f.Fp, 2 * d, rng), s = random_skew(f.Fp, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f.ring.right_divmod(a, s));
}
BENCHMARK(BM_right_divmod)->Arg(8)->Arg(16)->Arg(32);

void BM_frobenius_cached_vs_pow(benchmark::State& state) {
  Fixture& f = fixture();
  std::mt19937_64 rng(3);
  std::vector<std::int64_t> v(f.Fp->abs_degree());
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 5);
  FieldElem c = unflatten_prime(f.Fp, v);
  if (state.range(0)) {
    for (auto _ : state) benchmark::DoNotOptimize(f.ring.twist(c, 3));
  } else {
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_power(c, 3, 1));
  }
}
BENCHMARK(BM_frobenius_cached_vs_pow)->Arg(1)->Arg(0);

void BM_min_poly(benchmark::State& state) {
  auto F5 = Field::prime(5);
  GlobalDrinfeld Phi{
      {parse_poly(F5, "T"), parse_poly(F5, "T"), parse_poly(F5, "1")}};
  auto phi = reduce_at(Phi, parse_poly(F5, "T^6+3T^5+T^2+3T+3"));
  for (auto _ : state) benchmark::DoNotOptimize(min_poly_frobenius(phi));
}
BENCHMARK(BM_min_poly);

}  // namespace

BENCHMARK_MAIN();
