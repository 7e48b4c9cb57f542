#include <benchmark/benchmark.h>

#include <random>

#include "ffc/dimform.hpp"
#include "ffc/random_complex.hpp"

namespace {

ffc::RingPtr bench_ring() {
  return ffc::make_ring(ffc::CoefficientField::prime_field(32003),
                        {"x", "y", "z"});
}

void BM_GroebnerCyclic3(benchmark::State& state) {
  auto ring = bench_ring();
  auto x = ffc::Polynomial::variable(ring, 0);
  auto y = ffc::Polynomial::variable(ring, 1);
  auto z = ffc::Polynomial::variable(ring, 2);
  auto one = ffc::Polynomial::constant(ring, ffc::Scalar(1));
  std::vector<ffc::Polynomial> gens = {x + y + z, x * y + y * z + z * x,
                                       x * y * z - one};
  for (auto _ : state) {
    auto gb = ffc::reduced_groebner_basis(ring, gens);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_DimViaFittingKoszul3(benchmark::State& state) {
  auto ring = bench_ring();
  std::vector<ffc::Polynomial> tuple = {ffc::Polynomial::variable(ring, 0),
                                        ffc::Polynomial::variable(ring, 1),
                                        ffc::Polynomial::variable(ring, 2)};
  auto k = ffc::koszul_complex(ring, tuple);
  for (auto _ : state) {
    auto rep = ffc::dim_via_fitting(k);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_DimViaFittingKoszul3);

void BM_HomologyOracleRandom(benchmark::State& state) {
  auto ring = bench_ring();
  ffc::RandomComplexOptions opts;
  std::mt19937_64 rng(42);
  auto c = ffc::random_complex(ring, opts, rng);
  for (auto _ : state) {
    auto hd = ffc::dim_via_homology(c);
    benchmark::DoNotOptimize(hd);
  }
}
BENCHMARK(BM_HomologyOracleRandom);

void BM_Determinant5x5(benchmark::State& state) {
  auto ring = bench_ring();
  std::mt19937_64 rng(7);
  std::vector<std::vector<ffc::Polynomial>> e;
  for (int i = 0; i < 5; ++i) {
    std::vector<ffc::Polynomial> row;
    for (int j = 0; j < 5; ++j)
      row.push_back(ffc::random_polynomial(ring, 1, rng));
    e.push_back(std::move(row));
  }
  ffc::MapOfFree m(ring, 5, 5, std::move(e));
  for (auto _ : state) {
    auto d = ffc::determinant(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Determinant5x5);

}  // namespace

BENCHMARK_MAIN();
