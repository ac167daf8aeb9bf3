#include <random>

#include <benchmark/benchmark.h>

#include "relwitt/matrix.hpp"
#include "relwitt/orbit.hpp"
#include "relwitt/poly_tools.hpp"
#include "relwitt/report.hpp"

using namespace relwitt;

namespace {

RingPtr ring(const char* text) { return make_ring(parse_ring_spec(text)); }

Matrix random_alternating(const RingPtr& r, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto elems = r->elements();
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = elems[rng() % elems.size()];
      m.at(j, i) = r->neg(m.at(i, j));
    }
  }
  return m;
}

void BM_Pfaffian(benchmark::State& state) {
  Matrix a = random_alternating(ring("zmod:4"), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(8)->Arg(12);

void BM_Berkowitz(benchmark::State& state) {
  Matrix a = random_alternating(ring("zmod:9"), static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Berkowitz)->Arg(4)->Arg(8)->Arg(12);

void BM_BerkowitzIntegers(benchmark::State& state) {
  auto z = ring("int");
  Matrix a(z, 8, 8);
  std::mt19937 rng(3);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) a.at(i, j) = z->from_integer(static_cast<long>(rng() % 201) - 100);
  }
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_BerkowitzIntegers);

void BM_UmOrbits(benchmark::State& state) {
  auto r = ring(state.range(0) == 0 ? "gf:4" : "zmod:4");
  for (auto _ : state) benchmark::DoNotOptimize(um_orbits(r, 3, std::nullopt, 0).orbit_count());
}
BENCHMARK(BM_UmOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RelativeUmOrbits(benchmark::State& state) {
  auto r = ring("zmod:8");
  Ideal two = Ideal::parse(r, {"2"});
  for (auto _ : state) benchmark::DoNotOptimize(um_orbits(r, 3, two, 2).orbit_count());
}
BENCHMARK(BM_RelativeUmOrbits)->Unit(benchmark::kMillisecond);

void BM_WittLevel0(benchmark::State& state) {
  auto r = ring(state.range(0) == 0 ? "zmod:3" : "gf:4");
  for (auto _ : state) benchmark::DoNotOptimize(alt_orbits(r, 2, Ideal::unit(r), 0).orbit_count());
}
BENCHMARK(BM_WittLevel0)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  auto r = ring("zmod:4");
  Ideal two = Ideal::parse(r, {"2"});
  for (auto _ : state) benchmark::DoNotOptimize(vaserstein_report(r, two, {2, 1}).verdict);
}
BENCHMARK(BM_Report)->Unit(benchmark::kMillisecond);

void BM_Nagata(benchmark::State& state) {
  auto k = ring("gf:3");
  MPoly f = MPoly::parse(k, 3, "X1*X2*X3 + 2*X2^3 + X3^2 + 1");
  upoly::Coeffs phi{k->one(), k->one(), k->one()};
  for (auto _ : state) benchmark::DoNotOptimize(nagata_transform(f, phi).m);
}
BENCHMARK(BM_Nagata);

}  // namespace

BENCHMARK_MAIN();
