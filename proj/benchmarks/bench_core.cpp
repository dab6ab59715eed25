#include <benchmark/benchmark.h>

#include <random>

#include "shadowlab/km_cube.hpp"
#include "shadowlab/parametric.hpp"
#include "shadowlab/shadow.hpp"

using namespace shadowlab;

namespace {

void BM_KmVertex(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const KmParams p(d, Rational(1, 4));
  std::uint64_t idx = 0;
  for (auto _ : state) {
    const VertexCode u = VertexCode::from_index(d, idx++ & ((1u << d) - 1));
    benchmark::DoNotOptimize(km_vertex(u, p));
  }
}
BENCHMARK(BM_KmVertex)->Arg(6)->Arg(10)->Arg(14);

void BM_SolveSquare(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  RatMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A(i, j) = Rational(static_cast<long long>(rng() % 19) - 9,
                         static_cast<long long>(rng() % 9) + 1);
  RatVector b(n);
  for (std::size_t i = 0; i < n; ++i)
    b[i] = Rational(static_cast<long long>(rng() % 19) - 9, 1);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(solve_square(A, b));
    } catch (const SingularSystemError&) {
    }
  }
}
BENCHMARK(BM_SolveSquare)->Arg(4)->Arg(8)->Arg(12);

void BM_Hull2d(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<Point2> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.push_back(Point2{
        Rational(static_cast<long long>(rng() % 2001) - 1000, 7),
        Rational(static_cast<long long>(rng() % 2001) - 1000, 5)});
  for (auto _ : state) benchmark::DoNotOptimize(hull2d(points));
}
BENCHMARK(BM_Hull2d)->Arg(256)->Arg(1024)->Arg(4096);

void BM_KmShadow(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const KmParams p(d, Rational(1, 4));
  const ProjectionPair pp(objective_c(p), RatVector::unit(d, d - 1));
  std::vector<RatVector> vertices;
  for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << d); ++idx)
    vertices.push_back(km_vertex(VertexCode::from_index(d, idx), p));
  for (auto _ : state)
    benchmark::DoNotOptimize(shadow_of_vertices(pp, vertices));
}
BENCHMARK(BM_KmShadow)->Arg(6)->Arg(8)->Arg(10);

void BM_GassSaatySweep(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const KmParams p(d, Rational(1, 4));
  const HPolytope km = make_klee_minty(d, p.eps);
  const RatVector c = objective_c(p);
  const RatVector dv = RatVector::unit(d, d - 1);
  const Basis start = km_code_basis(km_start_code(p));
  for (auto _ : state)
    benchmark::DoNotOptimize(gass_saaty_path(km, c, dv, start));
}
BENCHMARK(BM_GassSaatySweep)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
