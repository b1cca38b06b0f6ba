// Parallel kernels against their serial references.

#include "gonil/catalog.hpp"
#include "gonil/go_engine.hpp"
#include "gonil/isotropy.hpp"
#include "gonil/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gonil;

namespace {

MatrixQ random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 1000 + cols);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  MatrixQ a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      a(r, c) = q;
    }
  return a;
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixQ a = random_matrix(n, n + 8);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}

void BM_rref_reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixQ a = random_matrix(n, n + 8);
  for (auto _ : state) benchmark::DoNotOptimize(rref_reference(a));
}

const LieAlgebra& paper_algebra() {
  static const NamedExample ex = build_example("paper_2_3");
  return ex.algebra.algebra();
}

void BM_derivation_equations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derivation_equations(paper_algebra()));
}

void BM_derivation_equations_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derivation_equations_reference(paper_algebra()));
}

void BM_go_random_audit(benchmark::State& state) {
  static const NamedExample ex = build_example("paper_2_3");
  static const OperatorSpace h = isotropy_algebra(ex.algebra);
  for (auto _ : state)
    benchmark::DoNotOptimize(go_random_audit(ex.algebra, h, state.range(0), 1, 5));
}

void BM_go_random_audit_reference(benchmark::State& state) {
  static const NamedExample ex = build_example("paper_2_3");
  static const OperatorSpace h = isotropy_algebra(ex.algebra);
  for (auto _ : state)
    benchmark::DoNotOptimize(go_random_audit_reference(ex.algebra, h, state.range(0), 1, 5));
}

}  // namespace

BENCHMARK(BM_rref)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_reference)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_derivation_equations)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_derivation_equations_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_go_random_audit)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_go_random_audit_reference)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
