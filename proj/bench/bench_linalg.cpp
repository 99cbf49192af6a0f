// Serial reference vs parallel sparse elimination on the matrices that
// dominate the workload: Koszul differential blocks, basic-subspace systems
// and equivariance systems.

#include <benchmark/benchmark.h>

#include "weil/linalg.hpp"
#include "weil/random.hpp"
#include "weil/schur_oracle.hpp"
#include "weil/weil_algebra.hpp"

namespace {

weil::SparseMatrix koszul_block(int n, int p, int q) {
  const auto domain = weil::weil_basis_bidegree(n, p, q);
  const auto codomain = weil::weil_basis_bidegree(n, p - 1, q + 1);
  return weil::operator_matrix(n, domain, codomain, [](const weil::WeilElement& a) { return weil::koszul_d(a); },
                               weil::Exec::serial);
}

weil::SparseMatrix random_sparse(std::size_t rows, std::size_t cols, int per_row, std::uint64_t seed) {
  weil::Rng rng(seed);
  weil::SparseMatrix m(0, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<weil::Rational> dense(cols);
    for (int k = 0; k < per_row; ++k)
      dense[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(cols) - 1))] = rng.nonzero_rational(5, 3);
    m.append_row(weil::to_sparse(dense));
  }
  return m;
}

void BM_RrefKoszulParallel(benchmark::State& state) {
  const auto m = koszul_block(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weil::rref(m, weil::Exec::parallel).rank());
}

void BM_RrefKoszulSerial(benchmark::State& state) {
  const auto m = koszul_block(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weil::rref(m, weil::Exec::serial).rank());
}

void BM_RrefKoszulDenseReference(benchmark::State& state) {
  const auto m = koszul_block(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weil::reference::rref_dense(m).rank());
}

void BM_RankRandomParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_sparse(n, n, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(weil::rank(m, weil::Exec::parallel));
}

void BM_RankRandomSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_sparse(n, n, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(weil::rank(m, weil::Exec::serial));
}

void BM_RankRandomBareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_sparse(n, n, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(weil::rank_fraction_free(m));
}

void BM_BasicSubspaceParallel(benchmark::State& state) {
  const auto su2 = weil::builtin_algebra("su2");
  for (auto _ : state) benchmark::DoNotOptimize(weil::basic_subspace(su2, static_cast<int>(state.range(0)), weil::Exec::parallel).size());
}

void BM_BasicSubspaceSerial(benchmark::State& state) {
  const auto su2 = weil::builtin_algebra("su2");
  for (auto _ : state) benchmark::DoNotOptimize(weil::basic_subspace(su2, static_cast<int>(state.range(0)), weil::Exec::serial).size());
}

void BM_EquivariantHomParallel(benchmark::State& state) {
  const auto p = weil::bidegree_problem(static_cast<int>(state.range(0)), 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weil::equivariant_hom_dim(p, weil::Exec::parallel));
}

void BM_EquivariantHomSerial(benchmark::State& state) {
  const auto p = weil::bidegree_problem(static_cast<int>(state.range(0)), 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weil::equivariant_hom_dim(p, weil::Exec::serial));
}

}  // namespace

BENCHMARK(BM_RrefKoszulParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefKoszulSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefKoszulDenseReference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandomParallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandomSerial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandomBareiss)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasicSubspaceParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasicSubspaceSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivariantHomParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivariantHomSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
