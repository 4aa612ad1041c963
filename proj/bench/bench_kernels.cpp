#include <benchmark/benchmark.h>

#include "iwahori/bernstein.hpp"
#include "iwahori/lattice_models.hpp"
#include "iwahori/parallel.hpp"

using namespace iwahori;

namespace {

struct Operands {
  std::shared_ptr<const HeckeAlgebra> algebra;
  HeckeElement a, b;
};

const Operands& operands() {
  static const Operands ops = [] {
    Operands o;
    o.algebra = std::make_shared<const HeckeAlgebra>(RootDatum::build(GroupKind::GL, 3));
    Bernstein bern(o.algebra);
    o.a = bern.z({2, 1, 0});
    o.b = bern.z({2, 0, 0});
    return o;
  }();
  return ops;
}

void BM_HeckeMultiplySerial(benchmark::State& state) {
  const Operands& o = operands();
  for (auto _ : state) benchmark::DoNotOptimize(o.algebra->multiply_serial(o.a, o.b));
}

void BM_HeckeMultiplyParallel(benchmark::State& state) {
  const Operands& o = operands();
  parallel::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(o.algebra->multiply_parallel(o.a, o.b));
}

LatticeModelParams lattice_params() {
  LatticeModelParams p;
  p.d = 3;
  p.r = 0;
  p.n_minus = -1;
  p.n_plus = 1;
  p.q = 2;
  return p;
}

void BM_EnumerateSerial(benchmark::State& state) {
  LatticeModel m(lattice_params());
  for (auto _ : state) benchmark::DoNotOptimize(m.enumerate_points_serial(default_budget()));
}

void BM_EnumerateParallel(benchmark::State& state) {
  LatticeModel m(lattice_params());
  parallel::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.enumerate_points(default_budget()));
}

}  // namespace

BENCHMARK(BM_HeckeMultiplySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeMultiplyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
