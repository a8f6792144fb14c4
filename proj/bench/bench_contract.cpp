#include <benchmark/benchmark.h>

#include <random>

#include "qhopf/tensor.hpp"

namespace {

using qhopf::Field;
using qhopf::KernelMode;
using qhopf::Leg;
using qhopf::Tensor;

Tensor random_tensor(const Field& f, std::vector<Leg> legs, std::uint64_t seed) {
  Tensor t(f, std::move(legs));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, f.reduce(qhopf::Scalar(static_cast<long>(rng() % 201) - 100)));
  return t;
}

Field field_for(int which) { return which == 0 ? Field::prime(101) : Field::rationals(); }

// [a,b,c] against a weight [b,c,k]: the shape of a Sweedler step that consumes two legs.
void BM_Contract(benchmark::State& state, KernelMode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Tensor x = random_tensor(f, {{"a", n}, {"b", n}, {"c", n}}, 1);
  const Tensor w = random_tensor(f, {{"b", n}, {"c", n}, {"k", n}}, 2);
  for (auto _ : state) {
    Tensor r = x.contract({"b", "c"}, w, {Leg{"k", n}}, mode);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(f.name());
}

void BM_Outer(benchmark::State& state, KernelMode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Tensor a = random_tensor(f, {{"a", n}, {"b", n}}, 3);
  const Tensor b = random_tensor(f, {{"c", n}, {"d", n}}, 4);
  for (auto _ : state) {
    Tensor r = Tensor::outer(a, b, mode);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(f.name());
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int field : {0, 1})
    for (int n : {8, 16, 32}) b->Args({n, field});
}

}  // namespace

BENCHMARK_CAPTURE(BM_Contract, parallel, KernelMode::parallel)->Apply(sizes)->UseRealTime();
BENCHMARK_CAPTURE(BM_Contract, reference, KernelMode::reference)->Apply(sizes)->UseRealTime();
BENCHMARK_CAPTURE(BM_Outer, parallel, KernelMode::parallel)->Apply(sizes)->UseRealTime();
BENCHMARK_CAPTURE(BM_Outer, reference, KernelMode::reference)->Apply(sizes)->UseRealTime();

BENCHMARK_MAIN();
