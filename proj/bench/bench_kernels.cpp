/* Copyright 2026 The fixsim Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
// Optimized vs reference layer kernels on LeNet-sized layers.
//
//   bench_kernels --benchmark_filter=Conv
//
// The fast kernels use OpenMP across output rows; set OMP_NUM_THREADS to
// compare scaling. The reference kernels are serial.

#include <benchmark/benchmark.h>

#include <random>

#include "fixsim/engine/kernels.hpp"

namespace fixsim {
namespace {

FxTensor random_tensor(const Shape& shape, FxFormat fmt, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<std::int32_t> d(static_cast<std::int32_t>(fmt.min_raw()),
                                                static_cast<std::int32_t>(fmt.max_raw()));
  FxTensor t(shape, fmt);
  for (auto& v : t.raw().data()) v = d(gen);
  return t;
}

FxConfig bench_config(int bits, MacPosition pos, RoundingMethod r) {
  FxConfig cfg;
  cfg.format = FxFormat::narrow(bits / 2, bits - bits / 2);
  cfg.rounding = r;
  cfg.adjust = AdjustMethod::bc();
  cfg.position = pos;
  return cfg;
}

FixedLayer random_layer(const LayerSpec& spec, const FxConfig& cfg) {
  const FxTensor w = random_tensor(weight_shape(spec), cfg.format, 1);
  std::vector<wide_int> bias(element_count(bias_shape(spec)), 0);
  return make_fixed_layer(spec, w, std::move(bias));
}

// Second conv of LeNet: 14x14x6 -> 10x10x16 with a 5x5 kernel.
const ConvSpec kConv{5, 5, 6, 16, 1, Padding::kValid};
const FcSpec kFc{400, 84};

template <bool Fast>
void BM_Conv(benchmark::State& state) {
  const auto pos = static_cast<MacPosition>(state.range(0));
  const auto r = static_cast<RoundingMethod>(state.range(1));
  const FxConfig cfg = bench_config(8, pos, r);
  const FixedLayer layer = random_layer(kConv, cfg);
  const FxTensor x = random_tensor({14, 14, 6}, cfg.format, 2);
  const RngStream rng(3);
  for (auto _ : state) {
    LayerStats stats;
    FxTensor y = Fast ? conv2d(x, layer, cfg, rng, stats)
                      : conv2d_reference(x, layer, cfg, rng, stats);
    benchmark::DoNotOptimize(y.raw().data().data());
  }
  state.SetItemsProcessed(state.iterations() * 10 * 10 * 16 * 150);
  state.SetLabel(std::string(position_name(pos)) + "/" + std::string(rounding_name(r)));
}

template <bool Fast>
void BM_Fc(benchmark::State& state) {
  const auto pos = static_cast<MacPosition>(state.range(0));
  const auto r = static_cast<RoundingMethod>(state.range(1));
  const FxConfig cfg = bench_config(8, pos, r);
  const FixedLayer layer = random_layer(kFc, cfg);
  const FxTensor x = random_tensor({400}, cfg.format, 2);
  const RngStream rng(3);
  for (auto _ : state) {
    LayerStats stats;
    FxTensor y = Fast ? fc(x, layer, cfg, rng, stats) : fc_reference(x, layer, cfg, rng, stats);
    benchmark::DoNotOptimize(y.raw().data().data());
  }
  state.SetItemsProcessed(state.iterations() * 400 * 84);
  state.SetLabel(std::string(position_name(pos)) + "/" + std::string(rounding_name(r)));
}

void Args(benchmark::internal::Benchmark* b) {
  for (int pos : {0, 1}) {
    for (int r : {0, 1, 2}) b->Args({pos, r});
  }
}

BENCHMARK(BM_Conv<true>)->Name("Conv/fast")->Apply(Args)->UseRealTime();
BENCHMARK(BM_Conv<false>)->Name("Conv/reference")->Apply(Args)->UseRealTime();
BENCHMARK(BM_Fc<true>)->Name("Fc/fast")->Apply(Args)->UseRealTime();
BENCHMARK(BM_Fc<false>)->Name("Fc/reference")->Apply(Args)->UseRealTime();

}  // namespace
}  // namespace fixsim

BENCHMARK_MAIN();
