// Copyright 2026 The fuzzdenoise Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fuzzdenoise/denoiser.hpp"
#include "fuzzdenoise/detector.hpp"
#include "fuzzdenoise/median.hpp"
#include "fuzzdenoise/noise.hpp"

namespace fuzzdenoise {
namespace {

GrayImage smooth_image(std::size_t side) {
  GrayImage img(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      img.at(r, c) = static_cast<std::uint8_t>(40 + (r * 90 + c * 60) / side);
    }
  }
  return img;
}

GrayImage noisy_image(std::size_t side, double level) {
  return inject_sap(smooth_image(side), {level, 1234, 0.5});
}

// Args: side, noise level in percent.
void BM_DenoiseRelaxed(benchmark::State& state) {
  const GrayImage noisy = noisy_image(state.range(0), state.range(1) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(denoise_image(noisy, {}));
  state.SetItemsProcessed(state.iterations() * noisy.size());
}
BENCHMARK(BM_DenoiseRelaxed)
    ->ArgsProduct({{128, 256}, {20, 50, 80}})
    ->Unit(benchmark::kMillisecond);

void BM_DenoiseStrict(benchmark::State& state) {
  const GrayImage noisy = noisy_image(state.range(0), state.range(1) / 100.0);
  FilterConfig cfg;
  cfg.detector.mode = ThresholdMode::kStrict;
  for (auto _ : state) benchmark::DoNotOptimize(denoise_image(noisy, cfg));
  state.SetItemsProcessed(state.iterations() * noisy.size());
}
BENCHMARK(BM_DenoiseStrict)->ArgsProduct({{64}, {20, 80}})->Unit(benchmark::kMillisecond);

void BM_DenoiseThreads(benchmark::State& state) {
  const GrayImage noisy = noisy_image(512, 0.5);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(denoise_image(noisy, {}, threads));
  state.SetItemsProcessed(state.iterations() * noisy.size());
}
BENCHMARK(BM_DenoiseThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Median(benchmark::State& state) {
  const GrayImage noisy = noisy_image(state.range(0), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(median_filter(noisy, 1));
  state.SetItemsProcessed(state.iterations() * noisy.size());
}
BENCHMARK(BM_Median)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DetectWindow(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const GrayImage noisy = noisy_image(32, 0.5);
  const Window win = extract_window(noisy, 16, 16, half);
  for (auto _ : state) {
    if (compute_spread(win.pixels, compute_means(win.sorted), 2.0).sigma > 1e-4) {
      benchmark::DoNotOptimize(detect(win, {}));
    }
  }
}
BENCHMARK(BM_DetectWindow)->Arg(1)->Arg(2)->Arg(5);

void BM_InjectNoise(benchmark::State& state) {
  const GrayImage clean = smooth_image(512);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inject_sap(clean, {0.5, seed++, 0.5}));
}
BENCHMARK(BM_InjectNoise)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fuzzdenoise

BENCHMARK_MAIN();
