// Copyright 2026 The qedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qedge/neuron.hpp"
#include "qedge/pipeline.hpp"
#include "qedge/samples.hpp"
#include "qedge/simulator.hpp"
#include "qedge/transpile.hpp"

namespace {

using namespace qedge;
using neuron::VariantKind;

void BM_ApplyGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sim::StateVector s(n);
  const sim::GateOp h{sim::GateKind::H, {n / 2}};
  const sim::GateOp ccp{sim::GateKind::MCP, {0, 1, n - 1}, 0.3};
  for (auto _ : state) {
    s.apply(h);
    s.apply(ccp);
    benchmark::DoNotOptimize(s[0]);
  }
  state.SetItemsProcessed(state.iterations() * 2);
}
BENCHMARK(BM_ApplyGate)->Arg(3)->Arg(9)->Arg(16);

void BM_RunExact(benchmark::State& state) {
  const auto kind = static_cast<VariantKind>(state.range(0));
  const auto vc = neuron::build_variant_circuits(kind, samples::gate_probe_image());
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_exact(vc.circuits.front()));
  state.SetLabel(std::string(neuron::to_string(kind)));
}
BENCHMARK(BM_RunExact)->DenseRange(0, 6);

void BM_SampleCounts(benchmark::State& state) {
  const auto kind = static_cast<VariantKind>(state.range(0));
  const auto vc = neuron::build_variant_circuits(kind, samples::gate_probe_image());
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sim::sample_counts(vc.circuits.front(), 32000, seed++));
  state.SetLabel(std::string(neuron::to_string(kind)));
}
BENCHMARK(BM_SampleCounts)->DenseRange(0, 6);

void BM_Transpile(benchmark::State& state) {
  const auto vc = neuron::build_variant_circuits(VariantKind::TwoD, samples::gate_probe_image());
  for (auto _ : state) {
    benchmark::DoNotOptimize(transpile::optimize(transpile::decompose(vc.circuits.front())));
  }
}
BENCHMARK(BM_Transpile);

void BM_RunVariantGray30(benchmark::State& state) {
  const auto kind = static_cast<VariantKind>(state.range(0));
  const GrayImage img = samples::gray_sample();
  auto config = pipeline::VariantConfig::for_kind(kind);
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline::run_variant(img, config));
  state.SetLabel(std::string(neuron::to_string(kind)));
}
BENCHMARK(BM_RunVariantGray30)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_Otsu(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Gray> px(256 * 256);
  for (auto& v : px) v = static_cast<Gray>(rng() & 0xFF);
  const GrayImage img(256, 256, std::move(px));
  for (auto _ : state) benchmark::DoNotOptimize(otsu_threshold(img));
}
BENCHMARK(BM_Otsu);

}  // namespace

BENCHMARK_MAIN();
