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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qedge/circuit.hpp"
#include "qedge/image.hpp"
#include "qedge/neuron.hpp"

namespace qedge::pipeline {

using neuron::VariantKind;

/// Seed used when none is given, so documented commands reproduce.
inline constexpr std::uint64_t kDefaultSeed = 20211115;

/// Per-job backend limits; measurements are counted as Measure ops per
/// circuit, summed over the job.
struct JobLimits {
  std::size_t circuits_per_job = 300;
  std::size_t measurements_per_job = 16000;
};

struct VariantConfig {
  VariantKind kind = VariantKind::Std50;
  std::uint64_t shots = 50;
  JobLimits limits;
  std::uint64_t seed = kDefaultSeed;
  /// Use exact outcome probabilities instead of sampling.
  bool exact = false;
  /// Directions combined into the output. Empty means {h, v, d} for the
  /// two-pixel variants and {h, v} for TwoD.
  std::vector<Direction> directions;
  /// Also score the output against reference_image.
  bool with_reference = false;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  /// Defaults for `kind`, including its published shot count.
  static VariantConfig for_kind(VariantKind kind);
};

std::vector<Direction> default_directions(VariantKind kind);

struct Job {
  std::size_t first_circuit;
  std::size_t circuits;
  std::size_t measurements;
};

struct JobPlan {
  std::vector<Job> jobs;
  std::size_t total_circuits = 0;
  std::size_t total_measurements = 0;
};

/// Greedy in-order packing: each job takes circuits until the next one would
/// break either limit. Throws std::invalid_argument if a single circuit
/// exceeds the measurement limit or a limit is zero.
JobPlan plan_jobs(std::span<const std::size_t> measurements_per_circuit, const JobLimits& limits);
JobPlan plan_jobs(std::span<const sim::Circuit> circuits, const JobLimits& limits);

/// Measurement count of every circuit build_variant_circuits would emit for a
/// width x height image, without building the circuits.
std::vector<std::size_t> measurement_profile(VariantKind kind, int width, int height,
                                             std::span<const Direction> directions = {});

struct DirectionImage {
  Direction direction;
  ProbabilityImage image;
};

struct EdgeResult {
  std::vector<DirectionImage> per_direction;
  ProbabilityImage combined;
  GrayImage combined_gray;
  Gray threshold;
  BinaryImage edges;
  std::optional<double> fidelity;
  JobPlan plan;
};

EdgeResult run_variant(const GrayImage& img, const VariantConfig& config);

/// Analytic filter response: per-direction closed form (overlap formula for
/// TwoD), pixel-wise maximum, gray scaled.
GrayImage reference_image(const GrayImage& img, std::span<const Direction> directions = {},
                          VariantKind kind = VariantKind::Std50);

/// (sum_j sqrt(p_j q_j))^2 after normalizing both inputs to unit sum.
double hellinger_fidelity(std::span<const double> p, std::span<const double> q);
/// Fidelity of the two normalized 256-bin gray histograms.
double hellinger_fidelity(const GrayImage& a, const GrayImage& b);

struct FidelityRow {
  VariantKind kind;
  std::uint64_t seed;
  double fidelity;
};

struct CompareOptions {
  bool exact = false;
  /// Overrides every variant's default shot count when set.
  std::optional<std::uint64_t> shots;
  JobLimits limits;
  std::vector<Direction> directions;
  unsigned threads = 0;
};

/// One row per (kind, seed): fidelity of the sampled output against the
/// variant's reference image.
std::vector<FidelityRow> compare_variants(const GrayImage& img, std::span<const VariantKind> kinds,
                                          std::span<const std::uint64_t> seeds,
                                          const CompareOptions& options = {});

/// Per-slot activation estimates in slot order of `circuits`, using the exact
/// distribution or `shots` samples with per-circuit derived seeds.
std::vector<double> evaluate_slots(const neuron::VariantCircuits& circuits, const JobPlan& plan,
                                   bool exact, std::uint64_t shots, std::uint64_t seed,
                                   unsigned threads = 0);

}  // namespace qedge::pipeline
