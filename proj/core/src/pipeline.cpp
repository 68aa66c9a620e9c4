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

#include "qedge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qedge/encoding.hpp"
#include "qedge/simulator.hpp"

namespace qedge::pipeline {

namespace {

template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
  if (end <= begin) return;
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, end - begin));
  if (n <= 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < end && !failed; i = next++) fn(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

bool is_one_dimensional(VariantKind kind) { return neuron::traits(kind).one_dimensional; }

std::vector<Direction> resolve_directions(VariantKind kind, std::span<const Direction> requested) {
  if (requested.empty()) return default_directions(kind);
  std::vector<Direction> dirs(requested.begin(), requested.end());
  if (kind == VariantKind::TwoD &&
      std::find(dirs.begin(), dirs.end(), Direction::Diagonal) != dirs.end()) {
    throw std::invalid_argument("TwoD variant has no diagonal mask");
  }
  return dirs;
}

}  // namespace

VariantConfig VariantConfig::for_kind(VariantKind kind) {
  VariantConfig config;
  config.kind = kind;
  config.shots = neuron::traits(kind).default_shots;
  return config;
}

std::vector<Direction> default_directions(VariantKind kind) {
  if (kind == VariantKind::TwoD) return {Direction::Horizontal, Direction::Vertical};
  return {neuron::kBlockOrder.begin(), neuron::kBlockOrder.end()};
}

JobPlan plan_jobs(std::span<const std::size_t> measurements, const JobLimits& limits) {
  if (limits.circuits_per_job == 0 || limits.measurements_per_job == 0) {
    throw std::invalid_argument("plan_jobs: limits must be >= 1");
  }
  JobPlan plan;
  plan.total_circuits = measurements.size();
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    const std::size_t m = measurements[i];
    if (m > limits.measurements_per_job) {
      throw std::invalid_argument("plan_jobs: circuit " + std::to_string(i) + " has " +
                                  std::to_string(m) + " measurements, above the per-job limit of " +
                                  std::to_string(limits.measurements_per_job));
    }
    plan.total_measurements += m;
    if (plan.jobs.empty() || plan.jobs.back().circuits == limits.circuits_per_job ||
        plan.jobs.back().measurements + m > limits.measurements_per_job) {
      plan.jobs.push_back({i, 0, 0});
    }
    ++plan.jobs.back().circuits;
    plan.jobs.back().measurements += m;
  }
  return plan;
}

JobPlan plan_jobs(std::span<const sim::Circuit> circuits, const JobLimits& limits) {
  std::vector<std::size_t> m;
  m.reserve(circuits.size());
  for (const auto& c : circuits) m.push_back(c.measure_count());
  return plan_jobs(m, limits);
}

std::vector<std::size_t> measurement_profile(VariantKind kind, int width, int height,
                                             std::span<const Direction> directions) {
  if (width < 1 || height < 1) throw std::invalid_argument("measurement_profile: bad size");
  const std::size_t pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const auto& tr = neuron::traits(kind);
  switch (kind) {
    case VariantKind::Std32T:
    case VariantKind::Std50:
    case VariantKind::TwoD:
      return std::vector<std::size_t>(resolve_directions(kind, directions).size() * pixels, 1);
    default: break;
  }
  const std::size_t per = static_cast<std::size_t>(tr.pixels_per_circuit);
  std::vector<std::size_t> out;
  for (std::size_t first = 0; first < pixels; first += per) {
    out.push_back(3 * std::min(per, pixels - first));
  }
  return out;
}

std::vector<double> evaluate_slots(const neuron::VariantCircuits& vc, const JobPlan& plan,
                                   bool exact, std::uint64_t shots, std::uint64_t seed,
                                   unsigned threads) {
  // Activation estimate for every clbit of every circuit.
  std::vector<std::vector<double>> per_circuit(vc.circuits.size());
  for (const Job& job : plan.jobs) {
    parallel_for(job.first_circuit, job.first_circuit + job.circuits, threads, [&](std::size_t i) {
      const sim::Circuit& circ = vc.circuits[i];
      std::vector<double> values(static_cast<std::size_t>(circ.num_clbits()), 0.0);
      if (exact) {
        const sim::Distribution dist = sim::run_exact(circ);
        for (int c = 0; c < circ.num_clbits(); ++c) {
          values[static_cast<std::size_t>(c)] = sim::prob_of(dist, c, vc.readout_value);
        }
      } else {
        const sim::CountsMap counts = sim::sample_counts(circ, shots, sim::derive_seed(seed, i));
        for (int c = 0; c < circ.num_clbits(); ++c) {
          values[static_cast<std::size_t>(c)] =
              sim::prob_of(sim::marginal_counts(counts, {c}), 0, vc.readout_value);
        }
      }
      per_circuit[i] = std::move(values);
    });
  }
  std::vector<double> out;
  out.reserve(vc.slots.size());
  for (const auto& slot : vc.slots) {
    out.push_back(per_circuit[slot.circuit][static_cast<std::size_t>(slot.clbit)]);
  }
  return out;
}

EdgeResult run_variant(const GrayImage& img, const VariantConfig& config) {
  if (config.shots < 1) throw std::invalid_argument("run_variant: shots must be >= 1");
  const std::vector<Direction> dirs = resolve_directions(config.kind, config.directions);

  const neuron::VariantCircuits vc = neuron::build_variant_circuits(config.kind, img, dirs);
  JobPlan plan = plan_jobs(vc.circuits, config.limits);
  const std::vector<double> values =
      evaluate_slots(vc, plan, config.exact, config.shots, config.seed, config.threads);

  std::vector<std::vector<double>> planes(dirs.size(), std::vector<double>(img.size(), 0.0));
  for (std::size_t s = 0; s < vc.slots.size(); ++s) {
    const auto& slot = vc.slots[s];
    auto it = std::find(dirs.begin(), dirs.end(), slot.direction);
    if (it == dirs.end()) continue;
    planes[static_cast<std::size_t>(it - dirs.begin())][img.index(slot.x, slot.y)] =
        std::clamp(values[s], 0.0, 1.0);
  }

  std::vector<DirectionImage> per_direction;
  std::vector<ProbabilityImage> images;
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    images.emplace_back(img.width(), img.height(), std::move(planes[d]));
    per_direction.push_back({dirs[d], images.back()});
  }
  ProbabilityImage combined = pixelwise_max(images);
  GrayImage gray = to_gray(combined);
  OtsuResult otsu = otsu_threshold(gray);

  std::optional<double> fidelity;
  if (config.with_reference) {
    fidelity = hellinger_fidelity(gray, reference_image(img, dirs, config.kind));
  }
  return EdgeResult{std::move(per_direction), std::move(combined), std::move(gray), otsu.threshold,
                    std::move(otsu.edges),   fidelity,            std::move(plan)};
}

GrayImage reference_image(const GrayImage& img, std::span<const Direction> directions,
                          VariantKind kind) {
  const std::vector<Direction> dirs = resolve_directions(kind, directions);
  std::vector<double> best(img.size(), 0.0);
  for (Direction d : dirs) {
    std::optional<enc::FilterMask> mask;
    if (!is_one_dimensional(kind)) mask = enc::mask_2d(d);
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        double p;
        if (mask) {
          const auto patch = extract_patch_2x2(img, x, y);
          p = neuron::overlap_probability(neuron::NeuronSpec(
              enc::gray_to_angle(std::span<const Gray>(patch)), mask->weights));
        } else {
          const auto [a, b] = extract_pair(img, x, y, d);
          p = neuron::analytic_probability(a, b);
        }
        auto& slot = best[img.index(x, y)];
        slot = std::max(slot, p);
      }
    }
  }
  for (double& p : best) p = std::clamp(p, 0.0, 1.0);
  return to_gray(ProbabilityImage(img.width(), img.height(), std::move(best)));
}

double hellinger_fidelity(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("hellinger_fidelity: length mismatch");
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) throw std::invalid_argument("hellinger_fidelity: negative weight");
    sp += p[i];
    sq += q[i];
  }
  if (sp <= 0.0 || sq <= 0.0) throw std::invalid_argument("hellinger_fidelity: empty distribution");
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
  bc /= std::sqrt(sp * sq);
  return std::min(1.0, bc * bc);
}

double hellinger_fidelity(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("hellinger_fidelity: images differ in size");
  }
  const Histogram ha = gray_histogram(a);
  const Histogram hb = gray_histogram(b);
  std::vector<double> p(ha.begin(), ha.end());
  std::vector<double> q(hb.begin(), hb.end());
  return hellinger_fidelity(p, q);
}

std::vector<FidelityRow> compare_variants(const GrayImage& img, std::span<const VariantKind> kinds,
                                          std::span<const std::uint64_t> seeds,
                                          const CompareOptions& options) {
  std::vector<FidelityRow> rows;
  for (VariantKind kind : kinds) {
    const std::vector<Direction> dirs = resolve_directions(kind, options.directions);
    const GrayImage reference = reference_image(img, dirs, kind);
    for (std::uint64_t seed : seeds) {
      VariantConfig config = VariantConfig::for_kind(kind);
      if (options.shots) config.shots = *options.shots;
      config.limits = options.limits;
      config.seed = seed;
      config.exact = options.exact;
      config.directions = dirs;
      config.threads = options.threads;
      const EdgeResult result = run_variant(img, config);
      rows.push_back({kind, seed, hellinger_fidelity(result.combined_gray, reference)});
    }
  }
  return rows;
}

}  // namespace qedge::pipeline
