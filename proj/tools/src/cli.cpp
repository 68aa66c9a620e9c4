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

#include "qedge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qedge/pgm.hpp"
#include "qedge/pipeline.hpp"
#include "qedge/samples.hpp"

namespace qedge::cli {

namespace fs = std::filesystem;
using neuron::VariantKind;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string variant = "std50";
  std::string input;
  std::string out_dir = ".";
  std::string out;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = pipeline::kDefaultSeed;
  bool exact = false;
  std::string directions;
  std::size_t circuits_per_job = pipeline::JobLimits{}.circuits_per_job;
  std::size_t meas_per_job = pipeline::JobLimits{}.measurements_per_job;
  bool check = false;
  bool binary = false;
  unsigned threads = 0;
  int runs = 1;
  int width = 0;
  int height = 0;
  std::optional<std::size_t> circuits;
  std::string name;
  int size = 256;
};

VariantKind variant_or_throw(const std::string& name) {
  auto kind = neuron::parse_variant(name);
  if (!kind) {
    std::string known;
    for (VariantKind k : neuron::all_variants()) {
      if (!known.empty()) known += ", ";
      known += neuron::to_string(k);
    }
    throw UsageError("unknown variant '" + name + "' (expected one of " + known + ")");
  }
  return *kind;
}

std::vector<VariantKind> variant_list(const std::string& spec) {
  if (spec == "all") {
    auto v = neuron::one_dimensional_variants();
    return {v.begin(), v.end()};
  }
  std::vector<VariantKind> kinds;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) kinds.push_back(variant_or_throw(item));
  }
  if (kinds.empty()) throw UsageError("no variant given");
  return kinds;
}

std::vector<Direction> parse_directions(const std::string& s) {
  if (s.empty()) return {};
  if (s == "hv") return {Direction::Horizontal, Direction::Vertical};
  if (s == "hvd") return {Direction::Horizontal, Direction::Vertical, Direction::Diagonal};
  throw UsageError("--directions must be hv or hvd, got '" + s + "'");
}

pipeline::JobLimits limits_of(const Options& o) {
  if (o.circuits_per_job == 0 || o.meas_per_job == 0) throw UsageError("job limits must be >= 1");
  return {o.circuits_per_job, o.meas_per_job};
}

GrayImage input_image(const Options& o) {
  if (o.input.empty()) throw UsageError("--in is required");
  return load_pgm(o.input);
}

PgmFormat format_of(const Options& o) { return o.binary ? PgmFormat::Binary : PgmFormat::Ascii; }

void write_histogram_csv(std::ostream& os, const GrayImage& img) {
  const Histogram hist = gray_histogram(img);
  os << "bin,count\n";
  for (std::size_t b = 0; b < hist.size(); ++b) os << b << ',' << hist[b] << '\n';
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return os;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const GrayImage img = input_image(o);
  pipeline::VariantConfig config = pipeline::VariantConfig::for_kind(variant_or_throw(o.variant));
  if (o.shots) config.shots = *o.shots;
  config.seed = o.seed;
  config.exact = o.exact;
  config.directions = parse_directions(o.directions);
  config.limits = limits_of(o);
  config.threads = o.threads;

  const auto start = std::chrono::steady_clock::now();
  const pipeline::EdgeResult result = pipeline::run_variant(img, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  save_pgm(result.combined_gray, dir / "combined.pgm", format_of(o));
  std::vector<Gray> edge_px;
  edge_px.reserve(result.edges.size());
  for (std::uint8_t v : result.edges.data()) edge_px.push_back(v ? 255 : 0);
  save_pgm(GrayImage(img.width(), img.height(), std::move(edge_px)), dir / "edges.pgm",
           format_of(o));
  std::ofstream hist = open_out(dir / "histogram.csv");
  write_histogram_csv(hist, result.combined_gray);

  out << "variant " << neuron::to_string(config.kind) << ", circuits " << result.plan.total_circuits
      << ", jobs " << result.plan.jobs.size() << '\n';
  out << "threshold " << static_cast<int>(result.threshold) << '\n';
  out << "time " << elapsed.count() << " s\n";
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const GrayImage img = input_image(o);
  if (o.runs < 1) throw UsageError("--runs must be >= 1");
  const std::vector<VariantKind> kinds = variant_list(o.variant);
  std::vector<std::uint64_t> seeds;
  for (int r = 0; r < o.runs; ++r) seeds.push_back(o.seed + static_cast<std::uint64_t>(r));

  pipeline::CompareOptions options;
  options.exact = o.exact;
  options.shots = o.shots;
  options.limits = limits_of(o);
  options.directions = parse_directions(o.directions);
  options.threads = o.threads;
  const auto rows = pipeline::compare_variants(img, kinds, seeds, options);

  auto emit = [&](std::ostream& os) {
    os << "variant,seed,fidelity\n";
    os.precision(10);
    for (const auto& row : rows) {
      os << neuron::to_string(row.kind) << ',' << row.seed << ',' << row.fidelity << '\n';
    }
  };
  if (o.out == "-") {
    emit(out);
  } else {
    const fs::path path = o.out.empty() ? fs::path(o.out_dir) / "fidelity.csv" : fs::path(o.out);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os = open_out(path);
    emit(os);
    out << "wrote " << rows.size() << " rows to " << path.string() << '\n';
  }
  return 0;
}

int cmd_gates(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<VariantKind> kinds;
  if (o.variant.empty()) {
    auto all = neuron::all_variants();
    kinds.assign(all.begin(), all.end());
  } else {
    kinds = variant_list(o.variant);
  }
  int mismatches = 0;
  for (VariantKind kind : kinds) {
    const transpile::GateCounts counts = variant_gate_counts(kind);
    const int sx = counts.count(sim::GateKind::SX);
    const int rz = counts.count(sim::GateKind::Rz);
    out << neuron::to_string(kind) << ": SX: " << sx << ", Rz: " << rz << ", depth "
        << counts.depth << " (X: " << counts.count(sim::GateKind::X)
        << ", CX: " << counts.count(sim::GateKind::CX)
        << ", measure: " << counts.count(sim::GateKind::Measure)
        << ", reset: " << counts.count(sim::GateKind::Reset) << ")\n";
    if (!o.check) continue;
    const auto target = published_gate_target(kind);
    if (!target) continue;
    const bool ok = sx == target->sx && rz == target->rz &&
                    (!target->depth || *target->depth == counts.depth);
    if (!ok) {
      ++mismatches;
      err << neuron::to_string(kind) << ": expected SX: " << target->sx << ", Rz: " << target->rz;
      if (target->depth) err << ", depth " << *target->depth;
      err << '\n';
    }
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_plan(const Options& o, std::ostream& out) {
  const VariantKind kind = variant_or_throw(o.variant);
  const std::vector<Direction> dirs = parse_directions(o.directions);
  std::vector<std::size_t> profile;
  if (o.circuits) {
    profile.assign(*o.circuits,
                   static_cast<std::size_t>(neuron::traits(kind).measurements_per_circuit));
  } else {
    int w = o.width;
    int h = o.height;
    if (!o.input.empty()) {
      const GrayImage img = input_image(o);
      w = img.width();
      h = img.height();
    }
    if (w < 1 || h < 1) throw UsageError("plan needs --width/--height, --in or --circuits");
    profile = pipeline::measurement_profile(kind, w, h, dirs);
  }
  const pipeline::JobPlan plan = pipeline::plan_jobs(profile, limits_of(o));
  out << "variant " << neuron::to_string(kind) << '\n';
  out << "circuits " << plan.total_circuits << ", measurements " << plan.total_measurements
      << ", jobs " << plan.jobs.size() << '\n';
  for (std::size_t j = 0; j < plan.jobs.size(); ++j) {
    const auto& job = plan.jobs[j];
    out << "  job " << j << ": circuits [" << job.first_circuit << ", "
        << job.first_circuit + job.circuits << "), measurements " << job.measurements << '\n';
  }
  return 0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  GrayImage img = [&] {
    if (o.name == "binary") return samples::binary_sample();
    if (o.name == "gray") return samples::gray_sample();
    if (o.name == "house") return samples::house_scene(o.size);
    throw UsageError("--name must be binary, gray or house");
  }();
  if (o.out.empty() || o.out == "-") {
    write_pgm(out, img, format_of(o));
  } else {
    save_pgm(img, o.out, format_of(o));
  }
  return 0;
}

}  // namespace

std::optional<GateTarget> published_gate_target(VariantKind kind) {
  switch (kind) {
    case VariantKind::Std32T:
    case VariantKind::Std50: return GateTarget{2, 3, 6};
    case VariantKind::Seq50:
    case VariantKind::Para50: return GateTarget{6, 9, std::nullopt};
    case VariantKind::Para50_3pix: return GateTarget{18, 27, std::nullopt};
    case VariantKind::SeqPara50: return GateTarget{24, 36, std::nullopt};
    case VariantKind::TwoD: return std::nullopt;
  }
  return std::nullopt;
}

transpile::GateCounts variant_gate_counts(VariantKind kind) {
  const auto vc = neuron::build_variant_circuits(kind, samples::gate_probe_image());
  return transpile::gate_counts(transpile::optimize(transpile::decompose(vc.circuits.front())));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-neuron edge detection on a state-vector simulator", "qedge"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    sub->add_option("--circuits-per-job", o.circuits_per_job, "Circuit limit per job");
    sub->add_option("--meas-per-job", o.meas_per_job, "Measurement limit per job");
    sub->add_option("--directions", o.directions, "Direction set: hv or hvd");
  };

  auto* detect = app.add_subcommand("detect", "Detect edges in a PGM image");
  detect->add_option("--in", o.input, "Input PGM")->required();
  detect->add_option("--variant", o.variant, "Circuit variant");
  detect->add_option("--out-dir", o.out_dir, "Output directory");
  detect->add_option("--shots", o.shots, "Shots per circuit");
  detect->add_option("--seed", o.seed, "Master seed");
  detect->add_flag("--exact", o.exact, "Exact probabilities instead of sampling");
  detect->add_flag("--binary", o.binary, "Write P5 instead of P2");
  add_common(detect);

  auto* compare = app.add_subcommand("compare", "Fidelity table across variants and seeds");
  compare->add_option("--in", o.input, "Input PGM")->required();
  compare->add_option("--variant", o.variant, "Comma-separated variants or 'all'");
  compare->add_option("--runs", o.runs, "Seeds per variant, starting at --seed");
  compare->add_option("--out-dir", o.out_dir, "Directory for fidelity.csv");
  compare->add_option("--out", o.out, "CSV path, '-' for stdout");
  compare->add_option("--shots", o.shots, "Override every variant's shot count");
  compare->add_option("--seed", o.seed, "First seed");
  compare->add_flag("--exact", o.exact, "Exact probabilities instead of sampling");
  add_common(compare);

  auto* gates = app.add_subcommand("gates", "Basis gate counts per variant");
  std::string gate_variant;
  gates->add_option("--variant", gate_variant, "Comma-separated variants (default: all)");
  gates->add_flag("--check", o.check, "Fail if counts differ from the published ones");

  auto* plan = app.add_subcommand("plan", "Circuit and job counts");
  plan->add_option("--variant", o.variant, "Circuit variant");
  plan->add_option("--width", o.width, "Image width");
  plan->add_option("--height", o.height, "Image height");
  plan->add_option("--in", o.input, "Take the size from a PGM");
  plan->add_option("--circuits", o.circuits, "Explicit circuit count");
  add_common(plan);

  auto* sample = app.add_subcommand("sample", "Write a built-in test image");
  sample->add_option("--name", o.name, "binary, gray or house")->required();
  sample->add_option("--out", o.out, "Output PGM ('-' or empty for stdout)");
  sample->add_option("--size", o.size, "Side length of the house scene");
  sample->add_flag("--binary", o.binary, "Write P5 instead of P2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*detect) return cmd_detect(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*gates) {
      o.variant = gate_variant;
      return cmd_gates(o, out, err);
    }
    if (*plan) return cmd_plan(o, out);
    if (*sample) return cmd_sample(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qedge::cli
