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

#include "qedge/neuron.hpp"

#include <algorithm>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qedge::neuron {

using sim::Circuit;

NeuronSpec::NeuronSpec(enc::AngleVector in, enc::AngleVector w)
    : input(std::move(in)), weights(std::move(w)) {
  if (input.size() != weights.size()) {
    throw std::invalid_argument("NeuronSpec: input has " + std::to_string(input.size()) +
                                " angles but weights have " + std::to_string(weights.size()));
  }
}

namespace {

// Phase e^{i angle} on basis state |j> of an n-qubit register: X-gates select
// the state, a multi-controlled phase applies it, the X-gates are undone.
void append_basis_phase(Circuit& circ, int n, std::size_t j, double angle) {
  std::vector<int> flips;
  for (int q = 0; q < n; ++q) {
    if (!(j >> q & 1U)) flips.push_back(q);
  }
  for (int q : flips) circ.x(q);
  if (n == 1) {
    circ.p(0, angle);
  } else {
    std::vector<int> controls;
    for (int q = 0; q + 1 < n; ++q) controls.push_back(q);
    circ.mcp(std::move(controls), n - 1, angle);
  }
  for (int q : flips) circ.x(q);
}

const VariantTraits kTraits[] = {
    {"std32t", 32000, 1, 1, 1, true},     {"std50", 50, 1, 1, 1, true},
    {"seq50", 50, 1, 1, 3, true},         {"para50", 50, 3, 1, 3, true},
    {"para50-3pix", 50, 9, 3, 9, true},   {"seqpara50", 50, 2, 4, 12, true},
    {"twod", 32000, 3, 1, 1, false},
};

constexpr VariantKind kAll[] = {VariantKind::Std32T,      VariantKind::Std50,
                                VariantKind::Seq50,       VariantKind::Para50,
                                VariantKind::Para50_3pix, VariantKind::SeqPara50,
                                VariantKind::TwoD};

constexpr std::array<Direction, 3> kDefault1d = kBlockOrder;
constexpr std::array<Direction, 2> kDefault2d = {Direction::Horizontal, Direction::Vertical};

constexpr double kPi = std::numbers::pi;

struct PixelPair {
  double first;
  double second;
};

PixelPair pair_angles(const GrayImage& img, int x, int y, Direction d) {
  const auto [a, b] = extract_pair(img, x, y, d);
  return {enc::gray_to_angle(a), enc::gray_to_angle(b)};
}

void append_pixel_blocks(Circuit& circ, const GrayImage& img, int x, int y, int qubit_of_block[3],
                         bool sequential, int clbit_base) {
  for (int b = 0; b < 3; ++b) {
    const PixelPair t = pair_angles(img, x, y, kBlockOrder[b]);
    append_1d_block(circ, qubit_of_block[b], t.first, t.second, 0.0, kPi);
    if (sequential) {
      circ.measure(qubit_of_block[b], clbit_base + b);
      circ.reset(qubit_of_block[b]);
    }
  }
}

}  // namespace

Circuit build_input_unitary(const enc::AngleVector& input) {
  const int n = input.qubits();
  Circuit circ(n, 0);
  for (int q = 0; q < n; ++q) circ.h(q);
  for (std::size_t j = 1; j < input.size(); ++j) {
    append_basis_phase(circ, n, j, input[j] - input[0]);
  }
  return circ;
}

Circuit build_weight_unitary(const enc::AngleVector& weights) {
  const int n = weights.qubits();
  Circuit circ(n, 0);
  for (std::size_t j = weights.size() - 1; j >= 1; --j) {
    append_basis_phase(circ, n, j, -(weights[j] - weights[0]));
  }
  for (int q = 0; q < n; ++q) circ.h(q);
  for (int q = 0; q < n; ++q) circ.x(q);
  return circ;
}

Circuit build_2d_circuit(const NeuronSpec& spec) {
  if (spec.input.size() != 4) {
    throw std::invalid_argument("build_2d_circuit: expected 4 angles, got " +
                                std::to_string(spec.input.size()));
  }
  Circuit circ(3, 1);
  circ.append(build_input_unitary(spec.input));
  circ.append(build_weight_unitary(spec.weights));
  circ.mcx({0, 1}, 2);
  circ.measure(2, 0);
  return circ;
}

void append_1d_block(Circuit& circ, int qubit, double t0, double t1, double w0, double w1) {
  circ.h(qubit);
  circ.p(qubit, t0);
  circ.x(qubit);
  circ.p(qubit, t1);
  circ.p(qubit, -w1);
  circ.x(qubit);
  circ.p(qubit, -w0);
  circ.h(qubit);
}

Circuit build_1d_circuit(const NeuronSpec& spec) {
  if (spec.input.size() != 2) {
    throw std::invalid_argument("build_1d_circuit: expected 2 angles, got " +
                                std::to_string(spec.input.size()));
  }
  Circuit circ(1, 1);
  append_1d_block(circ, 0, spec.input[0], spec.input[1], spec.weights[0], spec.weights[1]);
  circ.measure(0, 0);
  return circ;
}

const VariantTraits& traits(VariantKind kind) { return kTraits[static_cast<int>(kind)]; }

std::optional<VariantKind> parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(lower.begin(), lower.end(), '_', '-');
  for (VariantKind k : kAll) {
    if (traits(k).name == lower) return k;
  }
  return std::nullopt;
}

std::string_view to_string(VariantKind kind) { return traits(kind).name; }

std::span<const VariantKind> all_variants() { return kAll; }

std::span<const VariantKind> one_dimensional_variants() { return std::span(kAll).first(6); }

int block_index(Direction d) {
  switch (d) {
    case Direction::Diagonal: return 0;
    case Direction::Horizontal: return 1;
    case Direction::Vertical: return 2;
  }
  return -1;
}

VariantCircuits build_variant_circuits(VariantKind kind, const GrayImage& img,
                                       std::span<const Direction> directions) {
  VariantCircuits out{kind, {}, {}, kind == VariantKind::TwoD ? 1 : 0};
  const int w = img.width();
  const int h = img.height();
  const std::size_t pixels = img.size();

  switch (kind) {
    case VariantKind::Std32T:
    case VariantKind::Std50: {
      if (directions.empty()) directions = kDefault1d;
      out.circuits.reserve(directions.size() * pixels);
      for (Direction d : directions) {
        for (int y = 0; y < h; ++y) {
          for (int x = 0; x < w; ++x) {
            const PixelPair t = pair_angles(img, x, y, d);
            Circuit circ(1, 1);
            append_1d_block(circ, 0, t.first, t.second, 0.0, kPi);
            circ.measure(0, 0);
            out.slots.push_back({out.circuits.size(), 0, x, y, d});
            out.circuits.push_back(std::move(circ));
          }
        }
      }
      break;
    }
    case VariantKind::TwoD: {
      if (directions.empty()) directions = kDefault2d;
      out.circuits.reserve(directions.size() * pixels);
      for (Direction d : directions) {
        const enc::FilterMask mask = enc::mask_2d(d);
        for (int y = 0; y < h; ++y) {
          for (int x = 0; x < w; ++x) {
            const auto patch = extract_patch_2x2(img, x, y);
            NeuronSpec spec(enc::gray_to_angle(std::span<const Gray>(patch)), mask.weights);
            out.slots.push_back({out.circuits.size(), 0, x, y, d});
            out.circuits.push_back(build_2d_circuit(spec));
          }
        }
      }
      break;
    }
    case VariantKind::Seq50:
    case VariantKind::Para50:
    case VariantKind::Para50_3pix:
    case VariantKind::SeqPara50: {
      const VariantTraits& tr = traits(kind);
      const std::size_t per = static_cast<std::size_t>(tr.pixels_per_circuit);
      out.circuits.reserve((pixels + per - 1) / per);
      for (std::size_t first = 0; first < pixels; first += per) {
        const std::size_t count = std::min(per, pixels - first);
        Circuit circ(tr.qubits, 3 * static_cast<int>(per));
        std::vector<std::pair<int, int>> terminal;  // qubit, clbit
        for (std::size_t s = 0; s < count; ++s) {
          const int x = static_cast<int>((first + s) % static_cast<std::size_t>(w));
          const int y = static_cast<int>((first + s) / static_cast<std::size_t>(w));
          const int slot = static_cast<int>(s);
          int qubits[3];
          bool sequential = false;
          switch (kind) {
            case VariantKind::Seq50:
              qubits[0] = qubits[1] = qubits[2] = 0;
              sequential = true;
              break;
            case VariantKind::SeqPara50:
              qubits[0] = qubits[1] = qubits[2] = slot / 2;
              sequential = true;
              break;
            default:
              for (int b = 0; b < 3; ++b) qubits[b] = 3 * slot + b;
              break;
          }
          append_pixel_blocks(circ, img, x, y, qubits, sequential, 3 * slot);
          for (int b = 0; b < 3; ++b) {
            if (!sequential) terminal.emplace_back(qubits[b], 3 * slot + b);
            out.slots.push_back({out.circuits.size(), 3 * slot + b, x, y, kBlockOrder[b]});
          }
        }
        for (auto [q, c] : terminal) circ.measure(q, c);
        out.circuits.push_back(std::move(circ));
      }
      break;
    }
  }
  return out;
}

double analytic_probability(const NeuronSpec& spec) {
  if (spec.input.size() != 2) {
    throw std::invalid_argument("analytic_probability: expected 2 angles");
  }
  const std::complex<double> i1{0.0, 1.0};
  const double l0 = spec.input[0] - spec.weights[0];
  const double l1 = spec.input[1] - spec.weights[1];
  return std::norm(std::exp(i1 * l1) + std::exp(i1 * l0)) / 4.0;
}

double analytic_probability(Gray first, Gray second) {
  return analytic_probability(
      NeuronSpec({enc::gray_to_angle(first), enc::gray_to_angle(second)}, {0.0, kPi}));
}

double overlap_probability(const NeuronSpec& spec) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < spec.input.size(); ++j) {
    sum += std::polar(1.0, spec.input[j] - spec.weights[j]);
  }
  const double n = static_cast<double>(spec.input.size());
  return std::norm(sum) / (n * n);
}

}  // namespace qedge::neuron
