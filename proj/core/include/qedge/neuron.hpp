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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qedge/circuit.hpp"
#include "qedge/encoding.hpp"
#include "qedge/image.hpp"

namespace qedge::neuron {

/// Input angles and filter weights of one quantum neuron. The bias is fixed at
/// zero and the activation is the squared modulus of the state overlap.
struct NeuronSpec {
  enc::AngleVector input;
  enc::AngleVector weights;

  NeuronSpec(enc::AngleVector input, enc::AngleVector weights);
  int qubits() const { return input.qubits(); }
};

/// H^n followed by the diagonal phase unitary. Phases are taken relative to
/// input[0], so the prepared state equals the encoded input up to the global
/// phase e^{i input[0]}.
sim::Circuit build_input_unitary(const enc::AngleVector& input);

/// Inverse phase unitary (negated angles, reversed order), then H^n, then X^n.
/// After build_input_unitary the |1...1> amplitude is the overlap of the
/// weight and input states, up to global phase.
sim::Circuit build_weight_unitary(const enc::AngleVector& weights);

/// 2x2 patch neuron: two data qubits, ancilla on qubit 2 driven by a
/// doubly-controlled X, one clbit. P(clbit = 1) is the activation.
sim::Circuit build_2d_circuit(const NeuronSpec& spec);

/// Appends the two-pixel neuron gates on `qubit`:
/// H, P(t0), X, P(t1), P(-w1), X, P(-w0), H.
void append_1d_block(sim::Circuit& circ, int qubit, double t0, double t1, double w0, double w1);

/// Single-qubit two-pixel neuron with one measurement; P(clbit = 0) is the
/// activation.
sim::Circuit build_1d_circuit(const NeuronSpec& spec);

enum class VariantKind { Std32T, Std50, Seq50, Para50, Para50_3pix, SeqPara50, TwoD };

struct VariantTraits {
  std::string_view name;  // CLI spelling
  std::uint64_t default_shots;
  int qubits;
  int pixels_per_circuit;
  int measurements_per_circuit;
  bool one_dimensional;
};

const VariantTraits& traits(VariantKind kind);
std::optional<VariantKind> parse_variant(std::string_view name);
std::string_view to_string(VariantKind kind);
std::span<const VariantKind> all_variants();
/// The six two-pixel variants, in the order of the published comparison.
std::span<const VariantKind> one_dimensional_variants();

/// Block/clbit order inside packed circuits: diagonal, horizontal, vertical.
inline constexpr std::array<Direction, 3> kBlockOrder = {Direction::Diagonal,
                                                         Direction::Horizontal,
                                                         Direction::Vertical};
int block_index(Direction d);

/// Where one (pixel, direction) value is read out.
struct ReadoutSlot {
  std::size_t circuit;
  int clbit;
  int x;
  int y;
  Direction direction;
};

struct VariantCircuits {
  VariantKind kind;
  std::vector<sim::Circuit> circuits;
  std::vector<ReadoutSlot> slots;
  int readout_value;  // clbit value whose probability is the activation
};

/// Builds every circuit needed to filter `img` with the given variant.
///
/// Std32T/Std50 and TwoD emit one circuit per (direction, pixel), direction
/// major. Packed variants always carry all three directions:
///   Seq50        1 qubit, blocks d/h/v in sequence, Measure + Reset after each
///   Para50       3 qubits, qubit/clbit k = block k
///   Para50_3pix  9 qubits, pixel slot s on qubits 3s..3s+2
///   SeqPara50    2 qubits, slots 0,1 in sequence on qubit 0 and 2,3 on qubit 1
/// Pixels are visited in raster order; clbit = 3 * slot + block.
/// `directions` only restricts the Std and TwoD variants; it defaults to
/// {h, v, d} for 1-D kinds and {h, v} for TwoD.
VariantCircuits build_variant_circuits(VariantKind kind, const GrayImage& img,
                                       std::span<const Direction> directions = {});

/// Closed form for the two-pixel neuron: |e^{i l1} + e^{i l0}|^2 / 4 with
/// l_k = input[k] - weights[k].
double analytic_probability(const NeuronSpec& spec);
/// Same, for gray pixel values and the (0, pi) derivative mask.
double analytic_probability(Gray first, Gray second);

/// |<weights|input>|^2 for a patch of any power-of-two size.
double overlap_probability(const NeuronSpec& spec);

}  // namespace qedge::neuron
