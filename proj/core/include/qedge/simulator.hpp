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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qedge/circuit.hpp"

namespace qedge::sim {

using Amplitude = std::complex<double>;

/// Dense 2^n amplitude vector. Qubit 0 is the least significant bit of the
/// amplitude index.
class StateVector {
 public:
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

  /// Applies a unitary op in place. Throws std::invalid_argument for
  /// Measure/Reset and std::out_of_range for bad indices.
  void apply(const GateOp& op);

  double probability_of_one(int qubit) const;
  /// Projects `qubit` onto `outcome` and renormalizes. Throws if the outcome
  /// has zero probability.
  void collapse(int qubit, int outcome);

 private:
  void apply_matrix(int target, std::uint64_t control_mask, Amplitude m00, Amplitude m01,
                    Amplitude m10, Amplitude m11);
  void apply_phase(std::uint64_t mask, Amplitude phase);

  int num_qubits_;
  std::vector<Amplitude> amps_;
};

StateVector apply_gate(StateVector state, const GateOp& op);

/// Bitstring keyed maps; clbit 0 is the rightmost character.
using Distribution = std::map<std::string, double>;
using CountsMap = std::map<std::string, std::uint64_t>;

std::string to_bitstring(std::uint64_t bits, int width);

/// Exact outcome distribution over classical registers. Every Measure and
/// Reset branches the state; branches below 1e-14 probability are pruned.
Distribution run_exact(const Circuit& circ);

/// `shots` independent samples, reproducible for a given seed. Circuits whose
/// measurements are terminal are sampled from the final state; all others
/// follow trajectories, with the shots reaching each mid-circuit measurement
/// split binomially between its outcomes.
CountsMap sample_counts(const Circuit& circ, std::uint64_t shots, std::uint64_t seed);

/// Keeps the listed clbits (sorted ascending; result bit k is the k-th
/// smallest kept index) and sums over the rest.
CountsMap marginal_counts(const CountsMap& counts, std::vector<int> keep);
Distribution marginal_distribution(const Distribution& dist, std::vector<int> keep);

/// Relative frequency of `value` at clbit `bit`.
double prob_of(const CountsMap& counts, int bit, int value);
double prob_of(const Distribution& dist, int bit, int value);

/// Order-independent per-circuit seed from a master seed and circuit index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Row-major 2^n x 2^n matrix of a measurement-free circuit.
std::vector<Amplitude> unitary_of(const Circuit& circ);

}  // namespace qedge::sim
