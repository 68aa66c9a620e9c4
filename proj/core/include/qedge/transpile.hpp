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

#include <map>
#include <string>

#include "qedge/circuit.hpp"

namespace qedge::transpile {

/// A circuit restricted to {Rz, SX, X, CX} plus Measure, Reset and Barrier.
class BasisCircuit {
 public:
  /// Throws std::invalid_argument if `circ` uses a non-basis gate.
  explicit BasisCircuit(sim::Circuit circ);

  const sim::Circuit& circuit() const { return circ_; }
  bool operator==(const BasisCircuit&) const = default;

 private:
  sim::Circuit circ_;
};

bool is_basis_gate(sim::GateKind kind);

/// Rewrites every gate into the basis, equal to the source up to global
/// phase:
///   H      -> Rz(pi/2) SX Rz(pi/2)
///   P(t)   -> Rz(t)
///   CP     -> two CX and three phases
///   C2P    -> three CP and two CX
///   C2X    -> six-CX Toffoli with T/Tdg as Rz(+-pi/4)
/// More than two controls is rejected.
BasisCircuit decompose(const sim::Circuit& circ);

/// Peephole passes run to a fixed point, per qubit wire:
/// adjacent Rz merge (dropped when the sum is 0 mod 2pi), X X cancels,
/// X Rz(a) X becomes Rz(-a). Measure, Reset, Barrier and CX block merging.
BasisCircuit optimize(const BasisCircuit& circ);

struct GateCounts {
  std::map<std::string, int> by_kind;
  /// Longest dependency chain over qubits and clbits, counting every op
  /// except Barrier (measurements and resets count as one layer).
  int depth = 0;

  int count(sim::GateKind kind) const;
};

GateCounts gate_counts(const sim::Circuit& circ);
inline GateCounts gate_counts(const BasisCircuit& circ) { return gate_counts(circ.circuit()); }

/// Angle wrapped into (-pi, pi].
double wrap_angle(double angle);

}  // namespace qedge::transpile
