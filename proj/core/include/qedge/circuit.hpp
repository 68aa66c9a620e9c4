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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qedge::sim {

enum class GateKind {
  H,
  X,
  SX,
  Rz,
  P,
  CX,
  MCX,  // multi-controlled X: controls..., target
  MCP,  // multi-controlled phase: controls..., target
  Measure,
  Reset,
  Barrier,
};

std::string_view to_string(GateKind kind);

/// One circuit instruction. For controlled kinds the target is the last entry
/// of `qubits`; Measure writes `clbit`; angles are in radians.
struct GateOp {
  GateKind kind;
  std::vector<int> qubits;
  double angle = 0.0;
  int clbit = -1;

  int target() const { return qubits.back(); }
  bool is_unitary() const {
    return kind != GateKind::Measure && kind != GateKind::Reset && kind != GateKind::Barrier;
  }

  bool operator==(const GateOp&) const = default;
};

class Circuit {
 public:
  Circuit(int num_qubits, int num_clbits);

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  std::size_t measure_count() const;

  Circuit& h(int q) { return append({GateKind::H, {q}}); }
  Circuit& x(int q) { return append({GateKind::X, {q}}); }
  Circuit& sx(int q) { return append({GateKind::SX, {q}}); }
  Circuit& rz(int q, double angle) { return append({GateKind::Rz, {q}, angle}); }
  Circuit& p(int q, double angle) { return append({GateKind::P, {q}, angle}); }
  Circuit& cx(int control, int target) { return append({GateKind::CX, {control, target}}); }
  Circuit& mcx(std::vector<int> controls, int target);
  Circuit& mcp(std::vector<int> controls, int target, double angle);
  Circuit& measure(int q, int clbit) { return append({GateKind::Measure, {q}, 0.0, clbit}); }
  Circuit& reset(int q) { return append({GateKind::Reset, {q}}); }
  /// Empty qubit list means all qubits.
  Circuit& barrier(std::vector<int> qubits = {}) {
    return append({GateKind::Barrier, std::move(qubits)});
  }

  /// Validates indices and arity, then appends.
  Circuit& append(GateOp op);
  /// Appends every op of `other`, shifting qubit and clbit indices.
  Circuit& append(const Circuit& other, int qubit_offset = 0, int clbit_offset = 0);

  /// One op per line, e.g. "rz(1.570796) q0" or "measure q0 -> c1".
  /// Debugging aid only.
  std::string to_text() const;

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  int num_clbits_;
  std::vector<GateOp> ops_;
};

}  // namespace qedge::sim
