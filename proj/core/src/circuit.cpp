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

#include "qedge/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qedge::sim {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::Rz: return "rz";
    case GateKind::P: return "p";
    case GateKind::CX: return "cx";
    case GateKind::MCX: return "mcx";
    case GateKind::MCP: return "mcp";
    case GateKind::Measure: return "measure";
    case GateKind::Reset: return "reset";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

Circuit::Circuit(int num_qubits, int num_clbits) : num_qubits_(num_qubits), num_clbits_(num_clbits) {
  if (num_qubits < 1 || num_qubits > 24) {
    throw std::invalid_argument("Circuit: qubit count " + std::to_string(num_qubits) +
                                " outside [1, 24]");
  }
  if (num_clbits < 0 || num_clbits > 64) {
    throw std::invalid_argument("Circuit: clbit count " + std::to_string(num_clbits) +
                                " outside [0, 64]");
  }
}

std::size_t Circuit::measure_count() const {
  return static_cast<std::size_t>(std::count_if(
      ops_.begin(), ops_.end(), [](const GateOp& op) { return op.kind == GateKind::Measure; }));
}

Circuit& Circuit::mcx(std::vector<int> controls, int target) {
  controls.push_back(target);
  return append({GateKind::MCX, std::move(controls)});
}

Circuit& Circuit::mcp(std::vector<int> controls, int target, double angle) {
  controls.push_back(target);
  return append({GateKind::MCP, std::move(controls), angle});
}

Circuit& Circuit::append(GateOp op) {
  std::size_t expected = 0;
  switch (op.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::SX:
    case GateKind::Rz:
    case GateKind::P:
    case GateKind::Measure:
    case GateKind::Reset: expected = 1; break;
    case GateKind::CX: expected = 2; break;
    case GateKind::MCX:
    case GateKind::MCP:
    case GateKind::Barrier: expected = 0; break;
  }
  if (expected != 0 && op.qubits.size() != expected) {
    throw std::invalid_argument("Circuit: " + std::string(to_string(op.kind)) + " takes " +
                                std::to_string(expected) + " qubit(s)");
  }
  if ((op.kind == GateKind::MCX || op.kind == GateKind::MCP) && op.qubits.empty()) {
    throw std::invalid_argument("Circuit: controlled gate needs a target");
  }
  for (int q : op.qubits) {
    if (q < 0 || q >= num_qubits_) {
      throw std::out_of_range("Circuit: qubit " + std::to_string(q) + " outside register of " +
                              std::to_string(num_qubits_));
    }
  }
  std::vector<int> sorted = op.qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Circuit: repeated qubit in " + std::string(to_string(op.kind)));
  }
  if (op.kind == GateKind::Measure) {
    if (op.clbit < 0 || op.clbit >= num_clbits_) {
      throw std::out_of_range("Circuit: clbit " + std::to_string(op.clbit) +
                              " outside register of " + std::to_string(num_clbits_));
    }
  } else {
    op.clbit = -1;
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other, int qubit_offset, int clbit_offset) {
  for (GateOp op : other.ops()) {
    if (op.kind == GateKind::Barrier && op.qubits.empty()) {
      for (int q = 0; q < other.num_qubits(); ++q) op.qubits.push_back(q);
    }
    for (int& q : op.qubits) q += qubit_offset;
    if (op.kind == GateKind::Measure) op.clbit += clbit_offset;
    append(std::move(op));
  }
  return *this;
}

std::string Circuit::to_text() const {
  std::ostringstream out;
  out << "qubits " << num_qubits_ << " clbits " << num_clbits_ << '\n';
  for (const GateOp& op : ops_) {
    out << to_string(op.kind);
    if (op.kind == GateKind::Rz || op.kind == GateKind::P || op.kind == GateKind::MCP) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "(%.6f)", op.angle);
      out << buf;
    }
    for (int q : op.qubits) out << " q" << q;
    if (op.kind == GateKind::Measure) out << " -> c" << op.clbit;
    out << '\n';
  }
  return out.str();
}

}  // namespace qedge::sim
