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

#include "qedge/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qedge::transpile {

using sim::Circuit;
using sim::GateKind;
using sim::GateOp;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityAngle = 1e-12;

bool is_identity_angle(double a) { return std::abs(wrap_angle(a)) < kIdentityAngle; }

void emit_cp(Circuit& out, int c, int t, double theta) {
  out.rz(c, theta / 2);
  out.cx(c, t);
  out.rz(t, -theta / 2);
  out.cx(c, t);
  out.rz(t, theta / 2);
}

void emit_c2p(Circuit& out, int c0, int c1, int t, double theta) {
  emit_cp(out, c1, t, theta / 2);
  out.cx(c0, c1);
  emit_cp(out, c1, t, -theta / 2);
  out.cx(c0, c1);
  emit_cp(out, c0, t, theta / 2);
}

void emit_h(Circuit& out, int q) {
  out.rz(q, kPi / 2);
  out.sx(q);
  out.rz(q, kPi / 2);
}

void emit_toffoli(Circuit& out, int a, int b, int t) {
  const double T = kPi / 4;
  emit_h(out, t);
  out.cx(b, t);
  out.rz(t, -T);
  out.cx(a, t);
  out.rz(t, T);
  out.cx(b, t);
  out.rz(t, -T);
  out.cx(a, t);
  out.rz(b, T);
  out.rz(t, T);
  emit_h(out, t);
  out.cx(a, b);
  out.rz(a, T);
  out.rz(b, -T);
  out.cx(a, b);
}

// Single forward pass of the peephole rules. Each qubit keeps a stack of the
// live output ops that touch it.
class PeepholePass {
 public:
  explicit PeepholePass(const Circuit& in) : in_(in), wires_(static_cast<std::size_t>(in.num_qubits())) {}

  Circuit run() {
    for (const GateOp& op : in_.ops()) feed(op);
    Circuit out(in_.num_qubits(), in_.num_clbits());
    for (auto& op : ops_) {
      if (op) out.append(std::move(*op));
    }
    return out;
  }

 private:
  std::optional<GateOp>* top(int q, std::size_t depth = 0) {
    auto& w = wires_[static_cast<std::size_t>(q)];
    if (w.size() <= depth) return nullptr;
    return &ops_[w[w.size() - 1 - depth]];
  }

  bool top_is(int q, GateKind kind, std::size_t depth = 0) {
    auto* t = top(q, depth);
    return t && *t && (*t)->kind == kind;
  }

  void pop(int q) {
    auto& w = wires_[static_cast<std::size_t>(q)];
    ops_[w.back()].reset();
    w.pop_back();
  }

  void push(GateOp op) {
    std::vector<int> qubits = op.qubits;
    if (op.kind == GateKind::Barrier && qubits.empty()) {
      for (int q = 0; q < in_.num_qubits(); ++q) qubits.push_back(q);
    }
    ops_.emplace_back(std::move(op));
    for (int q : qubits) wires_[static_cast<std::size_t>(q)].push_back(ops_.size() - 1);
  }

  void feed_rz(int q, double angle) {
    if (top_is(q, GateKind::Rz)) {
      auto& prev = **top(q);
      const double merged = wrap_angle(prev.angle + angle);
      if (is_identity_angle(merged)) {
        pop(q);
      } else {
        prev.angle = merged;
      }
      return;
    }
    if (is_identity_angle(angle)) return;
    push({GateKind::Rz, {q}, wrap_angle(angle)});
  }

  void feed(const GateOp& op) {
    switch (op.kind) {
      case GateKind::Rz: feed_rz(op.target(), op.angle); return;
      case GateKind::X: {
        const int q = op.target();
        if (top_is(q, GateKind::X)) {
          pop(q);
        } else if (top_is(q, GateKind::Rz) && top_is(q, GateKind::X, 1)) {
          const double a = (**top(q)).angle;
          pop(q);
          pop(q);
          feed_rz(q, -a);
        } else {
          push(op);
        }
        return;
      }
      default: push(op); return;
    }
  }

  const Circuit& in_;
  std::vector<std::optional<GateOp>> ops_;
  std::vector<std::vector<std::size_t>> wires_;
};

}  // namespace

double wrap_angle(double angle) {
  double a = std::fmod(angle, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  if (a > kPi) a -= 2 * kPi;
  return a;
}

bool is_basis_gate(GateKind kind) {
  switch (kind) {
    case GateKind::Rz:
    case GateKind::SX:
    case GateKind::X:
    case GateKind::CX:
    case GateKind::Measure:
    case GateKind::Reset:
    case GateKind::Barrier: return true;
    default: return false;
  }
}

BasisCircuit::BasisCircuit(Circuit circ) : circ_(std::move(circ)) {
  for (const GateOp& op : circ_.ops()) {
    if (!is_basis_gate(op.kind)) {
      throw std::invalid_argument("BasisCircuit: non-basis gate " +
                                  std::string(sim::to_string(op.kind)));
    }
  }
}

BasisCircuit decompose(const Circuit& circ) {
  Circuit out(circ.num_qubits(), circ.num_clbits());
  for (const GateOp& op : circ.ops()) {
    const std::size_t controls = op.qubits.empty() ? 0 : op.qubits.size() - 1;
    switch (op.kind) {
      case GateKind::H: emit_h(out, op.target()); break;
      case GateKind::P: out.rz(op.target(), op.angle); break;
      case GateKind::MCP:
        if (controls == 0) {
          out.rz(op.target(), op.angle);
        } else if (controls == 1) {
          emit_cp(out, op.qubits[0], op.target(), op.angle);
        } else if (controls == 2) {
          emit_c2p(out, op.qubits[0], op.qubits[1], op.target(), op.angle);
        } else {
          throw std::invalid_argument("decompose: mcp with " + std::to_string(controls) +
                                      " controls is not supported (max 2)");
        }
        break;
      case GateKind::MCX:
        if (controls == 0) {
          out.x(op.target());
        } else if (controls == 1) {
          out.cx(op.qubits[0], op.target());
        } else if (controls == 2) {
          emit_toffoli(out, op.qubits[0], op.qubits[1], op.target());
        } else {
          throw std::invalid_argument("decompose: mcx with " + std::to_string(controls) +
                                      " controls is not supported (max 2)");
        }
        break;
      default: out.append(op); break;
    }
  }
  return BasisCircuit(std::move(out));
}

BasisCircuit optimize(const BasisCircuit& circ) {
  Circuit current = circ.circuit();
  while (true) {
    Circuit next = PeepholePass(current).run();
    if (next == current) break;
    current = std::move(next);
  }
  return BasisCircuit(std::move(current));
}

int GateCounts::count(GateKind kind) const {
  auto it = by_kind.find(std::string(sim::to_string(kind)));
  return it == by_kind.end() ? 0 : it->second;
}

GateCounts gate_counts(const Circuit& circ) {
  GateCounts counts;
  std::vector<int> qlevel(static_cast<std::size_t>(circ.num_qubits()), 0);
  std::vector<int> clevel(static_cast<std::size_t>(circ.num_clbits()), 0);
  for (const GateOp& op : circ.ops()) {
    ++counts.by_kind[std::string(sim::to_string(op.kind))];
    if (op.kind == GateKind::Barrier) continue;
    int level = 0;
    for (int q : op.qubits) level = std::max(level, qlevel[static_cast<std::size_t>(q)]);
    if (op.kind == GateKind::Measure) level = std::max(level, clevel[static_cast<std::size_t>(op.clbit)]);
    ++level;
    for (int q : op.qubits) qlevel[static_cast<std::size_t>(q)] = level;
    if (op.kind == GateKind::Measure) clevel[static_cast<std::size_t>(op.clbit)] = level;
    counts.depth = std::max(counts.depth, level);
  }
  return counts;
}

}  // namespace qedge::transpile
