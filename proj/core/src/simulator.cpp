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

#include "qedge/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qedge::sim {

namespace {

constexpr double kPruneBelow = 1e-14;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t control_mask(const GateOp& op) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < op.qubits.size(); ++i) mask |= 1ULL << op.qubits[i];
  return mask;
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 24) {
    throw std::invalid_argument("StateVector: qubit count outside [1, 24]");
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 24 || amps_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply_matrix(int target, std::uint64_t cmask, Amplitude m00, Amplitude m01,
                               Amplitude m10, Amplitude m11) {
  const std::uint64_t tbit = 1ULL << target;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & tbit) || (i & cmask) != cmask) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | tbit];
    amps_[i] = m00 * a0 + m01 * a1;
    amps_[i | tbit] = m10 * a0 + m11 * a1;
  }
}

void StateVector::apply_phase(std::uint64_t mask, Amplitude phase) {
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] *= phase;
  }
}

void StateVector::apply(const GateOp& op) {
  for (int q : op.qubits) {
    if (q < 0 || q >= num_qubits_) throw std::out_of_range("StateVector: qubit index out of range");
  }
  const double r = std::numbers::sqrt2 / 2.0;
  const Amplitude i1{0.0, 1.0};
  switch (op.kind) {
    case GateKind::H: apply_matrix(op.target(), 0, r, r, r, -r); return;
    case GateKind::X: apply_matrix(op.target(), 0, 0.0, 1.0, 1.0, 0.0); return;
    case GateKind::SX: {
      const Amplitude a{0.5, 0.5};
      const Amplitude b{0.5, -0.5};
      apply_matrix(op.target(), 0, a, b, b, a);
      return;
    }
    case GateKind::Rz:
      apply_matrix(op.target(), 0, std::exp(-i1 * (op.angle / 2.0)), 0.0, 0.0,
                   std::exp(i1 * (op.angle / 2.0)));
      return;
    case GateKind::P: apply_phase(1ULL << op.target(), std::exp(i1 * op.angle)); return;
    case GateKind::CX:
    case GateKind::MCX: apply_matrix(op.target(), control_mask(op), 0.0, 1.0, 1.0, 0.0); return;
    case GateKind::MCP:
      apply_phase(control_mask(op) | (1ULL << op.target()), std::exp(i1 * op.angle));
      return;
    case GateKind::Barrier: return;
    case GateKind::Measure:
    case GateKind::Reset: break;
  }
  throw std::invalid_argument("StateVector::apply: " + std::string(to_string(op.kind)) +
                              " is not unitary");
}

double StateVector::probability_of_one(int qubit) const {
  const std::uint64_t bit = 1ULL << qubit;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

void StateVector::collapse(int qubit, int outcome) {
  const std::uint64_t bit = 1ULL << qubit;
  const std::uint64_t want = outcome ? bit : 0;
  double kept = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) == want) {
      kept += std::norm(amps_[i]);
    } else {
      amps_[i] = 0.0;
    }
  }
  if (kept <= 0.0) throw std::logic_error("StateVector::collapse: outcome has zero probability");
  const double scale = 1.0 / std::sqrt(kept);
  for (Amplitude& a : amps_) a *= scale;
}

StateVector apply_gate(StateVector state, const GateOp& op) {
  state.apply(op);
  return state;
}

std::string to_bitstring(std::uint64_t bits, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if (bits >> b & 1ULL) s[static_cast<std::size_t>(width - 1 - b)] = '1';
  }
  return s;
}

namespace {

struct ExactRunner {
  const Circuit& circ;
  std::map<std::uint64_t, double> leaves;

  void explore(std::size_t pc, StateVector state, double weight, std::uint64_t bits) {
    const auto& ops = circ.ops();
    for (; pc < ops.size(); ++pc) {
      const GateOp& op = ops[pc];
      if (op.kind != GateKind::Measure && op.kind != GateKind::Reset) {
        state.apply(op);
        continue;
      }
      const int q = op.target();
      const double p1 = std::clamp(state.probability_of_one(q), 0.0, 1.0);
      const double p0 = 1.0 - p1;
      const bool take0 = p0 >= kPruneBelow;
      const bool take1 = p1 >= kPruneBelow;
      auto settle = [&](StateVector& s, int outcome, std::uint64_t& b) {
        s.collapse(q, outcome);
        if (op.kind == GateKind::Measure) {
          const std::uint64_t cbit = 1ULL << op.clbit;
          b = outcome ? (b | cbit) : (b & ~cbit);
        } else if (outcome == 1) {
          s.apply({GateKind::X, {q}});
        }
      };
      if (take0 && take1) {
        StateVector other = state;
        std::uint64_t other_bits = bits;
        settle(other, 1, other_bits);
        explore(pc + 1, std::move(other), weight * p1, other_bits);
        settle(state, 0, bits);
        weight *= p0;
      } else {
        settle(state, take1 ? 1 : 0, bits);
      }
    }
    leaves[bits] += weight;
  }
};

// Measurements can be deferred to the end when no later op touches a measured
// qubit, no Reset occurs and every clbit is written once.
bool has_terminal_measurements(const Circuit& circ) {
  std::vector<bool> measured(static_cast<std::size_t>(circ.num_qubits()), false);
  std::vector<bool> written(static_cast<std::size_t>(circ.num_clbits()), false);
  for (const GateOp& op : circ.ops()) {
    if (op.kind == GateKind::Reset) return false;
    if (op.kind == GateKind::Barrier) continue;
    if (op.kind == GateKind::Measure) {
      if (measured[op.target()] || written[op.clbit]) return false;
      measured[op.target()] = true;
      written[op.clbit] = true;
      continue;
    }
    for (int q : op.qubits) {
      if (measured[q]) return false;
    }
  }
  return true;
}

CountsMap sample_terminal(const Circuit& circ, std::uint64_t shots, std::mt19937_64& rng) {
  StateVector state(circ.num_qubits());
  std::vector<std::pair<int, int>> readout;  // qubit -> clbit
  for (const GateOp& op : circ.ops()) {
    if (op.kind == GateKind::Measure) {
      readout.emplace_back(op.target(), op.clbit);
    } else {
      state.apply(op);
    }
  }
  // Multinomial draw over basis states as a chain of conditional binomials.
  auto amps = state.amplitudes();
  double mass = 0.0;
  for (const Amplitude& a : amps) mass += std::norm(a);
  std::vector<std::uint64_t> hits(amps.size(), 0);
  std::uint64_t left = shots;
  for (std::size_t i = 0; i < amps.size() && left > 0; ++i) {
    const double p = std::norm(amps[i]);
    if (p <= 0.0) continue;
    const double share = std::clamp(p / mass, 0.0, 1.0);
    const std::uint64_t n = i + 1 == amps.size() ? left : std::binomial_distribution<std::uint64_t>(left, share)(rng);
    hits[i] = n;
    left -= n;
    mass -= p;
    if (mass <= 0.0) mass = 0.0;
  }
  if (left > 0) {
    // Rounding left the tail without mass; give the rest to the last occupied state.
    for (std::size_t i = amps.size(); i-- > 0;) {
      if (std::norm(amps[i]) > 0.0) {
        hits[i] += left;
        break;
      }
    }
  }
  CountsMap counts;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == 0) continue;
    std::uint64_t bits = 0;
    for (auto [q, c] : readout) {
      if (i >> q & 1U) bits |= 1ULL << c;
    }
    counts[to_bitstring(bits, circ.num_clbits())] += hits[i];
  }
  return counts;
}

// Trajectories with shot branching: at each Measure or Reset the shots that
// reach it split binomially between the two outcomes, and each branch carries
// its share forward. Same law as running every shot separately.
struct BranchingSampler {
  const Circuit& circ;
  std::mt19937_64& rng;
  std::map<std::uint64_t, std::uint64_t> tally;

  void explore(std::size_t pc, StateVector state, std::uint64_t shots, std::uint64_t bits) {
    const auto& ops = circ.ops();
    for (; pc < ops.size(); ++pc) {
      const GateOp& op = ops[pc];
      if (op.kind != GateKind::Measure && op.kind != GateKind::Reset) {
        state.apply(op);
        continue;
      }
      const int q = op.target();
      const double p1 = std::clamp(state.probability_of_one(q), 0.0, 1.0);
      const std::uint64_t ones = std::binomial_distribution<std::uint64_t>(shots, p1)(rng);
      auto settle = [&](StateVector& s, int outcome, std::uint64_t& b) {
        s.collapse(q, outcome);
        if (op.kind == GateKind::Measure) {
          const std::uint64_t cbit = 1ULL << op.clbit;
          b = outcome ? (b | cbit) : (b & ~cbit);
        } else if (outcome == 1) {
          s.apply({GateKind::X, {q}});
        }
      };
      if (ones > 0 && ones < shots) {
        StateVector other = state;
        std::uint64_t other_bits = bits;
        settle(other, 1, other_bits);
        explore(pc + 1, std::move(other), ones, other_bits);
        settle(state, 0, bits);
        shots -= ones;
      } else {
        settle(state, ones > 0 ? 1 : 0, bits);
      }
    }
    tally[bits] += shots;
  }
};

CountsMap sample_trajectories(const Circuit& circ, std::uint64_t shots, std::mt19937_64& rng) {
  BranchingSampler sampler{circ, rng, {}};
  sampler.explore(0, StateVector(circ.num_qubits()), shots, 0);
  CountsMap counts;
  for (auto [bits, n] : sampler.tally) counts[to_bitstring(bits, circ.num_clbits())] = n;
  return counts;
}

std::vector<int> normalize_keep(std::vector<int> keep, std::size_t width) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= width) {
      throw std::out_of_range("marginal: clbit " + std::to_string(k) + " outside register of " +
                              std::to_string(width));
    }
  }
  return keep;
}

template <class Map>
Map marginalize(const Map& in, std::vector<int> keep) {
  Map out;
  if (in.empty()) return out;
  const std::size_t width = in.begin()->first.size();
  keep = normalize_keep(std::move(keep), width);
  for (const auto& [key, value] : in) {
    if (key.size() != width) throw std::invalid_argument("marginal: inconsistent bitstring width");
    std::string reduced(keep.size(), '0');
    for (std::size_t k = 0; k < keep.size(); ++k) {
      reduced[keep.size() - 1 - k] = key[width - 1 - static_cast<std::size_t>(keep[k])];
    }
    out[reduced] += value;
  }
  return out;
}

template <class Map>
double bit_frequency(const Map& in, int bit, int value) {
  double total = 0.0;
  double hit = 0.0;
  const char want = value ? '1' : '0';
  for (const auto& [key, v] : in) {
    if (bit < 0 || static_cast<std::size_t>(bit) >= key.size()) {
      throw std::out_of_range("prob_of: clbit " + std::to_string(bit) + " out of range");
    }
    total += static_cast<double>(v);
    if (key[key.size() - 1 - static_cast<std::size_t>(bit)] == want) hit += static_cast<double>(v);
  }
  if (total <= 0.0) throw std::invalid_argument("prob_of: empty counts");
  return hit / total;
}

}  // namespace

Distribution run_exact(const Circuit& circ) {
  if (has_terminal_measurements(circ)) {
    StateVector state(circ.num_qubits());
    std::vector<std::pair<int, int>> readout;  // qubit -> clbit
    for (const GateOp& op : circ.ops()) {
      if (op.kind == GateKind::Measure) {
        readout.emplace_back(op.target(), op.clbit);
      } else {
        state.apply(op);
      }
    }
    std::map<std::uint64_t, double> leaves;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const double p = std::norm(amps[i]);
      if (p < kPruneBelow) continue;
      std::uint64_t bits = 0;
      for (auto [q, c] : readout) {
        if (i >> q & 1U) bits |= 1ULL << c;
      }
      leaves[bits] += p;
    }
    Distribution dist;
    for (auto [bits, p] : leaves) dist[to_bitstring(bits, circ.num_clbits())] += p;
    return dist;
  }
  ExactRunner runner{circ, {}};
  runner.explore(0, StateVector(circ.num_qubits()), 1.0, 0);
  Distribution dist;
  for (auto [bits, p] : runner.leaves) dist[to_bitstring(bits, circ.num_clbits())] += p;
  return dist;
}

CountsMap sample_counts(const Circuit& circ, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  std::mt19937_64 rng(seed);
  if (has_terminal_measurements(circ)) return sample_terminal(circ, shots, rng);
  return sample_trajectories(circ, shots, rng);
}

CountsMap marginal_counts(const CountsMap& counts, std::vector<int> keep) {
  return marginalize(counts, std::move(keep));
}

Distribution marginal_distribution(const Distribution& dist, std::vector<int> keep) {
  return marginalize(dist, std::move(keep));
}

double prob_of(const CountsMap& counts, int bit, int value) {
  return bit_frequency(counts, bit, value);
}

double prob_of(const Distribution& dist, int bit, int value) {
  return bit_frequency(dist, bit, value);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index ^ 0x5851f42d4c957f2dULL));
}

std::vector<Amplitude> unitary_of(const Circuit& circ) {
  const std::size_t dim = std::size_t{1} << circ.num_qubits();
  std::vector<Amplitude> m(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Amplitude> basis(dim, 0.0);
    basis[col] = 1.0;
    StateVector s(circ.num_qubits(), std::move(basis));
    for (const GateOp& op : circ.ops()) {
      if (op.kind == GateKind::Measure || op.kind == GateKind::Reset) {
        throw std::invalid_argument("unitary_of: circuit contains " +
                                    std::string(to_string(op.kind)));
      }
      s.apply(op);
    }
    for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = s[row];
  }
  return m;
}

}  // namespace qedge::sim
