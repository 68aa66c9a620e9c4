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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include "qedge/encoding.hpp"
#include "qedge/neuron.hpp"
#include "qedge/simulator.hpp"

namespace {

using namespace qedge;
using neuron::VariantKind;
constexpr double kPi = std::numbers::pi;

GrayImage random_gray(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Gray> px(static_cast<std::size_t>(w * h));
  for (auto& v : px) v = static_cast<Gray>(rng() & 0xFF);
  return GrayImage(w, h, std::move(px));
}

TEST(Neuron, SpecLengthsMustMatch) {
  EXPECT_THROW(neuron::NeuronSpec(enc::AngleVector({0.0, 1.0}), enc::AngleVector({0.0, 0.0, 0.0, 0.0})),
               std::invalid_argument);
}

TEST(Neuron, InputUnitaryPreparesPhaseState) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int n : {1, 2, 3}) {
    std::vector<double> theta(std::size_t{1} << n);
    for (auto& t : theta) t = ang(rng);
    const enc::AngleVector in(theta);
    sim::StateVector s(n);
    const sim::Circuit prep = neuron::build_input_unitary(in);
    for (const auto& op : prep.ops()) s.apply(op);
    const double amp = 1.0 / std::sqrt(static_cast<double>(theta.size()));
    for (std::size_t j = 0; j < theta.size(); ++j) {
      const std::complex<double> want = std::polar(amp, theta[j] - theta[0]);
      EXPECT_NEAR(std::abs(s[j] - want), 0.0, 1e-12) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Neuron, OneDimensionalMatchesClosedForm) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const neuron::NeuronSpec spec(enc::AngleVector({ang(rng), ang(rng)}),
                                  enc::AngleVector({ang(rng), ang(rng)}));
    const double p0 = sim::prob_of(sim::run_exact(neuron::build_1d_circuit(spec)), 0, 0);
    EXPECT_NEAR(p0, neuron::analytic_probability(spec), 1e-12);
  }
}

TEST(Neuron, SineSquaredForDerivativeMask) {
  for (int c0 : {0, 17, 128, 255}) {
    for (int c1 : {0, 3, 100, 255}) {
      const double want = std::pow(std::sin(kPi * (c1 - c0) / 510.0), 2);
      EXPECT_NEAR(neuron::analytic_probability(static_cast<Gray>(c0), static_cast<Gray>(c1)), want,
                  1e-14);
    }
  }
}

TEST(Neuron, TwoDimensionalMatchesOverlap) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 100; ++i) {
    const neuron::NeuronSpec spec(enc::AngleVector({ang(rng), ang(rng), ang(rng), ang(rng)}),
                                  enc::AngleVector({ang(rng), ang(rng), ang(rng), ang(rng)}));
    const double p1 = sim::prob_of(sim::run_exact(neuron::build_2d_circuit(spec)), 0, 1);
    EXPECT_NEAR(p1, neuron::overlap_probability(spec), 1e-12);
  }
}

// For black/white patches the output is the squared classical 2x2 derivative
// divided by four.
TEST(Neuron, BinaryPatchesGiveThreeLevels) {
  for (Direction d : {Direction::Horizontal, Direction::Vertical}) {
    const auto mask = enc::mask_2d(d);
    for (int bits = 0; bits < 16; ++bits) {
      std::array<int, 4> px{};
      for (int k = 0; k < 4; ++k) px[static_cast<std::size_t>(k)] = (bits >> k & 1) ? 255 : 0;
      const int tl = px[0] / 255, tr = px[1] / 255, bl = px[2] / 255, br = px[3] / 255;
      const int deriv = d == Direction::Horizontal ? (tl + tr) - (bl + br) : (tl + bl) - (tr + br);
      const neuron::NeuronSpec spec(enc::gray_to_angle(std::span<const int>(px)), mask.weights);
      const double p = sim::prob_of(sim::run_exact(neuron::build_2d_circuit(spec)), 0, 1);
      EXPECT_NEAR(p, deriv * deriv / 4.0, 1e-12) << "bits " << bits;
    }
  }
}

TEST(Neuron, CircuitsRejectWrongSizes) {
  const neuron::NeuronSpec two(enc::AngleVector({0.0, 1.0}), enc::AngleVector({0.0, kPi}));
  const neuron::NeuronSpec four(enc::AngleVector({0.0, 1.0, 0.0, 0.0}), enc::AngleVector({0.0, 0.0, kPi, kPi}));
  EXPECT_THROW(neuron::build_2d_circuit(two), std::invalid_argument);
  EXPECT_THROW(neuron::build_1d_circuit(four), std::invalid_argument);
}

TEST(Variants, ParseNames) {
  EXPECT_EQ(neuron::parse_variant("Para50_3pix"), VariantKind::Para50_3pix);
  EXPECT_EQ(neuron::parse_variant("SEQPARA50"), VariantKind::SeqPara50);
  EXPECT_FALSE(neuron::parse_variant("std"));
  for (VariantKind k : neuron::all_variants()) EXPECT_EQ(neuron::parse_variant(neuron::to_string(k)), k);
  EXPECT_EQ(neuron::one_dimensional_variants().size(), 6u);
}

TEST(Variants, ShapesFollowTraits) {
  const GrayImage img = random_gray(5, 3, 1);
  for (VariantKind k : neuron::all_variants()) {
    const auto vc = neuron::build_variant_circuits(k, img);
    const auto& tr = neuron::traits(k);
    const std::size_t dirs = k == VariantKind::TwoD ? 2 : 3;
    EXPECT_EQ(vc.slots.size(), dirs * img.size()) << tr.name;
    for (const auto& c : vc.circuits) EXPECT_EQ(c.num_qubits(), tr.qubits) << tr.name;
    EXPECT_EQ(vc.circuits.front().measure_count(),
              static_cast<std::size_t>(tr.measurements_per_circuit)) << tr.name;
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& s : vc.slots) {
      EXPECT_TRUE(seen.insert({s.x, s.y, static_cast<int>(s.direction)}).second);
      EXPECT_LT(s.clbit, vc.circuits[s.circuit].num_clbits());
    }
  }
}

TEST(Variants, SeqParaLayout) {
  const GrayImage img = random_gray(4, 1, 2);
  const auto vc = neuron::build_variant_circuits(VariantKind::SeqPara50, img);
  ASSERT_EQ(vc.circuits.size(), 1u);
  const auto& ops = vc.circuits[0].ops();
  std::vector<std::pair<int, int>> measures;
  for (const auto& op : ops) {
    if (op.kind == sim::GateKind::Measure) measures.emplace_back(op.target(), op.clbit);
  }
  ASSERT_EQ(measures.size(), 12u);
  for (int slot = 0; slot < 4; ++slot) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(measures[static_cast<std::size_t>(3 * slot + b)], std::make_pair(slot / 2, 3 * slot + b));
    }
  }
  for (const auto& s : vc.slots) {
    EXPECT_EQ(s.clbit, 3 * s.x + neuron::block_index(s.direction));
  }
}

TEST(Variants, PartialLastCircuit) {
  const GrayImage img = random_gray(5, 1, 3);
  const auto vc = neuron::build_variant_circuits(VariantKind::Para50_3pix, img);
  ASSERT_EQ(vc.circuits.size(), 2u);
  EXPECT_EQ(vc.circuits[1].measure_count(), 6u);
}

TEST(Variants, DiagonalRejectedForTwoD) {
  const GrayImage img = random_gray(2, 2, 4);
  const std::vector<Direction> dirs{Direction::Diagonal};
  EXPECT_THROW(neuron::build_variant_circuits(VariantKind::TwoD, img, dirs), std::invalid_argument);
}

}  // namespace
