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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qedge/neuron.hpp"
#include "qedge/transpile.hpp"

namespace qedge::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GateTarget {
  int sx;
  int rz;
  std::optional<int> depth;
};

/// Published basis-gate counts for one circuit of `kind`, if any.
std::optional<GateTarget> published_gate_target(neuron::VariantKind kind);

/// Counts for the first circuit `kind` builds on the gate probe image, after
/// decomposition and optimization.
transpile::GateCounts variant_gate_counts(neuron::VariantKind kind);

}  // namespace qedge::cli
