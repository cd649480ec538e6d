// Copyright 2026 The matfunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <utility>

#include "matfunc/lcu.hpp"
#include "matfunc/numkernel.hpp"
#include "matfunc/rng.hpp"

namespace matfunc {

/// Amplitudes over node register (x) data register (x) ancilla register,
/// stored at index (k * N + i) * L + j.
class CompositeState {
 public:
  /// |x'> (x) |0...0> where `node_data` is indexed k * N + i.
  CompositeState(const QuantumStateView& node_data, std::size_t nodes,
                 std::size_t data_dim, std::size_t ancilla_dim);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t data_dim() const noexcept { return data_dim_; }
  std::size_t ancilla_dim() const noexcept { return ancilla_dim_; }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex amplitude(std::size_t k, std::size_t i, std::size_t j) const;

  /// Applies U to (node, ancilla) with the identity on the data register.
  void apply_weighting(const WeightingUnitary& u);

  /// H on every qubit of the node register.
  void apply_node_hadamards();

  struct Projection {
    double probability = 0.0;
    ComplexVector data;  // unnormalized data-register amplitudes
  };

  /// Component with node register |0...0> and ancilla |0...0>.
  Projection project_success() const;

  /// Samples a measurement of node and ancilla registers; returns (k, j).
  std::pair<std::size_t, std::size_t> measure(SplitMix64& rng) const;

 private:
  Eigen::Index index(std::size_t k, std::size_t i, std::size_t j) const noexcept {
    return static_cast<Eigen::Index>((k * data_dim_ + i) * ancilla_dim_ + j);
  }

  std::size_t nodes_;
  std::size_t data_dim_;
  std::size_t ancilla_dim_;
  ComplexVector amps_;
};

}  // namespace matfunc
