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

#include "matfunc/statevector.hpp"

#include <cmath>

#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"

namespace matfunc {

CompositeState::CompositeState(const QuantumStateView& node_data, std::size_t nodes,
                               std::size_t data_dim, std::size_t ancilla_dim)
    : nodes_(nodes), data_dim_(data_dim), ancilla_dim_(ancilla_dim) {
  if (!is_power_of_two(nodes) || !is_power_of_two(ancilla_dim) || data_dim == 0) {
    throw Error(ErrorCode::InvalidArgument, "register sizes must be powers of two");
  }
  if (node_data.dim() != nodes * data_dim) {
    throw Error(ErrorCode::InvalidArgument, "state does not match node x data layout");
  }
  amps_ = ComplexVector::Zero(static_cast<Eigen::Index>(nodes * data_dim * ancilla_dim));
  for (std::size_t k = 0; k < nodes; ++k) {
    for (std::size_t i = 0; i < data_dim; ++i) {
      amps_(index(k, i, 0)) = node_data[k * data_dim + i];
    }
  }
}

Complex CompositeState::amplitude(std::size_t k, std::size_t i, std::size_t j) const {
  return amps_(index(k, i, j));
}

void CompositeState::apply_weighting(const WeightingUnitary& u) {
  if (u.nodes() != nodes_ || u.order() != ancilla_dim_) {
    throw Error(ErrorCode::InvalidArgument, "weighting unitary does not fit the registers");
  }
  const auto l = static_cast<Eigen::Index>(ancilla_dim_);
  for (std::size_t k = 0; k < nodes_; ++k) {
    const ComplexMatrix block = u.block(k);
    for (std::size_t i = 0; i < data_dim_; ++i) {
      auto slice = amps_.segment(index(k, i, 0), l);
      const ComplexVector updated = block * slice;
      slice = updated;
    }
  }
}

void CompositeState::apply_node_hadamards() {
  // Fast Walsh-Hadamard transform along the node index.
  const std::size_t stride = data_dim_ * ancilla_dim_;
  for (std::size_t half = 1; half < nodes_; half *= 2) {
    for (std::size_t start = 0; start < nodes_; start += 2 * half) {
      for (std::size_t k = start; k < start + half; ++k) {
        for (std::size_t r = 0; r < stride; ++r) {
          const auto lo = static_cast<Eigen::Index>(k * stride + r);
          const auto hi = static_cast<Eigen::Index>((k + half) * stride + r);
          const Complex a = amps_(lo);
          const Complex b = amps_(hi);
          amps_(lo) = a + b;
          amps_(hi) = a - b;
        }
      }
    }
  }
  amps_ /= std::sqrt(static_cast<double>(nodes_));
}

CompositeState::Projection CompositeState::project_success() const {
  Projection p;
  p.data.resize(static_cast<Eigen::Index>(data_dim_));
  for (std::size_t i = 0; i < data_dim_; ++i) {
    p.data(static_cast<Eigen::Index>(i)) = amps_(index(0, i, 0));
  }
  p.probability = p.data.squaredNorm();
  return p;
}

std::pair<std::size_t, std::size_t> CompositeState::measure(SplitMix64& rng) const {
  const double target = rng.uniform();
  double acc = 0.0;
  std::pair<std::size_t, std::size_t> last{0, 0};
  for (std::size_t k = 0; k < nodes_; ++k) {
    for (std::size_t j = 0; j < ancilla_dim_; ++j) {
      double marginal = 0.0;
      for (std::size_t i = 0; i < data_dim_; ++i) marginal += std::norm(amps_(index(k, i, j)));
      if (marginal == 0.0) continue;
      acc += marginal;
      last = {k, j};
      if (target < acc) return last;
    }
  }
  return last;
}

}  // namespace matfunc
