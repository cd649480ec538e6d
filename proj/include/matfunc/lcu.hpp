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
#include <vector>

#include "matfunc/function_spec.hpp"
#include "matfunc/numkernel.hpp"

namespace matfunc {

/// First L Taylor coefficients with alpha = sum_j |a_j| beta^j and C~ = 1/alpha.
struct CoeffTable {
  std::vector<Complex> coeffs;
  double beta = 0.0;
  double alpha = 0.0;
  double ctilde = 0.0;

  std::size_t order() const noexcept { return coeffs.size(); }
};

CoeffTable truncate(const FunctionSpec& fs, std::size_t order, double beta);

/// g~_k = f~_L(beta e^{i t_k}) e^{i t_k}
Complex weight(const CoeffTable& table, std::size_t k, std::size_t nodes);

/// U = (I_M (x) W'^H) V (I_M (x) W) on the node register (x) the L-level
/// ancilla, stored as its factors.
///
/// W maps |0> to w_j = sqrt(a_j beta^j / alpha) and is completed to a unitary
/// by a Householder reflection. W' is the entrywise conjugate of W, so
/// <0|W'^H V_k W|0> = sum_j a_j beta^j e^{i t_k (j+1)} / alpha with no
/// dependence on the square-root branch.
class WeightingUnitary {
 public:
  WeightingUnitary(ComplexMatrix prep, std::size_t nodes);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(prep_.rows()); }

  const ComplexMatrix& prep() const noexcept { return prep_; }
  const ComplexMatrix& conj_prep() const noexcept { return conj_prep_; }

  /// e^{i t_k (j+1)}
  Complex phase(std::size_t k, std::size_t j) const;

  /// The L x L block acting on the ancilla when the node register holds k.
  ComplexMatrix block(std::size_t k) const;

  /// Dense (M L) x (M L) operator, node index major.
  ComplexMatrix assemble() const;

 private:
  ComplexMatrix prep_;
  ComplexMatrix conj_prep_;
  std::size_t nodes_;
};

WeightingUnitary build_unitary(const CoeffTable& table, std::size_t nodes);

/// Unitary whose first column is `column` (unit norm), via one Householder
/// reflection and a phase on the first basis vector.
ComplexMatrix complete_unitary(const ComplexVector& column);

/// Diagonal of V, e^{i t_k (j+1)} at index k*L + j, evaluated directly.
ComplexVector phase_diagonal(std::size_t nodes, std::size_t order);

/// Diagonal of V rebuilt from the per-bit controlled phases
/// exp(2 pi i k_s j_t 2^{s+t} / M) and the node phase e^{i t_k}.
ComplexVector phase_diagonal_from_factors(std::size_t nodes, std::size_t order);

/// 2 L + log2(M) log2(L); a reporting figure, not a tight count.
std::size_t gate_count_estimate(std::size_t nodes, std::size_t order);

}  // namespace matfunc
