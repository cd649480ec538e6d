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

#include "matfunc/instances.hpp"

namespace matfunc {

ComplexMatrix random_matrix(SplitMix64& rng, std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  ComplexMatrix a(nn, nn);
  for (Eigen::Index j = 0; j < nn; ++j) {
    for (Eigen::Index i = 0; i < nn; ++i) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

ComplexVector random_vector(SplitMix64& rng, std::size_t n) {
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix random_contraction(SplitMix64& rng, std::size_t n, bool hermitian) {
  ComplexMatrix a = random_matrix(rng, n);
  if (hermitian) a = (a + a.adjoint()).eval() / 2.0;
  return a / spectral_norm(a);
}

ComplexMatrix jordan_like(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  ComplexMatrix a = ComplexMatrix::Zero(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i) {
    a(i, i) = 0.5;
    if (i + 1 < nn) a(i, i + 1) = 1.0;
  }
  return a / spectral_norm(a);
}

std::vector<FunctionSpec> catalog_functions() {
  return {FunctionSpec::exp(2.0), FunctionSpec::cos(2.0), FunctionSpec::sin(2.0),
          FunctionSpec::geometric(3.0, 2.0)};
}

FunctionSpec cubic_example() {
  // Positive coefficients, so the maximum on |z| = 2 is attained at z = 2.
  return FunctionSpec::polynomial({1.0, 0.5, 0.25, 0.125}, 2.0, 4.0);
}

}  // namespace matfunc
