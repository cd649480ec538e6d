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
#include <string>
#include <vector>

#include "matfunc/function_spec.hpp"
#include "matfunc/numkernel.hpp"
#include "matfunc/rng.hpp"

namespace matfunc {

/// Entries with real and imaginary parts uniform in [-1, 1).
ComplexMatrix random_matrix(SplitMix64& rng, std::size_t n);
ComplexVector random_vector(SplitMix64& rng, std::size_t n);

/// Random matrix rescaled to spectral norm 1; Hermitian when requested.
ComplexMatrix random_contraction(SplitMix64& rng, std::size_t n, bool hermitian);

/// Upper bidiagonal block with 1/2 on the diagonal and 1 above it, rescaled
/// to spectral norm 1. Non-normal.
ComplexMatrix jordan_like(std::size_t n);

/// exp, cos, sin and geometric(pole 3), all with R = 2.
std::vector<FunctionSpec> catalog_functions();

/// 1 + z/2 + z^2/4 + z^3/8 on R = 2, with B = 4.
FunctionSpec cubic_example();

}  // namespace matfunc
