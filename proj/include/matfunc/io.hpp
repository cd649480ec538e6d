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

#include <iosfwd>
#include <string>
#include <vector>

#include "matfunc/numkernel.hpp"

namespace matfunc {

/// Matrix Market coordinate file. Fields complex, real and integer are
/// accepted; symmetric, skew-symmetric and hermitian storage is expanded.
ComplexMatrix read_matrix_market(const std::string& path);
ComplexMatrix parse_matrix_market(std::istream& in);

void write_matrix_market(const std::string& path, const ComplexMatrix& a);

/// One entry per line, "re im" or "re"; blank lines and lines starting with
/// '%' or '#' are skipped.
ComplexVector read_vector(const std::string& path);
ComplexVector parse_vector(std::istream& in);

void write_vector(const std::string& path, const ComplexVector& v);

/// x printed with 17 significant digits.
std::string format_double(double x);

}  // namespace matfunc
