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

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace matfunc {

enum class FunctionKind { Exp, Cos, Sin, Geometric, Polynomial, Custom };

/// An analytic function on the closed disk |z| <= R, described by its Taylor
/// coefficients a_j together with R and B = max |f(z)| over the disk.
///
/// Catalog kinds carry B in closed form: e^R for exp, cosh R for cos and sin,
/// 1 / (1 - R/|s|) for the geometric series sum (z/s)^j. Coefficient-list
/// kinds take B from the caller, or estimate it by sampling |f| at 4096 points
/// of the circle |z| = R and multiplying by 1.01.
class FunctionSpec {
 public:
  using Complex = std::complex<double>;

  static FunctionSpec exp(double radius);
  static FunctionSpec cos(double radius);
  static FunctionSpec sin(double radius);
  static FunctionSpec geometric(Complex pole, double radius);
  static FunctionSpec polynomial(std::vector<Complex> coeffs, double radius,
                                 std::optional<double> disk_max = std::nullopt);
  static FunctionSpec custom(std::vector<Complex> coeffs, double radius,
                             std::optional<double> disk_max = std::nullopt);

  FunctionKind kind() const noexcept { return kind_; }
  double radius() const noexcept { return radius_; }
  double disk_max() const noexcept { return disk_max_; }
  Complex pole() const noexcept { return pole_; }
  std::string name() const;

  /// a_j for any j >= 0.
  Complex coeff(std::size_t j) const;

  /// Index one past the last nonzero coefficient, when the series is finite.
  std::optional<std::size_t> degree_bound() const;

  /// f(z) by partial sums with the certified tail stop
  /// B (|z|/R)^J / (1 - |z|/R) <= tol. Throws DivergentSeries for |z| >= R.
  Complex evaluate(Complex z, double tol) const;

 private:
  FunctionSpec(FunctionKind kind, double radius);

  FunctionKind kind_;
  double radius_;
  double disk_max_ = 0.0;
  Complex pole_{0.0, 0.0};
  // Shared so copies of a spec stay cheap.
  std::shared_ptr<const std::vector<Complex>> table_;
};

std::optional<FunctionKind> parse_function_kind(const std::string& name);

}  // namespace matfunc
