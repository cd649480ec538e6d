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
#include <cstdint>
#include <vector>

#include "matfunc/function_spec.hpp"
#include "matfunc/numkernel.hpp"

namespace matfunc {

bool is_power_of_two(std::size_t n) noexcept;

/// e^{2 pi i k / M}, exact at multiples of a quarter turn.
Complex unit_root(std::int64_t k, std::size_t m);

/// Quadrature and truncation parameters for the circle |z| = beta.
class ContourPlan {
 public:
  /// Validates 1 < beta < radius and that nodes and order are powers of two.
  ContourPlan(double beta, std::size_t nodes, std::size_t order, double hhl_error,
              double radius);

  double beta() const noexcept { return beta_; }
  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t order() const noexcept { return order_; }
  double hhl_error() const noexcept { return hhl_error_; }
  double radius() const noexcept { return radius_; }

  /// beta / R
  double r() const noexcept { return beta_ / radius_; }
  /// 1 / (1 - 1/beta)
  double kappa_prime() const noexcept { return 1.0 / (1.0 - 1.0 / beta_); }
  /// max(kappa', 1/(1-r))
  double gamma() const noexcept;

 private:
  double beta_;
  std::size_t nodes_;
  std::size_t order_;
  double hhl_error_;
  double radius_;
};

struct QuadratureNodes {
  std::vector<double> angles;   // 2 pi k / M
  std::vector<Complex> points;  // beta e^{i angle}
};

QuadratureNodes make_nodes(std::size_t nodes, double beta);

/// (1/M) sum_k e^{2 pi i y k / M} by direct summation, rounded to 0 or 1.
double periodized_indicator(std::size_t nodes, std::int64_t y);

/// Trapezoidal approximation f_M(A)b = (1/M) sum_k g_k (e^{i t_k} I - A/beta)^{-1} b
/// with g_k = f(beta e^{i t_k}) e^{i t_k}.
ComplexVector contour_apply(const FunctionSpec& fs, const ComplexMatrix& a,
                            const ComplexVector& b, const ContourPlan& plan);

/// Dense f_M(A).
ComplexMatrix contour_matrix(const FunctionSpec& fs, const ComplexMatrix& a,
                             const ContourPlan& plan);

/// Upper bound on |f(A) - f_M(A)| for |A| = norm_a.
double truncation_bound(const FunctionSpec& fs, double norm_a, const ContourPlan& plan);
double truncation_bound(double disk_max, double radius, double beta, double norm_a,
                        std::size_t nodes);

/// Quadrature weight g_k = f(beta e^{i t_k}) e^{i t_k}, with f from the
/// certified series at absolute tolerance 1e-14.
Complex quadrature_weight(const FunctionSpec& fs, double beta, std::size_t k,
                          std::size_t nodes);

}  // namespace matfunc
