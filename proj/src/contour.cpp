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

#include "matfunc/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "matfunc/error.hpp"

namespace matfunc {

namespace {

constexpr double kWeightTol = 1e-14;
constexpr double kIndicatorRounding = 1e-10;
constexpr double kNormSlack = 1e-9;

void require_nodes(std::size_t nodes) {
  if (!is_power_of_two(nodes)) {
    throw Error(ErrorCode::BadM, "node count " + std::to_string(nodes) +
                                     " is not a power of two");
  }
}

void require_contractive(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "matrix must be square and nonempty");
  }
  const double norm = spectral_norm(a);
  if (norm > 1.0 + kNormSlack) {
    throw Error(ErrorCode::NormTooLarge,
                "spectral norm " + std::to_string(norm) + " exceeds 1");
  }
}

// Solves the M shifted systems and accumulates their weighted sum in node order.
ComplexMatrix weighted_resolvent_sum(const FunctionSpec& fs, const ComplexMatrix& a,
                                     const ComplexMatrix& rhs,
                                     const ContourPlan& plan) {
  const std::size_t m = plan.nodes();
  const Eigen::Index n = a.rows();
  const ComplexMatrix scaled = a / plan.beta();
  ComplexMatrix sum = ComplexMatrix::Zero(n, rhs.cols());
  for (std::size_t k = 0; k < m; ++k) {
    const Complex shift = unit_root(static_cast<std::int64_t>(k), m);
    ComplexMatrix shifted = -scaled;
    shifted.diagonal().array() += shift;
    sum += quadrature_weight(fs, plan.beta(), k, m) * lu_solve(shifted, rhs);
  }
  return sum / static_cast<double>(m);
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

Complex unit_root(std::int64_t k, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t kk = k % mm;
  if (kk < 0) kk += mm;
  if ((4 * kk) % mm == 0) {
    switch ((4 * kk) / mm) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(kk) /
                       static_cast<double>(mm);
  return std::polar(1.0, theta);
}

ContourPlan::ContourPlan(double beta, std::size_t nodes, std::size_t order,
                         double hhl_error, double radius)
    : beta_(beta), nodes_(nodes), order_(order), hhl_error_(hhl_error), radius_(radius) {
  if (!(beta > 1.0) || !(beta < radius)) {
    throw Error(ErrorCode::InvalidArgument, "contour radius must satisfy 1 < beta < R");
  }
  require_nodes(nodes);
  if (!is_power_of_two(order)) {
    throw Error(ErrorCode::InvalidArgument, "truncation order must be a power of two");
  }
  if (!(hhl_error >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "linear-solve error must be >= 0");
  }
}

double ContourPlan::gamma() const noexcept {
  return std::max(kappa_prime(), 1.0 / (1.0 - r()));
}

QuadratureNodes make_nodes(std::size_t nodes, double beta) {
  require_nodes(nodes);
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "contour radius must be positive");
  }
  QuadratureNodes q;
  q.angles.reserve(nodes);
  q.points.reserve(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    q.angles.push_back(2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(nodes));
    q.points.push_back(beta * unit_root(static_cast<std::int64_t>(k), nodes));
  }
  return q;
}

double periodized_indicator(std::size_t nodes, std::int64_t y) {
  require_nodes(nodes);
  Complex sum{0.0, 0.0};
  const auto m = static_cast<std::int64_t>(nodes);
  for (std::int64_t k = 0; k < m; ++k) {
    // y*k mod M keeps the angle small so the summands stay accurate.
    const std::int64_t phase = ((y % m) * k) % m;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                         static_cast<double>(m);
    sum += std::polar(1.0, theta);
  }
  sum /= static_cast<double>(nodes);
  const double rounded = std::round(sum.real());
  if (std::abs(sum - Complex{rounded, 0.0}) >= kIndicatorRounding ||
      (rounded != 0.0 && rounded != 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "indicator sum failed to round cleanly");
  }
  return rounded;
}

Complex quadrature_weight(const FunctionSpec& fs, double beta, std::size_t k,
                          std::size_t nodes) {
  const Complex root = unit_root(static_cast<std::int64_t>(k), nodes);
  return fs.evaluate(beta * root, kWeightTol) * root;
}

ComplexVector contour_apply(const FunctionSpec& fs, const ComplexMatrix& a,
                            const ComplexVector& b, const ContourPlan& plan) {
  require_contractive(a);
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side dimension mismatch");
  }
  return weighted_resolvent_sum(fs, a, b, plan).col(0);
}

ComplexMatrix contour_matrix(const FunctionSpec& fs, const ComplexMatrix& a,
                             const ContourPlan& plan) {
  require_contractive(a);
  return weighted_resolvent_sum(fs, a, ComplexMatrix::Identity(a.rows(), a.cols()), plan);
}

double truncation_bound(double disk_max, double radius, double beta, double norm_a,
                        std::size_t nodes) {
  const double m = static_cast<double>(nodes);
  const double inner = std::pow(norm_a / beta, m);
  const double outer = std::pow(beta / radius, m);
  if (!(inner < 1.0) || !(outer < 1.0) || !(norm_a < radius)) {
    throw Error(ErrorCode::DegenerateBound, "geometric ratio is not below 1");
  }
  return disk_max / (1.0 - norm_a / radius) *
         (inner / (1.0 - inner) + outer / (1.0 - outer));
}

double truncation_bound(const FunctionSpec& fs, double norm_a, const ContourPlan& plan) {
  return truncation_bound(fs.disk_max(), fs.radius(), plan.beta(), norm_a, plan.nodes());
}

}  // namespace matfunc
