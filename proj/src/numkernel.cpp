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

#include "matfunc/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "matfunc/error.hpp"
#include "matfunc/function_spec.hpp"

namespace matfunc {

namespace {

constexpr double kPivotRelTol = 1e-13;
constexpr double kUnitNormTol = 1e-12;
constexpr double kZeroNorm = 1e-300;
// spectral_norm approaches the top singular value from below; the tail bound
// in taylor_apply uses a slightly inflated value to stay certified.
constexpr double kNormInflation = 1.0 + 1e-9;
constexpr std::size_t kMaxTaylorTerms = 1'000'000;

Eigen::PartialPivLU<ComplexMatrix> factorize(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "lu_solve needs a nonempty square matrix");
  }
  if (!all_finite(a)) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  const double scale = a.cwiseAbs().maxCoeff();
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const auto& packed = lu.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    if (!(std::abs(packed(i, i)) >= kPivotRelTol * scale) || scale == 0.0) {
      throw Error(ErrorCode::SingularMatrix,
                  "pivot " + std::to_string(i) + " below tolerance");
    }
  }
  return lu;
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side dimension mismatch");
  }
  return factorize(a).solve(b);
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (b.rows() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side dimension mismatch");
  }
  return factorize(a).solve(b);
}

double spectral_norm(const ComplexMatrix& a, double rel_tol, int max_iterations) {
  if (a.size() == 0) return 0.0;
  if (!all_finite(a)) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  const ComplexMatrix gram = a.adjoint() * a;
  const double gram_max = gram.cwiseAbs().maxCoeff();
  if (gram_max == 0.0) return 0.0;
  const Eigen::Index n = gram.rows();

  ComplexVector v = ComplexVector::Ones(n);
  v(0) += 1e-3;
  v.normalize();

  // Step k multiplies by (A^H A)^(2^k): the iteration matrix is squared after
  // every step. Plain power iteration stalls when the top two singular values
  // are close, and its step-to-step change then understates the error; with
  // squaring the remaining error is bounded by the last change.
  ComplexMatrix power = gram / gram_max;
  double previous = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    ComplexVector w = power * v;
    double w_norm = w.norm();
    if (w_norm == 0.0) {
      // v lies in the null space of the current power; restart from its
      // largest column, which is in the range.
      Eigen::Index col = 0;
      power.colwise().norm().maxCoeff(&col);
      w = power.col(col);
      w_norm = w.norm();
    }
    v = w / w_norm;
    const double sigma = std::sqrt(std::max(0.0, v.dot(gram * v).real()));
    if (previous >= 0.0 && std::abs(sigma - previous) <= rel_tol * sigma) {
      return sigma;
    }
    previous = sigma;
    power = (power * power).eval();
    power /= power.cwiseAbs().maxCoeff();
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not reach the requested tolerance");
}

ComplexVector taylor_apply(const FunctionSpec& fs, const ComplexMatrix& a,
                           const ComplexVector& b, double tol) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "taylor_apply dimension mismatch");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  const double norm_a = spectral_norm(a) * kNormInflation;
  const double ratio = norm_a / fs.radius();
  if (!(ratio < 1.0)) {
    throw Error(ErrorCode::DivergentSeries,
                "|A| >= R, the power series tail cannot be certified");
  }
  const double b_norm = b.norm();
  const auto degree = fs.degree_bound();

  ComplexVector sum = ComplexVector::Zero(b.size());
  ComplexVector term = b;
  double ratio_power = 1.0;
  for (std::size_t j = 0; j < kMaxTaylorTerms; ++j) {
    if (degree && j >= *degree) return sum;
    if (j > 0) term = a * term;
    sum += fs.coeff(j) * term;
    ratio_power *= ratio;
    if (fs.disk_max() * ratio_power / (1.0 - ratio) * b_norm <= tol) return sum;
  }
  throw Error(ErrorCode::DivergentSeries, "taylor tail did not certify");
}

ComplexMatrix taylor_matrix(const FunctionSpec& fs, const ComplexMatrix& a,
                            double tol) {
  const Eigen::Index n = a.rows();
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.col(j) = taylor_apply(fs, a, ComplexVector::Unit(n, j), tol);
  }
  return out;
}

double normalized_distance(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::InvalidArgument, "normalized_distance dimension mismatch");
  }
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu < kZeroNorm || nv < kZeroNorm) {
    throw Error(ErrorCode::ZeroVector, "normalized_distance of a zero vector");
  }
  return std::min(2.0, (u / nu - v / nv).norm());
}

QuantumStateView::QuantumStateView(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0 || std::abs(amplitudes_.norm() - 1.0) > kUnitNormTol) {
    throw Error(ErrorCode::InvalidArgument, "state amplitudes are not unit norm");
  }
}

QuantumStateView QuantumStateView::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n >= kZeroNorm)) {
    throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  }
  return QuantumStateView(v / n);
}

double QuantumStateView::distance(const QuantumStateView& other) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::InvalidArgument, "state dimension mismatch");
  }
  return (amplitudes_ - other.amplitudes_).norm();
}

}  // namespace matfunc
