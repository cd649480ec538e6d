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

#include <Eigen/Dense>

namespace matfunc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class FunctionSpec;

inline constexpr double kDefaultTolerance = 1e-10;

bool all_finite(const ComplexMatrix& m);

/// Dense LU solve with partial pivoting. Throws SingularMatrix when a pivot
/// falls below 1e-13 times the largest entry magnitude of `a`.
ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b);
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest singular value by power iteration on A^H A.
///
/// The start vector is the normalized all-ones vector with 1e-3 added to its
/// first entry, so results do not depend on any random state. Iteration stops
/// once the estimate changes by less than `rel_tol` relative to itself.
double spectral_norm(const ComplexMatrix& a, double rel_tol = kDefaultTolerance,
                     int max_iterations = 10000);

/// Reference f(A)b from partial sums of the power series. Terms are added
/// until the analytic tail bound B (|A|/R)^J / (1 - |A|/R) |b| drops below
/// `tol`, so the returned vector is within `tol` of f(A)b.
ComplexVector taylor_apply(const FunctionSpec& fs, const ComplexMatrix& a,
                           const ComplexVector& b, double tol);

/// Dense f(A), columnwise through taylor_apply.
ComplexMatrix taylor_matrix(const FunctionSpec& fs, const ComplexMatrix& a,
                            double tol);

/// || u/|u| - v/|v| ||, always in [0, 2].
double normalized_distance(const ComplexVector& u, const ComplexVector& v);

/// A unit-norm amplitude vector. Construction fails unless the norm is within
/// 1e-12 of one.
class QuantumStateView {
 public:
  explicit QuantumStateView(ComplexVector amplitudes);

  /// Normalizes `v`; throws ZeroVector when |v| is below 1e-300.
  static QuantumStateView normalized(const ComplexVector& v);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(amplitudes_.size());
  }
  Complex operator[](std::size_t i) const {
    return amplitudes_(static_cast<Eigen::Index>(i));
  }

  /// Euclidean distance between the two amplitude vectors.
  double distance(const QuantumStateView& other) const;

 private:
  ComplexVector amplitudes_;
};

}  // namespace matfunc
