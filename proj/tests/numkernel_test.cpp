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

#include <cmath>
#include <numbers>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "matfunc/error.hpp"
#include "matfunc/function_spec.hpp"
#include "matfunc/instances.hpp"

namespace matfunc {
namespace {

ComplexVector vec(std::initializer_list<Complex> v) {
  ComplexVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& x : v) out(i++) = x;
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no matfunc::Error was thrown";
  return ErrorCode::InvalidArgument;
}

TEST(LuSolve, IdentitySystem) {
  const ComplexVector x = lu_solve(ComplexMatrix::Identity(2, 2), vec({1.0, 2.0}));
  EXPECT_EQ(x, vec({1.0, 2.0}));
}

TEST(LuSolve, DiagonalScaling) {
  const ComplexVector x = lu_solve(2.0 * ComplexMatrix::Identity(2, 2), vec({1.0, 0.0}));
  EXPECT_NEAR(std::abs(x(0) - 0.5), 0.0, 1e-15);
  EXPECT_EQ(x(1), Complex(0.0));
}

TEST(LuSolve, RandomWellConditionedResidual) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a =
        random_matrix(rng, 8) + 4.0 * ComplexMatrix::Identity(8, 8);
    const ComplexVector b = random_vector(rng, 8);
    const ComplexVector x = lu_solve(a, b);
    EXPECT_LE((a * x - b).norm(), 1e-10 * b.norm());
  }
}

TEST(LuSolve, SingularPivotIsReported) {
  ComplexMatrix a(2, 2);
  a << 1.0, 2.0, 2.0, 4.0;
  EXPECT_EQ(code_of([&] { lu_solve(a, vec({1.0, 1.0})); }), ErrorCode::SingularMatrix);
  EXPECT_EQ(code_of([&] { lu_solve(ComplexMatrix(ComplexMatrix::Zero(3, 3)), ComplexVector(ComplexVector::Ones(3))); }),
            ErrorCode::SingularMatrix);
}

TEST(LuSolve, DimensionMismatch) {
  EXPECT_EQ(code_of([] { lu_solve(ComplexMatrix(ComplexMatrix::Identity(2, 2)), ComplexVector(ComplexVector::Ones(3))); }),
            ErrorCode::InvalidArgument);
}

TEST(SpectralNorm, Identity) { EXPECT_NEAR(spectral_norm(ComplexMatrix::Identity(4, 4)), 1.0, 1e-15); }

TEST(SpectralNorm, Diagonal) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 0.5;
  a(1, 1) = -0.25;
  EXPECT_NEAR(spectral_norm(a), 0.5, 1e-15);
}

TEST(SpectralNorm, ZeroMatrix) { EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(3, 3)), 0.0); }

TEST(SpectralNorm, MatchesSvdOnRandomMatrices) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexMatrix a = random_matrix(rng, 8);
    if (trial % 2) a = (a + a.adjoint()).eval();  // close top singular values are common here
    const double svd = Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
    EXPECT_NEAR(spectral_norm(a), svd, 1e-8 * svd);
  }
}

TEST(SpectralNorm, Homogeneity) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 5);
    const Complex alpha(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
    EXPECT_NEAR(spectral_norm(alpha * a), std::abs(alpha) * spectral_norm(a), 1e-9);
  }
}

TEST(SpectralNorm, RejectsNonFinite) {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  a(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of([&] { spectral_norm(a); }), ErrorCode::InvalidArgument);
}

TEST(SpectralNorm, IterationCapRaisesNoConvergence) {
  SplitMix64 rng(5);
  const ComplexMatrix a = random_matrix(rng, 6);
  EXPECT_EQ(code_of([&] { spectral_norm(a, 1e-10, 1); }), ErrorCode::NoConvergence);
}

TEST(TaylorApply, ExpOfZeroIsIdentity) {
  const ComplexVector b = vec({0.3, Complex(0.1, -0.7)});
  const ComplexVector v = taylor_apply(FunctionSpec::exp(2.0), ComplexMatrix::Zero(2, 2), b, 1e-12);
  EXPECT_LE((v - b).norm(), 1e-12);
}

TEST(TaylorApply, IdentityFunctionMultiplies) {
  SplitMix64 rng(1);
  const ComplexMatrix a = random_contraction(rng, 4, false);
  const ComplexVector b = random_vector(rng, 4);
  const FunctionSpec z = FunctionSpec::polynomial({0.0, 1.0}, 2.0, 2.0);
  EXPECT_LE((taylor_apply(z, a, b, 1e-12) - a * b).norm(), 1e-12);
}

TEST(TaylorApply, ExpOfInvolution) {
  ComplexMatrix a(2, 2);
  a << 0.0, 0.5, 0.5, 0.0;
  const ComplexVector v = taylor_apply(FunctionSpec::exp(2.0), a, vec({1.0, 0.0}), 1e-12);
  EXPECT_NEAR(std::abs(v(0) - std::cosh(0.5)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v(1) - std::sinh(0.5)), 0.0, 1e-12);
}

TEST(TaylorApply, CosAndSinOfInvolution) {
  // A^2 = I/4, so cos(A) = cos(1/2) I and sin(A) = 2 sin(1/2) A.
  ComplexMatrix a(2, 2);
  a << 0.0, 0.5, 0.5, 0.0;
  const ComplexVector b = vec({1.0, 0.0});
  const ComplexVector c = taylor_apply(FunctionSpec::cos(2.0), a, b, 1e-13);
  const ComplexVector s = taylor_apply(FunctionSpec::sin(2.0), a, b, 1e-13);
  EXPECT_NEAR(std::abs(c(0) - std::cos(0.5)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(c(1)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(s(0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(s(1) - std::sin(0.5)), 0.0, 1e-13);
}

TEST(TaylorApply, GeometricMatchesResolvent) {
  SplitMix64 rng(8);
  const ComplexMatrix a = random_contraction(rng, 5, false);
  const ComplexVector b = random_vector(rng, 5);
  // 1/(1 - z/3) applied to A is 3 (3I - A)^{-1}.
  const ComplexVector expected =
      3.0 * lu_solve(3.0 * ComplexMatrix::Identity(5, 5) - a, b);
  EXPECT_LE((taylor_apply(FunctionSpec::geometric(3.0, 2.0), a, b, 1e-13) - expected).norm(),
            1e-12);
}

TEST(TaylorApply, HalvingToleranceIsConsistent) {
  SplitMix64 rng(9);
  for (const auto& fs : catalog_functions()) {
    const ComplexMatrix a = random_contraction(rng, 6, true);
    const ComplexVector b = random_vector(rng, 6);
    for (double tol : {1e-3, 1e-6, 1e-9, 1e-12}) {
      const ComplexVector v1 = taylor_apply(fs, a, b, tol);
      const ComplexVector v2 = taylor_apply(fs, a, b, tol / 2);
      EXPECT_LE((v1 - v2).norm(), tol + tol / 2) << fs.name() << " tol " << tol;
    }
  }
}

TEST(TaylorApply, NormAtRadiusIsDivergent) {
  const ComplexMatrix a = 2.0 * ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(code_of([&] { taylor_apply(FunctionSpec::exp(2.0), a, vec({1.0, 0.0}), 1e-10); }),
            ErrorCode::DivergentSeries);
}

TEST(TaylorApply, MatrixFormMatchesColumns) {
  SplitMix64 rng(4);
  const ComplexMatrix a = random_contraction(rng, 4, false);
  const ComplexMatrix fa = taylor_matrix(FunctionSpec::cos(2.0), a, 1e-13);
  for (Eigen::Index j = 0; j < 4; ++j) {
    const ComplexVector e = ComplexVector::Unit(4, j);
    EXPECT_LE((fa.col(j) - taylor_apply(FunctionSpec::cos(2.0), a, e, 1e-13)).norm(), 1e-12);
  }
}

TEST(NormalizedDistance, SameDirection) {
  const ComplexVector v = vec({1.0, Complex(2.0, -1.0)});
  EXPECT_NEAR(normalized_distance(v, v), 0.0, 1e-15);
  EXPECT_NEAR(normalized_distance(v, 3.0 * v), 0.0, 1e-15);
}

TEST(NormalizedDistance, OrthonormalPair) {
  EXPECT_NEAR(normalized_distance(vec({1.0, 0.0}), vec({0.0, 1.0})), std::numbers::sqrt2,
              1e-15);
}

TEST(NormalizedDistance, OppositeIsTwo) {
  EXPECT_NEAR(normalized_distance(vec({1.0, 0.0}), vec({-2.0, 0.0})), 2.0, 1e-15);
}

TEST(NormalizedDistance, ZeroVectorRejected) {
  EXPECT_EQ(code_of([] { normalized_distance(vec({0.0, 0.0}), vec({1.0, 0.0})); }),
            ErrorCode::ZeroVector);
}

TEST(NormalizedDistance, TwiceRelativeDifferenceBound) {
  SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.next() % 8;
    const ComplexVector v = random_vector(rng, n);
    if (v.norm() <= 1e-6) continue;
    const ComplexVector w = v + std::pow(10.0, rng.uniform(-6.0, 1.0)) * random_vector(rng, n);
    EXPECT_LE(normalized_distance(v, w), 2.0 * (v - w).norm() / v.norm()) << "pair " << i;
  }
}

TEST(QuantumStateView, RequiresUnitNorm) {
  EXPECT_NO_THROW(QuantumStateView(vec({0.6, Complex(0.0, 0.8)})));
  EXPECT_THROW(QuantumStateView(vec({1.0, 1.0})), Error);
  const QuantumStateView s = QuantumStateView::normalized(vec({3.0, 4.0}));
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].real(), 0.8, 1e-15);
  EXPECT_NEAR(s.distance(s), 0.0, 0.0);
}

}  // namespace
}  // namespace matfunc
