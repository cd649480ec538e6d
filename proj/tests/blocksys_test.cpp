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

#include "matfunc/blocksys.hpp"

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"
#include "matfunc/instances.hpp"

namespace matfunc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no matfunc::Error was thrown";
  return ErrorCode::InvalidArgument;
}

TEST(AssembleBlockdiag, ScalarZeroMatrix) {
  const ComplexMatrix ap = assemble_blockdiag(ComplexMatrix::Zero(1, 1), 1.5, 2);
  ASSERT_EQ(ap.rows(), 2);
  EXPECT_EQ(ap(0, 0), Complex(1.0));
  EXPECT_EQ(ap(1, 1), Complex(-1.0));
  EXPECT_EQ(ap(0, 1), Complex(0.0));
}

TEST(AssembleBlockdiag, SingleNode) {
  const ComplexMatrix ap = assemble_blockdiag(ComplexMatrix::Identity(2, 2), 2.0, 1);
  EXPECT_LE((ap - 0.5 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(AssembleBlockdiag, BlocksAndZeros) {
  SplitMix64 rng(31);
  const ComplexMatrix a = random_contraction(rng, 3, false);
  const ComplexMatrix ap = assemble_blockdiag(a, 1.4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t kk = 0; kk < 4; ++kk) {
      const ComplexMatrix blk = ap.block(3 * k, 3 * kk, 3, 3);
      if (k != kk) {
        EXPECT_EQ(blk.cwiseAbs().maxCoeff(), 0.0);
      } else {
        const ComplexMatrix expected =
            unit_root(static_cast<std::int64_t>(k), 4) * ComplexMatrix::Identity(3, 3) - a / 1.4;
        EXPECT_LE((blk - expected).cwiseAbs().maxCoeff(), 1e-15);
      }
    }
  }
}

TEST(AssembleBlockdiag, SizeCap) {
  EXPECT_EQ(code_of([] { assemble_blockdiag(ComplexMatrix::Zero(4, 4), 1.5, 8192); }),
            ErrorCode::SizeCap);
  ::setenv("MATFUNC_SIZE_CAP", "8", 1);
  EXPECT_EQ(code_of([] { assemble_blockdiag(ComplexMatrix::Zero(4, 4), 1.5, 4); }),
            ErrorCode::SizeCap);
  EXPECT_NO_THROW(assemble_blockdiag(ComplexMatrix::Zero(4, 4), 1.5, 2));
  ::unsetenv("MATFUNC_SIZE_CAP");
  EXPECT_EQ(size_cap(), kDefaultSizeCap);
}

TEST(AssembleRhs, Stacking) {
  ComplexVector b(2);
  b << 1.0, 0.0;
  EXPECT_EQ(assemble_rhs(b, 1), b);
  ComplexVector expected(4);
  expected << 1.0, 0.0, 1.0, 0.0;
  EXPECT_EQ(assemble_rhs(b, 2), expected);
}

TEST(AssembleRhs, OverlapWithFirstNode) {
  SplitMix64 rng(32);
  const ComplexVector b = random_vector(rng, 3).normalized();
  for (std::size_t m : {1, 2, 4, 8}) {
    const ComplexVector bp = assemble_rhs(b, m).normalized();
    ComplexVector zero_k = ComplexVector::Zero(bp.size());
    zero_k.head(3) = b;
    EXPECT_NEAR(std::abs(zero_k.dot(bp)), 1.0 / std::sqrt(static_cast<double>(m)), 1e-15);
  }
}

TEST(ScaleSystem, NormAndBoundary) {
  SplitMix64 rng(33);
  const ComplexMatrix a = random_contraction(rng, 4, true);
  for (double beta : {1.2, 1.5, 2.0}) {
    const ComplexMatrix ap = assemble_blockdiag(a, beta, 4);
    EXPECT_LE(spectral_norm(scale_system(ap, 2.0, beta)), 1.0 + 1e-9);
    EXPECT_NO_THROW(scale_system(ap, 1.0 + 1.0 / beta, beta));
    EXPECT_EQ(code_of([&] { scale_system(ap, 1.0 + 1.0 / beta - 1e-6, beta); }),
              ErrorCode::BadScale);
  }
}

TEST(ScaleSystem, SolutionStateUnchanged) {
  SplitMix64 rng(34);
  const ComplexMatrix a = random_contraction(rng, 3, false);
  const ComplexMatrix ap = assemble_blockdiag(a, 1.5, 4);
  const ComplexVector bp = assemble_rhs(random_vector(rng, 3), 4);
  const ComplexVector x1 = lu_solve(ap, bp).normalized();
  const ComplexVector x2 = lu_solve(scale_system(ap, 2.0, 1.5), bp).normalized();
  EXPECT_LE((x1 - x2).norm(), 1e-10);
}

TEST(ScaleSystem, BlockForm) {
  SplitMix64 rng(35);
  BlockOracle oracle(SparseOracle::from_dense(random_contraction(rng, 3, false),
                                              random_vector(rng, 3)),
                     4, 1.5);
  const BlockDiagonal bd = gather_blocks(oracle);
  const BlockDiagonal half = scale_system(bd, 2.0, 1.5);
  EXPECT_LE((half.dense() - bd.dense() / 2.0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(HermitianDilation, IdentityGivesZeroThenB) {
  ComplexVector b(2);
  b << Complex(0.3, 1.0), -2.0;
  const auto [big, rhs] = hermitian_dilation(ComplexMatrix::Identity(2, 2), b);
  const ComplexVector sol = lu_solve(big, rhs);
  EXPECT_LE(sol.head(2).norm(), 1e-15);
  EXPECT_LE((sol.tail(2) - b).norm(), 1e-15);
}

TEST(HermitianDilation, ReproducesDirectSolve) {
  SplitMix64 rng(36);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix a = random_matrix(rng, 5);
    const ComplexVector b = random_vector(rng, 5);
    const auto [big, rhs] = hermitian_dilation(a, b);
    EXPECT_EQ((big - big.adjoint()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE((lu_solve(big, rhs).tail(5) - lu_solve(a, b)).norm(), 1e-9);
  }
}

TEST(ConditionBounds, Values) {
  const ConditionBounds two = condition_bounds(2.0);
  EXPECT_DOUBLE_EQ(two.norm, 1.5);
  EXPECT_DOUBLE_EQ(two.inverse_norm, 2.0);
  EXPECT_DOUBLE_EQ(two.condition, 4.0);
  const ConditionBounds c = condition_bounds(1.25);
  EXPECT_NEAR(c.norm, 1.8, 1e-15);
  EXPECT_NEAR(c.inverse_norm, 5.0, 1e-14);
  EXPECT_NEAR(c.condition, 10.0, 1e-13);
  const ConditionBounds big = condition_bounds(1e12);
  EXPECT_NEAR(big.norm, 1.0, 1e-11);
  EXPECT_NEAR(big.inverse_norm, 1.0, 1e-11);
  EXPECT_NEAR(big.condition, 2.0, 1e-11);
}

TEST(ConditionBounds, HoldOnRandomInstances) {
  SplitMix64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix a = random_contraction(rng, 2 + i % 4, i % 2 == 0);
    for (double beta : {1.2, 1.5, 2.0}) {
      for (std::size_t m : {2, 4, 8}) {
        const ComplexMatrix ap = assemble_blockdiag(a, beta, m);
        const ConditionBounds cb = condition_bounds(beta);
        const double n1 = spectral_norm(ap);
        const double n2 = spectral_norm(ap.inverse());
        EXPECT_LE(n1, cb.norm + 1e-9);
        EXPECT_LE(n2, cb.inverse_norm + 1e-9);
        EXPECT_LT(n1 * n2, cb.condition + 1e-9);
      }
    }
  }
}

TEST(SparseOracle, PatternKeepsZeroDiagonal) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 2) = 0.5;
  SparseOracle o = SparseOracle::from_dense(a, ComplexVector::Ones(3));
  EXPECT_EQ(o.nonzeros(), 4u);
  EXPECT_EQ(o.sparsity(), 2u);
  EXPECT_EQ(o.position(2, 0), 0u);
  EXPECT_EQ(o.position(2, 1), 2u);
  EXPECT_FALSE(o.position(2, 2).has_value());
  EXPECT_EQ(o.position(1, 0), 1u);
  EXPECT_EQ(o.entry(0, 2), Complex(0.5));
  EXPECT_EQ(o.entry(1, 1), Complex(0.0));
  EXPECT_EQ(o.entry(2, 0), Complex(0.0));
  EXPECT_EQ(o.counts().entry, 3u);
  EXPECT_EQ(o.counts().position, 4u);
  const QuantumStateView b = o.rhs_state();
  EXPECT_NEAR(b[0].real(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(o.counts().rhs, 1u);
}

TEST(BlockOracle, EntriesMatchDenseAssembly) {
  SplitMix64 rng(38);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m : {1, 2, 4}) {
      ComplexMatrix a = random_contraction(rng, n, false);
      if (n > 2) a(1, 0) = 0.0;
      const ComplexMatrix dense = assemble_blockdiag(a, 1.6, m);
      BlockOracle o(SparseOracle::from_dense(a, random_vector(rng, n)), m, 1.6);
      for (std::size_t i = 0; i < n * m; ++i) {
        for (std::size_t j = 0; j < n * m; ++j) {
          EXPECT_EQ(o.entry(i, j), dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
      }
    }
  }
}

TEST(BlockOracle, OneBaseQueryPerDiagonalBlockEntry) {
  SplitMix64 rng(39);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m : {1, 2, 4}) {
      BlockOracle o(SparseOracle::from_dense(random_contraction(rng, n, false),
                                             random_vector(rng, n)),
                    m, 1.3);
      std::uint64_t q = 0;
      for (std::size_t i = 0; i < n * m; ++i) {
        for (std::size_t j = 0; j < n * m; ++j) {
          const auto before = o.base().counts().entry;
          o.entry(i, j);
          const bool diag = i / n == j / n;
          EXPECT_EQ(o.base().counts().entry - before, diag ? 1u : 0u);
          q += diag ? 1 : 0;
        }
      }
      EXPECT_EQ(o.base().counts().entry, q);
      EXPECT_EQ(o.counts().entry, n * m * n * m);
    }
  }
}

TEST(BlockOracle, PositionsEnumerateThePattern) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 1) = 0.3;
  a(2, 1) = -0.2;
  BlockOracle o(SparseOracle::from_dense(a, ComplexVector::Ones(3)), 2, 1.5);
  // Column (k=1, j=1) lists rows 0, 1, 2 of block 1, i.e. 3, 4, 5.
  EXPECT_EQ(o.position(4, 0), 3u);
  EXPECT_EQ(o.position(4, 1), 4u);
  EXPECT_EQ(o.position(4, 2), 5u);
  EXPECT_FALSE(o.position(4, 3).has_value());
  EXPECT_EQ(o.position(3, 0), 3u);
  EXPECT_FALSE(o.position(3, 1).has_value());
}

TEST(BlockOracle, RhsIsUniformOverNodes) {
  ComplexVector b(2);
  b << 3.0, 4.0;
  BlockOracle o(SparseOracle::from_dense(ComplexMatrix::Zero(2, 2), b), 4, 1.5);
  const QuantumStateView s = o.rhs_state();
  ASSERT_EQ(s.dim(), 8u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(s[2 * k].real(), 0.6 / 2.0, 1e-15);
    EXPECT_NEAR(s[2 * k + 1].real(), 0.8 / 2.0, 1e-15);
  }
  EXPECT_EQ(o.base().counts().rhs, 1u);
}

TEST(BlockOracle, GatherMatchesAssembly) {
  SplitMix64 rng(40);
  const ComplexMatrix a = random_contraction(rng, 5, false);
  BlockOracle o(SparseOracle::from_dense(a, random_vector(rng, 5)), 8, 1.7, 2.0);
  const BlockDiagonal bd = gather_blocks(o);
  EXPECT_LE((bd.dense() - assemble_blockdiag(a, 1.7, 8) / 2.0).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_EQ(o.base().counts().entry, 8u * 25u);
}

TEST(BlockOracle, Validation) {
  const SparseOracle base = SparseOracle::from_dense(ComplexMatrix::Identity(2, 2), ComplexVector::Ones(2));
  EXPECT_EQ(code_of([&] { BlockOracle(base, 3, 1.5); }), ErrorCode::BadM);
  EXPECT_EQ(code_of([&] { BlockOracle(base, 4, 0.9); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace matfunc
