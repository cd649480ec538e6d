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
#include <optional>
#include <utility>
#include <vector>

#include "matfunc/numkernel.hpp"

namespace matfunc {

inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 14;

/// Cap on N*M, overridable through the MATFUNC_SIZE_CAP environment variable.
std::size_t size_cap();

struct QueryCounts {
  std::uint64_t entry = 0;     // O_A
  std::uint64_t position = 0;  // O_nu
  std::uint64_t rhs = 0;       // P_b
};

/// Classical stand-in for sparse-access oracles of a d-sparse matrix A and
/// the state-preparation oracle of b. Every call is counted.
///
/// The structural pattern holds every nonzero entry and every diagonal entry,
/// including numerically zero diagonals. Counters are plain integers, so an
/// instance must stay on one thread.
class SparseOracle {
 public:
  /// `b` need not be normalized; rhs_state() returns b / |b|.
  static SparseOracle from_dense(const ComplexMatrix& a, const ComplexVector& b);

  std::size_t dim() const noexcept { return dim_; }
  /// Largest number of structural nonzeros in any row or column.
  std::size_t sparsity() const noexcept { return sparsity_; }
  std::size_t nonzeros() const noexcept;

  /// A_ij; zero for positions outside the pattern.
  Complex entry(std::size_t i, std::size_t j);
  /// Row index of the l-th structural nonzero of column j, if it exists.
  std::optional<std::size_t> position(std::size_t j, std::size_t l);
  QuantumStateView rhs_state();

  const QueryCounts& counts() const noexcept { return counts_; }

 private:
  struct Slot {
    std::size_t row;
    Complex value;
  };

  std::size_t dim_ = 0;
  std::size_t sparsity_ = 0;
  std::vector<std::vector<Slot>> columns_;  // sorted by row
  ComplexVector rhs_;
  QueryCounts counts_;
};

/// Oracles for the block-diagonal A' (optionally divided by `scale`) built on
/// top of a SparseOracle. Flat indices are k*N + i.
class BlockOracle {
 public:
  BlockOracle(SparseOracle base, std::size_t nodes, double beta, double scale = 1.0);

  std::size_t dim() const noexcept { return base_.dim() * nodes_; }
  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t block_dim() const noexcept { return base_.dim(); }
  double beta() const noexcept { return beta_; }
  double scale() const noexcept { return scale_; }

  /// (delta_ij e^{i t_k} - A_ij / beta) / scale when k == k', else 0.
  /// Off-diagonal blocks are answered without touching the base oracle.
  Complex entry(std::size_t row, std::size_t col);
  /// (k, nu(j, l)) flattened, for column (k, j).
  std::optional<std::size_t> position(std::size_t col, std::size_t l);
  /// (H^{(x)m} |0>) (x) |b>
  QuantumStateView rhs_state();

  const QueryCounts& counts() const noexcept { return counts_; }
  SparseOracle& base() noexcept { return base_; }
  const SparseOracle& base() const noexcept { return base_; }

 private:
  SparseOracle base_;
  std::size_t nodes_;
  double beta_;
  double scale_;
  QueryCounts counts_;
};

/// A' kept as its M diagonal blocks.
struct BlockDiagonal {
  std::vector<ComplexMatrix> blocks;

  std::size_t block_dim() const {
    return blocks.empty() ? 0 : static_cast<std::size_t>(blocks.front().rows());
  }
  std::size_t dim() const { return block_dim() * blocks.size(); }
  ComplexMatrix dense() const;
};

/// Materializes every block of A' through position/entry queries.
BlockDiagonal gather_blocks(BlockOracle& oracle);

/// Dense N*M x N*M A' with blocks e^{i t_k} I - A/beta. Throws SizeCap.
ComplexMatrix assemble_blockdiag(const ComplexMatrix& a, double beta, std::size_t nodes);

/// M stacked copies of b.
ComplexVector assemble_rhs(const ComplexVector& b, std::size_t nodes);

/// A'/c; requires c >= 1 + 1/beta so the result has norm at most one.
ComplexMatrix scale_system(const ComplexMatrix& aprime, double c, double beta);
BlockDiagonal scale_system(const BlockDiagonal& aprime, double c, double beta);

/// [[0, A], [A^H, 0]] and (b, 0).
std::pair<ComplexMatrix, ComplexVector> hermitian_dilation(const ComplexMatrix& a,
                                                           const ComplexVector& b);

struct ConditionBounds {
  double norm;          // |A'| <= 1 + 1/beta
  double inverse_norm;  // |A'^{-1}| <= 1/(1 - 1/beta)
  double condition;     // kappa_{A'} < 2/(1 - 1/beta)
};

ConditionBounds condition_bounds(double beta);

}  // namespace matfunc
