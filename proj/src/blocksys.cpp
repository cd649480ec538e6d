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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"

namespace matfunc {

namespace {

void require_nodes(std::size_t nodes) {
  if (!is_power_of_two(nodes)) {
    throw Error(ErrorCode::BadM, "node count must be a power of two");
  }
}

void require_beta(double beta) {
  if (!(beta > 1.0)) throw Error(ErrorCode::InvalidArgument, "beta must exceed 1");
}

}  // namespace

std::size_t size_cap() {
  if (const char* env = std::getenv("MATFUNC_SIZE_CAP")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, "MATFUNC_SIZE_CAP must be a positive integer");
  }
  return kDefaultSizeCap;
}

SparseOracle SparseOracle::from_dense(const ComplexMatrix& a, const ComplexVector& b) {
  if (a.rows() != a.cols() || a.rows() == 0 || b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "oracle needs square A and matching b");
  }
  SparseOracle o;
  o.dim_ = static_cast<std::size_t>(a.rows());
  o.columns_.resize(o.dim_);
  std::vector<std::size_t> row_counts(o.dim_, 0);
  for (std::size_t j = 0; j < o.dim_; ++j) {
    for (std::size_t i = 0; i < o.dim_; ++i) {
      const Complex v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (i == j || v != Complex{0.0, 0.0}) {
        o.columns_[j].push_back({i, v});
        ++row_counts[i];
      }
    }
    o.sparsity_ = std::max(o.sparsity_, o.columns_[j].size());
  }
  o.sparsity_ = std::max(o.sparsity_, *std::max_element(row_counts.begin(), row_counts.end()));
  o.rhs_ = b;
  return o;
}

std::size_t SparseOracle::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

Complex SparseOracle::entry(std::size_t i, std::size_t j) {
  ++counts_.entry;
  if (i >= dim_ || j >= dim_) {
    throw Error(ErrorCode::InvalidArgument, "entry index out of range");
  }
  const auto& col = columns_[j];
  const auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Slot& s, std::size_t row) { return s.row < row; });
  if (it != col.end() && it->row == i) return it->value;
  return {0.0, 0.0};
}

std::optional<std::size_t> SparseOracle::position(std::size_t j, std::size_t l) {
  ++counts_.position;
  if (j >= dim_) throw Error(ErrorCode::InvalidArgument, "column index out of range");
  if (l >= columns_[j].size()) return std::nullopt;
  return columns_[j][l].row;
}

QuantumStateView SparseOracle::rhs_state() {
  ++counts_.rhs;
  return QuantumStateView::normalized(rhs_);
}

BlockOracle::BlockOracle(SparseOracle base, std::size_t nodes, double beta, double scale)
    : base_(std::move(base)), nodes_(nodes), beta_(beta), scale_(scale) {
  require_nodes(nodes);
  require_beta(beta);
  if (!(scale > 0.0)) throw Error(ErrorCode::BadScale, "scale must be positive");
}

Complex BlockOracle::entry(std::size_t row, std::size_t col) {
  ++counts_.entry;
  const std::size_t n = base_.dim();
  if (row >= dim() || col >= dim()) {
    throw Error(ErrorCode::InvalidArgument, "block entry index out of range");
  }
  const std::size_t k = row / n;
  const std::size_t i = row % n;
  const std::size_t kk = col / n;
  const std::size_t j = col % n;
  if (k != kk) return {0.0, 0.0};
  Complex value = -base_.entry(i, j) / beta_;
  if (i == j) value += unit_root(static_cast<std::int64_t>(k), nodes_);
  return value / scale_;
}

std::optional<std::size_t> BlockOracle::position(std::size_t col, std::size_t l) {
  ++counts_.position;
  const std::size_t n = base_.dim();
  if (col >= dim()) throw Error(ErrorCode::InvalidArgument, "block column out of range");
  const auto row = base_.position(col % n, l);
  if (!row) return std::nullopt;
  return (col / n) * n + *row;
}

QuantumStateView BlockOracle::rhs_state() {
  ++counts_.rhs;
  const QuantumStateView b = base_.rhs_state();
  const double amp = 1.0 / std::sqrt(static_cast<double>(nodes_));
  ComplexVector out(static_cast<Eigen::Index>(dim()));
  const auto n = static_cast<Eigen::Index>(base_.dim());
  for (std::size_t k = 0; k < nodes_; ++k) {
    out.segment(static_cast<Eigen::Index>(k) * n, n) = amp * b.amplitudes();
  }
  return QuantumStateView(std::move(out));
}

ComplexMatrix BlockDiagonal::dense() const {
  const auto n = static_cast<Eigen::Index>(block_dim());
  const auto total = static_cast<Eigen::Index>(dim());
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto off = static_cast<Eigen::Index>(k) * n;
    out.block(off, off, n, n) = blocks[k];
  }
  return out;
}

BlockDiagonal gather_blocks(BlockOracle& oracle) {
  const std::size_t n = oracle.block_dim();
  const std::size_t d = oracle.base().sparsity();
  BlockDiagonal out;
  out.blocks.reserve(oracle.nodes());
  for (std::size_t k = 0; k < oracle.nodes(); ++k) {
    ComplexMatrix block = ComplexMatrix::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = k * n + j;
      for (std::size_t l = 0; l < d; ++l) {
        const auto row = oracle.position(col, l);
        if (!row) break;
        block(static_cast<Eigen::Index>(*row - k * n), static_cast<Eigen::Index>(j)) =
            oracle.entry(*row, col);
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

ComplexMatrix assemble_blockdiag(const ComplexMatrix& a, double beta, std::size_t nodes) {
  require_nodes(nodes);
  require_beta(beta);
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "matrix must be square and nonempty");
  }
  const auto n = static_cast<std::size_t>(a.rows());
  if (n * nodes > size_cap()) {
    throw Error(ErrorCode::SizeCap, "N*M = " + std::to_string(n * nodes) +
                                        " exceeds the size cap");
  }
  BlockDiagonal bd;
  bd.blocks.reserve(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    ComplexMatrix block = -a / beta;
    block.diagonal().array() += unit_root(static_cast<std::int64_t>(k), nodes);
    bd.blocks.push_back(std::move(block));
  }
  return bd.dense();
}

ComplexVector assemble_rhs(const ComplexVector& b, std::size_t nodes) {
  require_nodes(nodes);
  const Eigen::Index n = b.size();
  ComplexVector out(n * static_cast<Eigen::Index>(nodes));
  for (std::size_t k = 0; k < nodes; ++k) {
    out.segment(static_cast<Eigen::Index>(k) * n, n) = b;
  }
  return out;
}

namespace {

void require_scale(double c, double beta) {
  require_beta(beta);
  if (!(c >= 1.0 + 1.0 / beta)) {
    throw Error(ErrorCode::BadScale, "scale must be at least 1 + 1/beta");
  }
}

}  // namespace

ComplexMatrix scale_system(const ComplexMatrix& aprime, double c, double beta) {
  require_scale(c, beta);
  return aprime / c;
}

BlockDiagonal scale_system(const BlockDiagonal& aprime, double c, double beta) {
  require_scale(c, beta);
  BlockDiagonal out;
  out.blocks.reserve(aprime.blocks.size());
  for (const auto& b : aprime.blocks) out.blocks.push_back(b / c);
  return out;
}

std::pair<ComplexMatrix, ComplexVector> hermitian_dilation(const ComplexMatrix& a,
                                                           const ComplexVector& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "dilation needs square A and matching b");
  }
  const Eigen::Index n = a.rows();
  ComplexMatrix big = ComplexMatrix::Zero(2 * n, 2 * n);
  big.topRightCorner(n, n) = a;
  big.bottomLeftCorner(n, n) = a.adjoint();
  ComplexVector rhs = ComplexVector::Zero(2 * n);
  rhs.head(n) = b;
  return {std::move(big), std::move(rhs)};
}

ConditionBounds condition_bounds(double beta) {
  require_beta(beta);
  const double inv = 1.0 / beta;
  return {1.0 + inv, 1.0 / (1.0 - inv), 2.0 / (1.0 - inv)};
}

}  // namespace matfunc
