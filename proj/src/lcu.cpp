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

#include "matfunc/lcu.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"

namespace matfunc {

namespace {

void require_pow2(std::size_t n, const char* what) {
  if (!is_power_of_two(n)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a power of two");
  }
}

std::size_t log2_exact(std::size_t n) {
  return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace

CoeffTable truncate(const FunctionSpec& fs, std::size_t order, double beta) {
  require_pow2(order, "truncation order");
  if (!(beta > 0.0) || !(beta < fs.radius())) {
    throw Error(ErrorCode::InvalidArgument, "beta must lie in (0, R)");
  }
  CoeffTable t;
  t.beta = beta;
  t.coeffs.reserve(order);
  double power = 1.0;
  for (std::size_t j = 0; j < order; ++j) {
    const Complex a = fs.coeff(j);
    t.coeffs.push_back(a);
    t.alpha += std::abs(a) * power;
    power *= beta;
  }
  if (!(t.alpha > 0.0)) {
    throw Error(ErrorCode::ZeroFunction, "all retained coefficients are zero");
  }
  t.ctilde = 1.0 / t.alpha;
  return t;
}

Complex weight(const CoeffTable& table, std::size_t k, std::size_t nodes) {
  if (k >= nodes) throw Error(ErrorCode::InvalidArgument, "node index out of range");
  Complex sum{0.0, 0.0};
  double power = 1.0;
  const auto kk = static_cast<std::int64_t>(k);
  for (std::size_t j = 0; j < table.coeffs.size(); ++j) {
    sum += table.coeffs[j] * power * unit_root(kk * static_cast<std::int64_t>(j), nodes);
    power *= table.beta;
  }
  return sum * unit_root(kk, nodes);
}

ComplexMatrix complete_unitary(const ComplexVector& column) {
  const Eigen::Index n = column.size();
  if (n == 0 || std::abs(column.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "column must be a unit vector");
  }
  // Reflection H with H (e^{i phi} e_0) = w, where e^{i phi} is the phase of w_0,
  // followed by the phase e^{i phi} on e_0.
  const double mag0 = std::abs(column(0));
  const Complex phase = mag0 > 0.0 ? column(0) / mag0 : Complex{1.0, 0.0};
  ComplexVector u = -column;
  u(0) += phase;
  ComplexMatrix h = ComplexMatrix::Identity(n, n);
  const double u_sq = u.squaredNorm();
  if (u_sq > 1e-30) h -= (2.0 / u_sq) * (u * u.adjoint());
  ComplexMatrix out = h;
  out.col(0) *= phase;
  return out;
}

WeightingUnitary::WeightingUnitary(ComplexMatrix prep, std::size_t nodes)
    : prep_(std::move(prep)), conj_prep_(prep_.conjugate()), nodes_(nodes) {
  require_pow2(nodes_, "node count");
  require_pow2(order(), "truncation order");
}

Complex WeightingUnitary::phase(std::size_t k, std::size_t j) const {
  return unit_root(static_cast<std::int64_t>(k) * static_cast<std::int64_t>(j + 1), nodes_);
}

ComplexMatrix WeightingUnitary::block(std::size_t k) const {
  if (k >= nodes_) throw Error(ErrorCode::InvalidArgument, "node index out of range");
  const auto l = static_cast<Eigen::Index>(order());
  ComplexVector diag(l);
  for (Eigen::Index j = 0; j < l; ++j) diag(j) = phase(k, static_cast<std::size_t>(j));
  return conj_prep_.adjoint() * diag.asDiagonal() * prep_;
}

ComplexMatrix WeightingUnitary::assemble() const {
  const auto l = static_cast<Eigen::Index>(order());
  const auto total = l * static_cast<Eigen::Index>(nodes_);
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (std::size_t k = 0; k < nodes_; ++k) {
    const auto off = static_cast<Eigen::Index>(k) * l;
    out.block(off, off, l, l) = block(k);
  }
  return out;
}

WeightingUnitary build_unitary(const CoeffTable& table, std::size_t nodes) {
  const auto l = static_cast<Eigen::Index>(table.order());
  if (!(table.alpha > 0.0)) throw Error(ErrorCode::ZeroFunction, "alpha must be positive");
  ComplexVector w(l);
  double power = 1.0;
  for (Eigen::Index j = 0; j < l; ++j) {
    w(j) = std::sqrt(table.coeffs[static_cast<std::size_t>(j)] * power / table.alpha);
    power *= table.beta;
  }
  // Guards the unit-norm check against rounding in alpha.
  w /= w.norm();
  return WeightingUnitary(complete_unitary(w), nodes);
}

ComplexVector phase_diagonal(std::size_t nodes, std::size_t order) {
  require_pow2(nodes, "node count");
  require_pow2(order, "truncation order");
  ComplexVector d(static_cast<Eigen::Index>(nodes * order));
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    for (std::size_t j = 0; j < order; ++j) {
      d(static_cast<Eigen::Index>(k * order + j)) =
          std::polar(1.0, theta * static_cast<double>(j + 1));
    }
  }
  return d;
}

ComplexVector phase_diagonal_from_factors(std::size_t nodes, std::size_t order) {
  require_pow2(nodes, "node count");
  require_pow2(order, "truncation order");
  const std::size_t m_bits = log2_exact(nodes);
  const std::size_t l_bits = log2_exact(order);
  const double m = static_cast<double>(nodes);
  ComplexVector d = ComplexVector::Ones(static_cast<Eigen::Index>(nodes * order));
  for (std::size_t k = 0; k < nodes; ++k) {
    for (std::size_t j = 0; j < order; ++j) {
      Complex acc{1.0, 0.0};
      for (std::size_t s = 0; s < m_bits; ++s) {
        for (std::size_t t = 0; t < l_bits; ++t) {
          if (((k >> s) & 1U) && ((j >> t) & 1U)) {
            acc *= std::polar(1.0, 2.0 * std::numbers::pi * std::ldexp(1.0, static_cast<int>(s + t)) / m);
          }
        }
      }
      // Per-node phase e^{i t_k}, itself a product of single-bit phases.
      for (std::size_t s = 0; s < m_bits; ++s) {
        if ((k >> s) & 1U) acc *= std::polar(1.0, 2.0 * std::numbers::pi * std::ldexp(1.0, static_cast<int>(s)) / m);
      }
      d(static_cast<Eigen::Index>(k * order + j)) = acc;
    }
  }
  return d;
}

std::size_t gate_count_estimate(std::size_t nodes, std::size_t order) {
  require_pow2(nodes, "node count");
  require_pow2(order, "truncation order");
  return 2 * order + log2_exact(nodes) * log2_exact(order);
}

}  // namespace matfunc
