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

#include "matfunc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <tuple>
#include <ostream>

#include "matfunc/blocksys.hpp"
#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"
#include "matfunc/instances.hpp"
#include "matfunc/lcu.hpp"
#include "matfunc/pipeline.hpp"

namespace matfunc {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Collects "lhs <= rhs" comparisons; keeps the first failure and the largest
// lhs - rhs seen.
class Tally {
 public:
  void le(double lhs, double rhs, const std::string& where) {
    ++cases_;
    worst_ = std::max(worst_, lhs - rhs);
    if (!(lhs <= rhs) && failure_.empty()) {
      failure_ = where + ": " + fmt(lhs) + " > " + fmt(rhs);
    }
  }

  void holds(bool ok, const std::string& where) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = where;
  }

  InvariantOutcome outcome() const {
    if (!failure_.empty()) return {false, failure_};
    std::string detail = std::to_string(cases_) + " checks";
    if (worst_ > -std::numeric_limits<double>::infinity()) {
      detail += ", max(lhs - rhs) = " + fmt(worst_);
    }
    return {true, detail};
  }

 private:
  std::size_t cases_ = 0;
  double worst_ = -std::numeric_limits<double>::infinity();
  std::string failure_;
};

struct MatrixCase {
  std::string label;
  ComplexMatrix a;
};

// Half Hermitian, half not, N cycling through {4, 8, 16}, norm 1.
std::vector<MatrixCase> contour_matrices(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<MatrixCase> out;
  const std::size_t dims[] = {4, 8, 16};
  for (std::size_t i = 0; i < count; ++i) {
    const bool herm = i % 2 == 0;
    const std::size_t n = dims[(i / 2) % 3];
    out.push_back({(herm ? "herm" : "gen") + std::to_string(n) + "#" + std::to_string(i),
                   random_contraction(rng, n, herm)});
  }
  return out;
}

// numkernel ------------------------------------------------------------------

InvariantOutcome distance_lemma(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.next() % 8);
    const ComplexVector v = random_vector(rng, n);
    if (v.norm() <= 1e-6) continue;
    const double scale = std::pow(10.0, rng.uniform(-4.0, 1.0));
    const ComplexVector w = v + scale * random_vector(rng, n);
    t.le(normalized_distance(v, w), 2.0 * (v - w).norm() / v.norm(),
         "pair " + std::to_string(i));
  }
  return t.outcome();
}

InvariantOutcome cauchy_estimate(std::uint64_t) {
  Tally t;
  std::vector<FunctionSpec> specs = catalog_functions();
  specs.push_back(cubic_example());
  for (const auto& fs : specs) {
    for (std::size_t j = 0; j <= 64; ++j) {
      t.le(std::abs(fs.coeff(j)),
           fs.disk_max() / std::pow(fs.radius(), static_cast<double>(j)) + 1e-12,
           fs.name() + " j=" + std::to_string(j));
    }
  }
  return t.outcome();
}

InvariantOutcome taylor_halving(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix a = random_contraction(rng, 4 + 4 * (i % 2), i % 2 == 0);
    const ComplexVector b = random_vector(rng, static_cast<std::size_t>(a.rows()));
    for (const auto& fs : catalog_functions()) {
      for (double tol : {1e-4, 1e-8, 1e-12}) {
        const ComplexVector v1 = taylor_apply(fs, a, b, tol);
        const ComplexVector v2 = taylor_apply(fs, a, b, tol / 2);
        t.le((v1 - v2).norm(), tol + tol / 2, fs.name() + " tol=" + fmt(tol));
      }
    }
  }
  return t.outcome();
}

InvariantOutcome norm_homogeneity(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix a = random_matrix(rng, 2 + static_cast<std::size_t>(i % 7));
    const Complex alpha(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    t.le(std::abs(spectral_norm(alpha * a) - std::abs(alpha) * spectral_norm(a)), 1e-9,
         "matrix " + std::to_string(i));
  }
  return t.outcome();
}

// contour --------------------------------------------------------------------

struct ContourErrors {
  std::map<std::tuple<std::size_t, std::string, double, std::size_t>, double> error;
  std::map<std::tuple<std::size_t, std::string, double, std::size_t>, double> bound;
};

const ContourErrors& contour_errors(std::uint64_t seed) {
  static std::map<std::uint64_t, ContourErrors> cache;
  auto it = cache.find(seed);
  if (it != cache.end()) return it->second;
  ContourErrors out;
  const auto mats = contour_matrices(seed, 50);
  const FunctionSpec specs[] = {FunctionSpec::exp(2.0), FunctionSpec::cos(2.0),
                                FunctionSpec::geometric(3.0, 2.0)};
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const double norm_a = spectral_norm(mats[i].a);
    for (const auto& fs : specs) {
      const ComplexMatrix exact = taylor_matrix(fs, mats[i].a, 1e-14);
      for (double beta : {1.2, 1.5}) {
        for (std::size_t m : {4, 8, 16, 32}) {
          const ContourPlan plan(beta, m, 2, 0.0, fs.radius());
          const auto key = std::make_tuple(i, fs.name(), beta, m);
          out.error[key] = spectral_norm(exact - contour_matrix(fs, mats[i].a, plan));
          out.bound[key] = truncation_bound(fs, norm_a, plan);
        }
      }
    }
  }
  return cache.emplace(seed, std::move(out)).first->second;
}

InvariantOutcome contour_bound(std::uint64_t seed) {
  const ContourErrors& ce = contour_errors(seed);
  Tally t;
  for (const auto& [key, err] : ce.error) {
    const auto& [i, name, beta, m] = key;
    t.le(err, ce.bound.at(key) + 1e-9,
         "matrix " + std::to_string(i) + " " + name + " beta=" + fmt(beta) +
             " M=" + std::to_string(m));
  }
  return t.outcome();
}

InvariantOutcome contour_decay(std::uint64_t seed) {
  const ContourErrors& ce = contour_errors(seed);
  Tally t;
  for (const auto& [key, err] : ce.error) {
    const auto& [i, name, beta, m] = key;
    const auto next = std::make_tuple(i, name, beta, 2 * m);
    if (!ce.error.count(next)) continue;
    const double rho = std::max(1.0 / beta, beta / 2.0);
    t.le(ce.error.at(next),
         2.0 * err * (std::pow(rho, static_cast<double>(m)) + 1e-9),
         "matrix " + std::to_string(i) + " " + name + " beta=" + fmt(beta) +
             " M=" + std::to_string(m) + "->" + std::to_string(2 * m));
  }
  return t.outcome();
}

InvariantOutcome contour_indicator(std::uint64_t) {
  Tally t;
  for (std::size_t m : {2, 4, 8, 16}) {
    for (std::int64_t y = -64; y <= 64; ++y) {
      const double expected = y % static_cast<std::int64_t>(m) == 0 ? 1.0 : 0.0;
      t.holds(periodized_indicator(m, y) == expected,
              "M=" + std::to_string(m) + " y=" + std::to_string(y));
    }
  }
  return t.outcome();
}

InvariantOutcome contour_columnwise(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (int i = 0; i < 12; ++i) {
    const ComplexMatrix a = random_contraction(rng, 4 + 4 * (i % 3), i % 2 == 0);
    const ComplexVector b = random_vector(rng, static_cast<std::size_t>(a.rows()));
    for (const auto& fs : catalog_functions()) {
      const ContourPlan plan(1.4, 16, 2, 0.0, fs.radius());
      t.le((contour_apply(fs, a, b, plan) - contour_matrix(fs, a, plan) * b).norm(), 1e-10,
           fs.name() + " matrix " + std::to_string(i));
    }
  }
  return t.outcome();
}

// blocksys -------------------------------------------------------------------

struct NormCase {
  double beta;
  double norm;
  double inverse_norm;
};

const std::vector<NormCase>& block_norms(std::uint64_t seed) {
  static std::map<std::uint64_t, std::vector<NormCase>> cache;
  auto it = cache.find(seed);
  if (it != cache.end()) return it->second;
  SplitMix64 rng(seed ^ 0xb10c);
  std::vector<NormCase> out;
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix a = random_contraction(rng, 2 + 2 * (i % 3), i % 2 == 0);
    for (double beta : {1.2, 1.5, 2.0}) {
      for (std::size_t m : {2, 4, 8}) {
        const ComplexMatrix ap = assemble_blockdiag(a, beta, m);
        out.push_back({beta, spectral_norm(ap), spectral_norm(ap.inverse())});
      }
    }
  }
  return cache.emplace(seed, std::move(out)).first->second;
}

InvariantOutcome block_norm(std::uint64_t seed) {
  Tally t;
  for (const auto& c : block_norms(seed)) {
    t.le(c.norm, condition_bounds(c.beta).norm + 1e-9, "beta=" + fmt(c.beta));
  }
  return t.outcome();
}

InvariantOutcome block_inverse_norm(std::uint64_t seed) {
  Tally t;
  for (const auto& c : block_norms(seed)) {
    t.le(c.inverse_norm, condition_bounds(c.beta).inverse_norm + 1e-9,
         "beta=" + fmt(c.beta));
  }
  return t.outcome();
}

InvariantOutcome block_condition(std::uint64_t seed) {
  Tally t;
  for (const auto& c : block_norms(seed)) {
    // kappa_{A'} < 2 kappa'
    t.le(c.norm * c.inverse_norm, condition_bounds(c.beta).condition + 1e-9,
         "beta=" + fmt(c.beta));
  }
  return t.outcome();
}

InvariantOutcome block_oracle_entries(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m : {1, 2, 4}) {
      ComplexMatrix a = random_contraction(rng, n, false);
      if (n > 1) a(0, n - 1) = 0.0;  // exercise a hole in the pattern
      const double beta = 1.5;
      const ComplexMatrix dense = assemble_blockdiag(a, beta, m);
      BlockOracle oracle(SparseOracle::from_dense(a, random_vector(rng, n)), m, beta);
      for (std::size_t row = 0; row < n * m; ++row) {
        for (std::size_t col = 0; col < n * m; ++col) {
          t.holds(oracle.entry(row, col) == dense(static_cast<Eigen::Index>(row),
                                                  static_cast<Eigen::Index>(col)),
                  "N=" + std::to_string(n) + " M=" + std::to_string(m) + " entry (" +
                      std::to_string(row) + "," + std::to_string(col) + ")");
        }
      }
    }
  }
  return t.outcome();
}

InvariantOutcome block_query_accounting(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m : {1, 2, 4}) {
      const ComplexMatrix a = random_contraction(rng, n, false);
      BlockOracle oracle(SparseOracle::from_dense(a, random_vector(rng, n)), m, 1.3);
      std::uint64_t diagonal_calls = 0;
      for (std::size_t row = 0; row < n * m; ++row) {
        for (std::size_t col = 0; col < n * m; ++col) {
          const auto before = oracle.base().counts().entry;
          oracle.entry(row, col);
          const auto issued = oracle.base().counts().entry - before;
          const bool same_block = row / n == col / n;
          diagonal_calls += same_block ? 1 : 0;
          t.holds(issued == (same_block ? 1u : 0u),
                  "N=" + std::to_string(n) + " M=" + std::to_string(m) + " (" +
                      std::to_string(row) + "," + std::to_string(col) + ") issued " +
                      std::to_string(issued));
        }
      }
      t.holds(oracle.base().counts().entry == diagonal_calls, "total base entry queries");
    }
  }
  return t.outcome();
}

InvariantOutcome block_position_pattern(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m : {1, 2, 4}) {
      ComplexMatrix a = random_contraction(rng, n, false);
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
          if (i != j && (i + 2 * j) % 3 == 0) a(i, j) = 0.0;
        }
      }
      const double beta = 1.7;
      const ComplexMatrix dense = assemble_blockdiag(a, beta, m);
      BlockOracle oracle(SparseOracle::from_dense(a, random_vector(rng, n)), m, beta);
      const std::size_t d = oracle.base().sparsity();
      for (std::size_t col = 0; col < n * m; ++col) {
        std::vector<std::size_t> listed;
        for (std::size_t l = 0; l < d; ++l) {
          if (auto row = oracle.position(col, l)) listed.push_back(*row);
        }
        std::vector<std::size_t> expected;
        for (std::size_t row = 0; row < n * m; ++row) {
          const bool same_block = row / n == col / n;
          const bool diagonal = row == col;
          const auto i = static_cast<Eigen::Index>(row % n);
          const auto j = static_cast<Eigen::Index>(col % n);
          if (same_block && (diagonal || a(i, j) != Complex{})) expected.push_back(row);
        }
        t.holds(listed == expected, "N=" + std::to_string(n) + " M=" + std::to_string(m) +
                                        " column " + std::to_string(col));
        for (std::size_t row = 0; row < n * m; ++row) {
          if (std::find(listed.begin(), listed.end(), row) != listed.end()) continue;
          t.holds(dense(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) ==
                      Complex{},
                  "unlisted nonzero at column " + std::to_string(col));
        }
      }
    }
  }
  return t.outcome();
}

InvariantOutcome block_dilation(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
    const ComplexMatrix a = random_matrix(rng, n);
    const ComplexVector b = random_vector(rng, n);
    const auto [big, rhs] = hermitian_dilation(a, b);
    const ComplexVector sol = lu_solve(big, rhs);
    const auto nn = static_cast<Eigen::Index>(n);
    t.le((sol.tail(nn) - lu_solve(a, b)).norm(), 1e-9, "matrix " + std::to_string(i));
    t.le(sol.head(nn).norm(), 1e-9, "upper block, matrix " + std::to_string(i));
    t.le((big - big.adjoint()).cwiseAbs().maxCoeff(), 0.0, "hermiticity");
  }
  return t.outcome();
}

// lcu ------------------------------------------------------------------------

template <typename Fn>
void for_lcu_cases(Fn&& fn) {
  std::vector<FunctionSpec> specs = catalog_functions();
  specs.push_back(cubic_example());
  for (const auto& fs : specs) {
    for (std::size_t l : {2, 4, 8, 16}) {
      for (std::size_t m : {2, 4, 8, 16}) {
        const double beta = std::sqrt(fs.radius());
        const CoeffTable table = truncate(fs, l, beta);
        fn(fs, table, m, fs.name() + " L=" + std::to_string(l) + " M=" + std::to_string(m));
      }
    }
  }
}

InvariantOutcome lcu_unitarity(std::uint64_t) {
  Tally t;
  for_lcu_cases([&](const FunctionSpec&, const CoeffTable& table, std::size_t m,
                    const std::string& where) {
    const ComplexMatrix u = build_unitary(table, m).assemble();
    const ComplexMatrix eye = ComplexMatrix::Identity(u.rows(), u.cols());
    t.le(spectral_norm(u.adjoint() * u - eye), 1e-10, where);
  });
  return t.outcome();
}

InvariantOutcome lcu_amplitude(std::uint64_t) {
  Tally t;
  for_lcu_cases([&](const FunctionSpec&, const CoeffTable& table, std::size_t m,
                    const std::string& where) {
    const ComplexMatrix u = build_unitary(table, m).assemble();
    const auto l = static_cast<Eigen::Index>(table.order());
    for (std::size_t k = 0; k < m; ++k) {
      const auto idx = static_cast<Eigen::Index>(k) * l;
      t.le(std::abs(u(idx, idx) - table.ctilde * weight(table, k, m)), 1e-10,
           where + " k=" + std::to_string(k));
    }
  });
  return t.outcome();
}

InvariantOutcome lcu_residual(std::uint64_t) {
  Tally t;
  for_lcu_cases([&](const FunctionSpec&, const CoeffTable& table, std::size_t m,
                    const std::string& where) {
    const ComplexMatrix u = build_unitary(table, m).assemble();
    const auto l = static_cast<Eigen::Index>(table.order());
    for (std::size_t k = 0; k < m; ++k) {
      const auto idx = static_cast<Eigen::Index>(k) * l;
      const double rest = u.col(idx).squaredNorm() - std::norm(u(idx, idx));
      const double amp = std::abs(table.ctilde * weight(table, k, m));
      t.le(std::abs(rest - (1.0 - amp * amp)), 1e-10, where + " k=" + std::to_string(k));
    }
  });
  return t.outcome();
}

InvariantOutcome lcu_truncation(std::uint64_t) {
  Tally t;
  for_lcu_cases([&](const FunctionSpec& fs, const CoeffTable& table, std::size_t m,
                    const std::string& where) {
    const double r = table.beta / fs.radius();
    const double bound =
        fs.disk_max() * std::pow(r, static_cast<double>(table.order())) / (1.0 - r);
    for (std::size_t k = 0; k < m; ++k) {
      t.le(std::abs(quadrature_weight(fs, table.beta, k, m) - weight(table, k, m)),
           bound + 1e-12, where + " k=" + std::to_string(k));
    }
  });
  return t.outcome();
}

InvariantOutcome lcu_phase_factors(std::uint64_t) {
  Tally t;
  for (std::size_t m : {1, 2, 4, 8, 16}) {
    for (std::size_t l : {1, 2, 4, 8, 16}) {
      t.le((phase_diagonal(m, l) - phase_diagonal_from_factors(m, l)).cwiseAbs().maxCoeff(),
           1e-10, "M=" + std::to_string(m) + " L=" + std::to_string(l));
    }
  }
  return t.outcome();
}

// pipeline -------------------------------------------------------------------

struct PipelineRun {
  std::string label;
  double epsilon;
  RunReport report;
};

std::vector<MatrixCase> pipeline_matrices(SplitMix64& rng) {
  return {{"herm4", random_contraction(rng, 4, true)},
          {"gen8", random_contraction(rng, 8, false)},
          {"jordan4", jordan_like(4)}};
}

std::vector<FunctionSpec> pipeline_functions() {
  return {FunctionSpec::exp(2.0), FunctionSpec::cos(2.0), FunctionSpec::geometric(3.0, 2.0),
          cubic_example()};
}

const std::vector<PipelineRun>& pipeline_runs(std::uint64_t seed) {
  static std::map<std::uint64_t, std::vector<PipelineRun>> cache;
  auto it = cache.find(seed);
  if (it != cache.end()) return it->second;
  SplitMix64 rng(seed ^ 0x9199);
  std::vector<PipelineRun> out;
  for (const auto& mc : pipeline_matrices(rng)) {
    const ComplexVector b = random_vector(rng, static_cast<std::size_t>(mc.a.rows()));
    for (const auto& fs : pipeline_functions()) {
      const double beta = std::sqrt(fs.radius());
      const double F = compute_F(fs, mc.a, b, beta);
      for (double eps : {0.25, 0.1, 0.01}) {
        const ParameterPlan plan = select_parameters(fs, beta, F, eps);
        out.push_back({fs.name() + "/" + mc.label + " eps=" + fmt(eps), eps,
                       run_algorithm(fs, mc.a, b, plan, beta, rng.next())});
      }
    }
  }
  return cache.emplace(seed, std::move(out)).first->second;
}

InvariantOutcome pipeline_target(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    t.le(run.report.error_measured, run.epsilon, run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_error_bound(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    t.le(run.report.error_measured, run.report.error_bound + 1e-9, run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_success(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    t.le(run.report.success_lower_bound - 1e-9, run.report.success_prob, run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_probability_formula(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    t.le(std::abs(run.report.success_prob - run.report.diagnostics.p_formula), 1e-10,
         run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_quadrature_gap(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    const auto& d = run.report.diagnostics;
    t.le(d.f_fm_gap, d.f_fm_bound + 1e-9, run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_weight_gap(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    const auto& d = run.report.diagnostics;
    t.le(d.fm_tilde_gap, d.fm_tilde_bound + 1e-9, run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_injection(std::uint64_t seed) {
  Tally t;
  for (const auto& run : pipeline_runs(seed)) {
    t.le(std::abs(run.report.diagnostics.injected_distance - run.report.eps_prime), 1e-12,
         run.label);
  }
  return t.outcome();
}

InvariantOutcome pipeline_exactness(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xe4ac);
  Tally t;
  std::vector<MatrixCase> mats = pipeline_matrices(rng);
  for (const auto& mc : mats) {
    const auto n = static_cast<std::size_t>(mc.a.rows());
    const ComplexVector b = random_vector(rng, n);
    for (const auto& fs : pipeline_functions()) {
      const double beta = std::sqrt(fs.radius());
      const double r = beta / fs.radius();
      const double F = compute_F(fs, mc.a, b, beta);
      // Truncation term of the weights below 1e-12.
      std::size_t l = 2;
      while (fs.disk_max() * std::pow(r, static_cast<double>(l)) / (1.0 - r) >= 1e-13) l *= 2;
      const std::string where = fs.name() + "/" + mc.label;

      const ParameterPlan coarse = explicit_plan(fs, beta, F, 8, l, 0.0);
      const RunReport rc = run_algorithm(fs, mc.a, b, coarse, beta, 1);
      const ContourPlan cp(beta, 8, l, 0.0, fs.radius());
      const ComplexVector fm = contour_apply(fs, mc.a, b, cp);
      t.le(normalized_distance(fm, rc.post_state), 1e-10, where + " vs contour sum");

      const ParameterPlan fine = explicit_plan(fs, beta, F, 128, l, 0.0);
      const RunReport rf = run_algorithm(fs, mc.a, b, fine, beta, 1);
      t.le((rf.post_state - rf.ref_state).norm(), 1e-9, where + " vs reference");
    }
  }
  return t.outcome();
}

InvariantOutcome pipeline_scaling(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5ca1);
  Tally t;
  for (const auto& mc : pipeline_matrices(rng)) {
    const ComplexVector b = random_vector(rng, static_cast<std::size_t>(mc.a.rows()));
    for (const auto& fs : {FunctionSpec::exp(2.0), FunctionSpec::geometric(3.0, 2.0)}) {
      const double beta = std::sqrt(fs.radius());
      const double r = beta / fs.radius();
      const double F = compute_F(fs, mc.a, b, beta);
      const double gamma = std::max(1.0 / (1.0 - 1.0 / beta), 1.0 / (1.0 - r));
      const std::size_t l = saturating_order(F, r, 1e-6);
      // Powers of two round up by at most 2x, so the selection rule gives
      // M <= 2 gamma ln(8/(F eps) + 1) <= 2 gamma ln(1/eps) + 2 gamma ln(8/F + 1).
      const double c = 2.0 * gamma;
      const double c0 = 2.0 * gamma * std::log(8.0 / F + 1.0) + 2.0;
      std::size_t previous = 0;
      for (int p = 2; p <= 10; ++p) {
        const double eps = std::ldexp(1.0, -p);
        const std::size_t m = minimal_nodes(fs, mc.a, b, beta, eps, l, 4096);
        const std::string where =
            fs.name() + "/" + mc.label + " eps=2^-" + std::to_string(p);
        t.holds(m > 0, where + " reached no M <= 4096");
        t.holds(m >= previous, where + " minimal M decreased");
        t.le(static_cast<double>(m), c * std::log(1.0 / eps) + c0, where);
        previous = m;
      }
    }
  }
  return t.outcome();
}

std::vector<Invariant> build_catalog() {
  return {
      {"numkernel", "numkernel:distance-lemma", distance_lemma},
      {"numkernel", "numkernel:cauchy-estimate", cauchy_estimate},
      {"numkernel", "numkernel:taylor-halving", taylor_halving},
      {"numkernel", "numkernel:norm-homogeneity", norm_homogeneity},
      {"contour", "contour:truncation-bound", contour_bound},
      {"contour", "contour:geometric-decay", contour_decay},
      {"contour", "contour:indicator", contour_indicator},
      {"contour", "contour:columnwise", contour_columnwise},
      {"blocksys", "blocksys:block-norm", block_norm},
      {"blocksys", "blocksys:inverse-norm", block_inverse_norm},
      {"blocksys", "blocksys:condition", block_condition},
      {"blocksys", "blocksys:oracle-entries", block_oracle_entries},
      {"blocksys", "blocksys:query-accounting", block_query_accounting},
      {"blocksys", "blocksys:position-pattern", block_position_pattern},
      {"blocksys", "blocksys:dilation", block_dilation},
      {"lcu", "lcu:unitarity", lcu_unitarity},
      {"lcu", "lcu:amplitude", lcu_amplitude},
      {"lcu", "lcu:residual-norm", lcu_residual},
      {"lcu", "lcu:weight-truncation", lcu_truncation},
      {"lcu", "lcu:phase-factors", lcu_phase_factors},
      {"pipeline", "pipeline:error-target", pipeline_target},
      {"pipeline", "pipeline:error-bound", pipeline_error_bound},
      {"pipeline", "pipeline:success-probability", pipeline_success},
      {"pipeline", "pipeline:probability-formula", pipeline_probability_formula},
      {"pipeline", "pipeline:quadrature-gap", pipeline_quadrature_gap},
      {"pipeline", "pipeline:weight-gap", pipeline_weight_gap},
      {"pipeline", "pipeline:error-injection", pipeline_injection},
      {"pipeline", "pipeline:exactness", pipeline_exactness},
      {"pipeline", "pipeline:log-scaling", pipeline_scaling},
  };
}

}  // namespace

const std::vector<Invariant>& invariant_catalog() {
  static const std::vector<Invariant> catalog = build_catalog();
  return catalog;
}

std::vector<const Invariant*> select_invariants(const std::string& only) {
  std::vector<const Invariant*> out;
  for (const auto& inv : invariant_catalog()) {
    if (only.empty() || inv.module == only || inv.name == only) out.push_back(&inv);
  }
  if (out.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no module or invariant named '" + only + "'");
  }
  return out;
}

int run_invariants(const std::vector<const Invariant*>& selection, std::uint64_t seed,
                   std::ostream& out) {
  int failures = 0;
  for (const Invariant* inv : selection) {
    InvariantOutcome result;
    try {
      result = inv->check(seed);
    } catch (const Error& e) {
      result = {false, std::string("raised ") + e.what()};
    }
    out << (result.passed ? "PASS " : "FAIL ") << inv->name << ": " << result.detail << '\n';
    if (!result.passed) ++failures;
  }
  return failures;
}

}  // namespace matfunc
