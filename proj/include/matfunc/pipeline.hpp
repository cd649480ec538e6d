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
#include <vector>

#include "json.hpp"

#include "matfunc/blocksys.hpp"
#include "matfunc/function_spec.hpp"
#include "matfunc/numkernel.hpp"

namespace matfunc {

/// Largest M or L that select_parameters will return.
inline constexpr std::size_t kMaxPlanSize = std::size_t{1} << 16;

/// Scaling constant applied to the block system before the solve.
inline constexpr double kSystemScale = 2.0;

struct ParameterPlan {
  std::optional<double> epsilon;  // absent for explicit (M, L, eps') plans
  double F = 0.0;
  double eps_prime = 0.0;
  std::size_t nodes = 0;
  std::size_t order = 0;
  double gamma = 0.0;
  std::uint64_t aa_repetitions = 0;
};

/// F = |f(A) b| (1 - 1/beta) / B with b normalized first.
double compute_F(const FunctionSpec& fs, const ComplexMatrix& a, const ComplexVector& b,
                 double beta);

/// Smallest powers of two M, L with
///   M >= gamma ln(8/(F eps) + 1),  L >= ln(8/((1-r) F eps)) / (1-r),
/// and eps' = F eps / 8.
ParameterPlan select_parameters(const FunctionSpec& fs, double beta, double F,
                                double epsilon);

/// Plan with caller-chosen M, L and eps'; derived fields filled in.
ParameterPlan explicit_plan(const FunctionSpec& fs, double beta, double F,
                            std::size_t nodes, std::size_t order, double eps_prime);

std::uint64_t aa_repetitions(double F, double r);

struct XPrimeState {
  QuantumStateView state;
  std::vector<double> block_weights;  // p_k = |x_k| / |x'|
  double solution_norm = 0.0;         // norm of the unnormalized solution
};

/// Normalized solution of the block system, solved block by block.
XPrimeState build_xprime_state(const BlockDiagonal& aprime, const ComplexVector& bprime);

/// Same, from the dense N M x N M matrix.
XPrimeState build_xprime_state(const ComplexMatrix& aprime, const ComplexVector& bprime);

/// cos(phi)|x'> + sin(phi)|u> with phi = 2 asin(eps'/2) and |u> a seeded
/// random unit vector orthogonal to |x'>, so the distance is exactly eps'.
QuantumStateView inject_error(const QuantumStateView& state, double eps_prime,
                              std::uint64_t seed);

/// (2/F) [beta^-M/(1-beta^-M) + r^M/(1-r^M) + eps' + r^L/(1-r)]
double error_bound(double F, double beta, double r, std::size_t nodes, std::size_t order,
                   double eps_prime);

/// (3 F (1-r) / 4)^2
double success_lower_bound(double F, double r);

struct RunDiagnostics {
  double xprime_norm = 0.0;
  double p_formula = 0.0;      // C~^2 |f~_M|^2 / M
  double f_fm_gap = 0.0;       // |f - f_M| on the unnormalized vectors
  double f_fm_bound = 0.0;     // (M/|x'|) trunc_bound |b|
  double fm_tilde_gap = 0.0;   // |f_M - f~_M|
  double fm_tilde_bound = 0.0; // sqrt(M) B (eps' + r^L/(1-r))
  double injected_distance = 0.0;
  std::optional<double> empirical_success;  // set when trials were requested
};

struct RunReport {
  double success_prob = 0.0;
  double success_lower_bound = 0.0;
  ComplexVector post_state;
  ComplexVector ref_state;
  double error_measured = 0.0;
  double error_bound = 0.0;
  double trunc_bound = 0.0;
  double F = 0.0;
  double beta = 0.0;
  double r = 0.0;
  std::size_t nodes = 0;
  std::size_t order = 0;
  double eps_prime = 0.0;
  std::optional<double> epsilon;
  std::uint64_t aa_repetitions = 0;
  std::size_t gate_estimate = 0;
  QueryCounts queries;
  std::uint64_t seed = 0;
  RunDiagnostics diagnostics;

  /// Target accuracy: epsilon when given, otherwise the error bound.
  double target() const noexcept { return epsilon ? *epsilon : error_bound; }
};

struct RunOptions {
  std::size_t trials = 0;  // sampled measurements of node and ancilla registers
};

RunReport run_algorithm(const FunctionSpec& fs, const ComplexMatrix& a,
                        const ComplexVector& b, const ParameterPlan& plan, double beta,
                        std::uint64_t seed, const RunOptions& options = {});

/// Smallest power-of-two L with (2/F) r^L / (1-r) <= tail.
std::size_t saturating_order(double F, double r, double tail);

/// Smallest power-of-two M in [2, max_nodes] whose run with eps' = 0 and the
/// given L has error at most epsilon; 0 when none does.
std::size_t minimal_nodes(const FunctionSpec& fs, const ComplexMatrix& a,
                          const ComplexVector& b, double beta, double epsilon,
                          std::size_t order, std::size_t max_nodes);

/// Report fields in the fixed external layout.
nlohmann::ordered_json to_json(const RunReport& report);

}  // namespace matfunc
