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

#include "matfunc/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "matfunc/contour.hpp"
#include "matfunc/error.hpp"
#include "matfunc/lcu.hpp"
#include "matfunc/rng.hpp"
#include "matfunc/statevector.hpp"

namespace matfunc {
namespace {

constexpr double kReferenceTol = 1e-13;
constexpr double kNullImage = 1e-12;
constexpr double kNullProjection = 1e-20;
constexpr double kNormSlack = 1e-9;

void require_beta(const FunctionSpec& fs, double beta) {
  if (!(beta > 1.0 && beta < fs.radius())) {
    throw Error(ErrorCode::InvalidArgument, "beta must satisfy 1 < beta < R");
  }
}

std::size_t round_up_pow2(double x, const char* what) {
  if (!std::isfinite(x) || x > static_cast<double>(kMaxPlanSize)) {
    throw Error(ErrorCode::InfeasibleTarget,
                std::string(what) + " would exceed " + std::to_string(kMaxPlanSize));
  }
  const auto n = static_cast<std::size_t>(std::max(2.0, std::ceil(x)));
  return std::bit_ceil(n);
}

}  // namespace

double compute_F(const FunctionSpec& fs, const ComplexMatrix& a, const ComplexVector& b,
                 double beta) {
  if (!(beta > 1.0)) throw Error(ErrorCode::InvalidArgument, "beta must exceed 1");
  const QuantumStateView unit = QuantumStateView::normalized(b);
  const double image = taylor_apply(fs, a, unit.amplitudes(), kReferenceTol).norm();
  if (image < kNullImage) {
    throw Error(ErrorCode::NullImage, "|f(A)b| is below 1e-12; the target state is undefined");
  }
  return image * (1.0 - 1.0 / beta) / fs.disk_max();
}

std::uint64_t aa_repetitions(double F, double r) {
  return static_cast<std::uint64_t>(std::ceil((4.0 / 3.0) / (F * (1.0 - r))));
}

ParameterPlan select_parameters(const FunctionSpec& fs, double beta, double F,
                                double epsilon) {
  require_beta(fs, beta);
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1/2]");
  }
  if (!(F > 0.0)) throw Error(ErrorCode::InvalidArgument, "F must be positive");
  const double r = beta / fs.radius();
  const double kappa = 1.0 / (1.0 - 1.0 / beta);
  ParameterPlan plan;
  plan.epsilon = epsilon;
  plan.F = F;
  plan.eps_prime = F * epsilon / 8.0;
  plan.gamma = std::max(kappa, 1.0 / (1.0 - r));
  plan.nodes = round_up_pow2(plan.gamma * std::log(8.0 / (F * epsilon) + 1.0), "M");
  plan.order =
      round_up_pow2(std::log(8.0 / ((1.0 - r) * F * epsilon)) / (1.0 - r), "L");
  plan.aa_repetitions = aa_repetitions(F, r);
  return plan;
}

ParameterPlan explicit_plan(const FunctionSpec& fs, double beta, double F,
                            std::size_t nodes, std::size_t order, double eps_prime) {
  require_beta(fs, beta);
  if (!is_power_of_two(nodes)) throw Error(ErrorCode::BadM, "M must be a power of two");
  if (!is_power_of_two(order)) {
    throw Error(ErrorCode::InvalidArgument, "L must be a power of two");
  }
  if (!(eps_prime >= 0.0 && eps_prime <= 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps' must lie in [0, 2]");
  }
  if (!(F > 0.0)) throw Error(ErrorCode::InvalidArgument, "F must be positive");
  const double r = beta / fs.radius();
  ParameterPlan plan;
  plan.F = F;
  plan.eps_prime = eps_prime;
  plan.nodes = nodes;
  plan.order = order;
  plan.gamma = std::max(1.0 / (1.0 - 1.0 / beta), 1.0 / (1.0 - r));
  plan.aa_repetitions = aa_repetitions(F, r);
  return plan;
}

XPrimeState build_xprime_state(const BlockDiagonal& aprime, const ComplexVector& bprime) {
  const std::size_t n = aprime.block_dim();
  const auto nn = static_cast<Eigen::Index>(n);
  if (aprime.blocks.empty() || static_cast<std::size_t>(bprime.size()) != aprime.dim()) {
    throw Error(ErrorCode::InvalidArgument, "block system and right-hand side disagree");
  }
  ComplexVector x(bprime.size());
  for (std::size_t k = 0; k < aprime.blocks.size(); ++k) {
    const auto off = static_cast<Eigen::Index>(k) * nn;
    x.segment(off, nn) = lu_solve(aprime.blocks[k], ComplexVector(bprime.segment(off, nn)));
  }
  const double norm = x.norm();
  XPrimeState out{QuantumStateView::normalized(x), {}, norm};
  out.block_weights.reserve(aprime.blocks.size());
  for (std::size_t k = 0; k < aprime.blocks.size(); ++k) {
    out.block_weights.push_back(x.segment(static_cast<Eigen::Index>(k) * nn, nn).norm() /
                                norm);
  }
  return out;
}

XPrimeState build_xprime_state(const ComplexMatrix& aprime, const ComplexVector& bprime) {
  const ComplexVector x = lu_solve(aprime, bprime);
  const double norm = x.norm();
  return {QuantumStateView::normalized(x), {}, norm};
}

QuantumStateView inject_error(const QuantumStateView& state, double eps_prime,
                              std::uint64_t seed) {
  if (!(eps_prime >= 0.0 && eps_prime <= 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps' must lie in [0, 2]");
  }
  if (eps_prime == 0.0) return state;
  const double phi = 2.0 * std::asin(eps_prime / 2.0);
  const ComplexVector& x = state.amplitudes();
  if (x.size() == 1) {
    // No orthogonal direction exists; a global phase of phi has the same distance.
    return QuantumStateView::normalized(x * std::polar(1.0, phi));
  }
  SplitMix64 rng(seed);
  ComplexVector u(x.size());
  for (;;) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      u(i) = Complex(re, im);
    }
    u -= x.dot(u) * x;  // dot() conjugates its left operand
    u -= x.dot(u) * x;
    if (u.norm() > 1e-8) break;
  }
  u.normalize();
  return QuantumStateView::normalized(std::cos(phi) * x + std::sin(phi) * u);
}

double error_bound(double F, double beta, double r, std::size_t nodes, std::size_t order,
                   double eps_prime) {
  if (!(F > 0.0)) throw Error(ErrorCode::InvalidArgument, "F must be positive");
  const double beta_m = std::pow(beta, -static_cast<double>(nodes));
  const double r_m = std::pow(r, static_cast<double>(nodes));
  if (!(beta_m < 1.0) || !(r_m < 1.0) || !(r > 0.0)) {
    throw Error(ErrorCode::DegenerateBound, "geometric ratio is not below 1");
  }
  const double tail = std::pow(r, static_cast<double>(order)) / (1.0 - r);
  return (2.0 / F) * (beta_m / (1.0 - beta_m) + r_m / (1.0 - r_m) + eps_prime + tail);
}

double success_lower_bound(double F, double r) {
  const double s = 0.75 * F * (1.0 - r);
  return s * s;
}

RunReport run_algorithm(const FunctionSpec& fs, const ComplexMatrix& a,
                        const ComplexVector& b, const ParameterPlan& plan, double beta,
                        std::uint64_t seed, const RunOptions& options) {
  require_beta(fs, beta);
  if (a.rows() != a.cols() || a.rows() == 0 || b.size() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "A must be square with b of matching size");
  }
  const double norm_a = spectral_norm(a);
  if (norm_a > 1.0 + kNormSlack) {
    throw Error(ErrorCode::NormTooLarge, "spectral norm of A is " + std::to_string(norm_a) +
                                             " > 1; rescale or pass --normalize");
  }
  const std::size_t n = static_cast<std::size_t>(a.rows());
  const std::size_t m = plan.nodes;
  const std::size_t l = plan.order;
  if (n * m > size_cap()) {
    throw Error(ErrorCode::SizeCap,
                "N*M = " + std::to_string(n * m) + " exceeds the size cap");
  }
  const ContourPlan contour(beta, m, l, plan.eps_prime, fs.radius());
  const auto nn = static_cast<Eigen::Index>(n);

  RunReport rep;
  rep.beta = beta;
  rep.r = contour.r();
  rep.nodes = m;
  rep.order = l;
  rep.eps_prime = plan.eps_prime;
  rep.epsilon = plan.epsilon;
  rep.seed = seed;
  rep.F = compute_F(fs, a, b, beta);
  rep.aa_repetitions = aa_repetitions(rep.F, rep.r);
  rep.gate_estimate = gate_count_estimate(m, l);

  // Step 1: the shifted systems through the oracle interface, exact solve, then
  // a controlled perturbation standing in for the linear-systems solver's error.
  BlockOracle oracle(SparseOracle::from_dense(a, b), m, beta, kSystemScale);
  const BlockDiagonal scaled = gather_blocks(oracle);
  const QuantumStateView bprime = oracle.rhs_state();
  const QuantumStateView unit_b = QuantumStateView::normalized(b);
  const XPrimeState xprime = build_xprime_state(scaled, bprime.amplitudes());
  // The scaled solve used b'/sqrt(M) and A'/c, so x' = sqrt(M) y / c.
  rep.diagnostics.xprime_norm =
      xprime.solution_norm * std::sqrt(static_cast<double>(m)) / kSystemScale;
  const QuantumStateView xtilde = inject_error(xprime.state, plan.eps_prime, seed);
  rep.diagnostics.injected_distance = xprime.state.distance(xtilde);

  // Steps 2-4.
  const CoeffTable table = truncate(fs, l, beta);
  const WeightingUnitary u = build_unitary(table, m);
  CompositeState state(xtilde, m, n, l);
  state.apply_weighting(u);
  state.apply_node_hadamards();
  const CompositeState::Projection proj = state.project_success();
  rep.success_prob = proj.probability;
  if (rep.success_prob < kNullProjection) {
    throw Error(ErrorCode::NullProjection, "success probability below 1e-20");
  }
  rep.post_state = proj.data / std::sqrt(proj.probability);
  const ComplexVector fb = taylor_apply(fs, a, unit_b.amplitudes(), kReferenceTol);
  rep.ref_state = fb.normalized();
  rep.error_measured = normalized_distance(fb, proj.data);

  rep.error_bound = error_bound(rep.F, beta, rep.r, m, l, plan.eps_prime);
  rep.trunc_bound = truncation_bound(fs, norm_a, contour);
  rep.success_lower_bound = success_lower_bound(rep.F, rep.r);
  rep.queries = oracle.base().counts();

  // The vectors f, f_M and f~_M built classically from the same solves.
  RunDiagnostics& diag = rep.diagnostics;
  const double md = static_cast<double>(m);
  const ComplexVector& y = xprime.state.amplitudes();
  const ComplexVector& yt = xtilde.amplitudes();
  ComplexVector f_vec = (md / diag.xprime_norm) * fb;
  ComplexVector fm_vec = ComplexVector::Zero(nn);
  ComplexVector fmt_vec = ComplexVector::Zero(nn);
  for (std::size_t k = 0; k < m; ++k) {
    const auto off = static_cast<Eigen::Index>(k) * nn;
    // x_k / |x'| is block k of the normalized state.
    fm_vec += quadrature_weight(fs, beta, k, m) * y.segment(off, nn);
    fmt_vec += weight(table, k, m) * yt.segment(off, nn);
  }
  diag.p_formula = table.ctilde * table.ctilde * fmt_vec.squaredNorm() / md;
  diag.f_fm_gap = (f_vec - fm_vec).norm();
  diag.f_fm_bound = (md / diag.xprime_norm) * rep.trunc_bound;
  diag.fm_tilde_gap = (fm_vec - fmt_vec).norm();
  diag.fm_tilde_bound =
      std::sqrt(md) * fs.disk_max() *
      (plan.eps_prime + std::pow(rep.r, static_cast<double>(l)) / (1.0 - rep.r));

  if (options.trials > 0) {
    SplitMix64 rng(seed ^ 0x5bd1e995ULL);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < options.trials; ++t) {
      const auto [k, j] = state.measure(rng);
      if (k == 0 && j == 0) ++hits;
    }
    diag.empirical_success =
        static_cast<double>(hits) / static_cast<double>(options.trials);
  }
  return rep;
}

std::size_t saturating_order(double F, double r, double tail) {
  if (!(F > 0.0) || !(r > 0.0 && r < 1.0) || !(tail > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "saturating_order needs F > 0, 0 < r < 1");
  }
  std::size_t order = 2;
  while ((2.0 / F) * std::pow(r, static_cast<double>(order)) / (1.0 - r) > tail) {
    if (order >= kMaxPlanSize) {
      throw Error(ErrorCode::InfeasibleTarget, "L would exceed the plan cap");
    }
    order *= 2;
  }
  return order;
}

std::size_t minimal_nodes(const FunctionSpec& fs, const ComplexMatrix& a,
                          const ComplexVector& b, double beta, double epsilon,
                          std::size_t order, std::size_t max_nodes) {
  const double F = compute_F(fs, a, b, beta);
  for (std::size_t m = 2; m <= max_nodes; m *= 2) {
    const ParameterPlan plan = explicit_plan(fs, beta, F, m, order, 0.0);
    try {
      if (run_algorithm(fs, a, b, plan, beta, 0).error_measured <= epsilon) return m;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NullProjection) throw;
    }
  }
  return 0;
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["success_prob"] = report.success_prob;
  j["success_lower_bound"] = report.success_lower_bound;
  j["error_measured"] = report.error_measured;
  j["error_bound"] = report.error_bound;
  j["trunc_bound"] = report.trunc_bound;
  j["F"] = report.F;
  j["beta"] = report.beta;
  j["r"] = report.r;
  j["M"] = report.nodes;
  j["L"] = report.order;
  j["eps_prime"] = report.eps_prime;
  j["aa_repetitions"] = report.aa_repetitions;
  j["gate_estimate"] = report.gate_estimate;
  j["query_counts"] = {{"oa", report.queries.entry},
                       {"onu", report.queries.position},
                       {"pb", report.queries.rhs}};
  j["seed"] = report.seed;
  return j;
}

}  // namespace matfunc
