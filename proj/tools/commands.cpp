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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "matfunc/error.hpp"
#include "matfunc/function_spec.hpp"
#include "matfunc/io.hpp"
#include "matfunc/pipeline.hpp"
#include "matfunc/verify.hpp"

namespace matfunc::cli {
namespace {

constexpr double kDefaultRadius = 2.0;
constexpr double kDefaultEpsilon = 0.1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    case ErrorCode::InfeasibleTarget:
    case ErrorCode::NullImage:
    case ErrorCode::NormTooLarge:
    case ErrorCode::SizeCap:
    case ErrorCode::DivergentSeries:
    case ErrorCode::NullProjection:
    case ErrorCode::DegenerateBound:
    case ErrorCode::BadM:
    case ErrorCode::BadScale:
    case ErrorCode::ZeroFunction:
    case ErrorCode::ZeroVector:
      return kExitPrecondition;
    default:
      return kExitInternal;
  }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

struct Problem {
  FunctionSpec fs;
  ComplexMatrix a;
  ComplexVector b;
  double beta;
};

FunctionSpec make_function(const ExperimentConfig& c) {
  const auto kind = parse_function_kind(c.function);
  if (!kind) throw UsageError("unknown function '" + c.function + "'");
  const double radius = c.radius.value_or(kDefaultRadius);
  switch (*kind) {
    case FunctionKind::Exp:
      return FunctionSpec::exp(radius);
    case FunctionKind::Cos:
      return FunctionSpec::cos(radius);
    case FunctionKind::Sin:
      return FunctionSpec::sin(radius);
    case FunctionKind::Geometric:
      if (!c.pole) throw UsageError("--function geometric needs --pole");
      return FunctionSpec::geometric(*c.pole, radius);
    case FunctionKind::Polynomial:
    case FunctionKind::Custom: {
      if (c.coeffs_path.empty()) throw UsageError("--function " + c.function + " needs --coeffs");
      const ComplexVector v = read_vector(c.coeffs_path);
      std::vector<Complex> coeffs(v.data(), v.data() + v.size());
      return *kind == FunctionKind::Polynomial ? FunctionSpec::polynomial(coeffs, radius)
                                               : FunctionSpec::custom(coeffs, radius);
    }
  }
  throw UsageError("unknown function '" + c.function + "'");
}

Problem load_problem(const ExperimentConfig& c) {
  if (c.matrix_path.empty()) throw UsageError("--matrix is required");
  FunctionSpec fs = make_function(c);
  ComplexMatrix a = read_matrix_market(c.matrix_path);
  if (c.normalize) {
    const double norm = spectral_norm(a);
    if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero matrix");
    a /= norm;
  } else if (const double norm = spectral_norm(a); norm > 1.0 + 1e-9) {
    throw Error(ErrorCode::NormTooLarge,
                "|A| = " + format_double(norm) + " exceeds 1; pass --normalize to rescale");
  }
  ComplexVector b;
  if (c.rhs_path.empty()) {
    b = ComplexVector::Zero(a.rows());
    b(0) = 1.0;
  } else {
    b = read_vector(c.rhs_path);
    if (b.size() != a.rows()) {
      throw Error(ErrorCode::ParseError, "right-hand side has " + std::to_string(b.size()) +
                                             " entries, matrix has " +
                                             std::to_string(a.rows()) + " rows");
    }
    b = QuantumStateView::normalized(b).amplitudes();
  }
  const double beta = c.beta.value_or(std::sqrt(fs.radius()));
  return {std::move(fs), std::move(a), std::move(b), beta};
}

ParameterPlan make_plan(const ExperimentConfig& c, const Problem& p) {
  const int overrides = (c.nodes ? 1 : 0) + (c.order ? 1 : 0) + (c.hhl_error ? 1 : 0);
  if (c.epsilon && overrides > 0) {
    throw UsageError("give either --epsilon or all of --nodes, --order, --hhl-error");
  }
  if (overrides > 0 && overrides < 3) {
    throw UsageError("--nodes, --order and --hhl-error must be given together");
  }
  const double F = compute_F(p.fs, p.a, p.b, p.beta);
  if (overrides == 3) return explicit_plan(p.fs, p.beta, F, *c.nodes, *c.order, *c.hhl_error);
  return select_parameters(p.fs, p.beta, F, c.epsilon.value_or(kDefaultEpsilon));
}

bool report_passes(const RunReport& rep, std::string* why) {
  const double target = rep.target();
  std::ostringstream msg;
  bool ok = true;
  if (!(rep.error_measured <= target)) {
    msg << "error " << format_double(rep.error_measured) << " exceeds target "
        << format_double(target) << "; ";
    ok = false;
  }
  if (target <= 0.5 && !(rep.success_prob >= rep.success_lower_bound - 1e-9)) {
    msg << "success probability " << format_double(rep.success_prob) << " below "
        << format_double(rep.success_lower_bound) << "; ";
    ok = false;
  }
  if (why) *why = msg.str();
  return ok;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

}  // namespace

int cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = load_problem(config);
    const ParameterPlan plan = make_plan(config, p);
    RunOptions options;
    options.trials = config.trials;
    const RunReport rep = run_algorithm(p.fs, p.a, p.b, plan, p.beta, config.seed, options);
    write_text(config.out_path, to_json(rep).dump(2) + "\n", out);
    if (rep.diagnostics.empirical_success) {
      err << "trials: " << config.trials << ", empirical success rate "
          << format_double(*rep.diagnostics.empirical_success) << " (exact "
          << format_double(rep.success_prob) << ")\n";
    }
    std::string why;
    if (!report_passes(rep, &why)) {
      err << "criterion failed: " << why << '\n';
      return kExitCriterion;
    }
    return kExitOk;
  });
}

int cmd_sweep(const ExperimentConfig& config, const std::vector<double>& eps_list,
              const std::vector<std::size_t>& nodes_list, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (eps_list.empty() == nodes_list.empty()) {
      throw UsageError("sweep needs exactly one non-empty --eps-list or --nodes-list");
    }
    const Problem p = load_problem(config);
    const double F = compute_F(p.fs, p.a, p.b, p.beta);
    const double r = p.beta / p.fs.radius();
    std::ostringstream csv;
    csv << "epsilon,M,L,error_measured,error_bound,success_prob,min_nodes\n";
    bool all_pass = true;
    for (double eps : eps_list) {
      const ParameterPlan plan = select_parameters(p.fs, p.beta, F, eps);
      const RunReport rep = run_algorithm(p.fs, p.a, p.b, plan, p.beta, config.seed);
      // Smallest M for this target with eps' = 0 and L large enough that the
      // weight truncation is negligible.
      const std::size_t l_sat = saturating_order(F, r, eps * 1e-3);
      const std::size_t min_m =
          minimal_nodes(p.fs, p.a, p.b, p.beta, eps, l_sat, kMaxPlanSize);
      csv << format_double(eps) << ',' << rep.nodes << ',' << rep.order << ','
          << format_double(rep.error_measured) << ',' << format_double(rep.error_bound)
          << ',' << format_double(rep.success_prob) << ',' << min_m << '\n';
      std::string why;
      const bool pass = report_passes(rep, &why) && rep.error_measured <= rep.error_bound;
      if (!pass) err << "eps=" << format_double(eps) << ": " << why << '\n';
      all_pass = all_pass && pass;
    }
    for (std::size_t m : nodes_list) {
      const std::size_t l = config.order.value_or(saturating_order(F, r, 1e-12));
      const double eps_prime = config.hhl_error.value_or(0.0);
      const ParameterPlan plan = explicit_plan(p.fs, p.beta, F, m, l, eps_prime);
      const RunReport rep = run_algorithm(p.fs, p.a, p.b, plan, p.beta, config.seed);
      csv << ',' << rep.nodes << ',' << rep.order << ',' << format_double(rep.error_measured)
          << ',' << format_double(rep.error_bound) << ',' << format_double(rep.success_prob)
          << ",\n";
      if (!(rep.error_measured <= rep.error_bound)) {
        err << "M=" << m << ": error exceeds its bound\n";
        all_pass = false;
      }
    }
    write_text(config.out_path, csv.str(), out);
    return all_pass ? kExitOk : kExitCriterion;
  });
}

int cmd_verify(std::uint64_t seed, const std::string& only, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto selection = select_invariants(only);
    std::ostringstream text;
    const int failures = run_invariants(selection, seed, text);
    write_text(out_path, text.str(), out);
    if (failures > 0) {
      const std::string all = text.str();
      const auto pos = all.find("FAIL ");
      const auto end = all.find(':', pos);
      err << "first failing invariant: " << all.substr(pos + 5, end - pos - 5) << '\n';
      return kExitCriterion;
    }
    return kExitOk;
  });
}

}  // namespace matfunc::cli
