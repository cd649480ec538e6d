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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace matfunc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCriterion = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

struct ExperimentConfig {
  std::string matrix_path;
  std::string rhs_path;  // empty: b = e_0
  std::string function = "exp";
  std::optional<double> radius;
  std::optional<double> pole;
  std::string coeffs_path;
  std::optional<double> beta;
  std::optional<double> epsilon;
  std::optional<std::size_t> nodes;
  std::optional<std::size_t> order;
  std::optional<double> hhl_error;
  std::uint64_t seed = 0;
  bool normalize = false;
  std::string out_path;  // empty: stdout
  std::size_t trials = 0;
};

int cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Exactly one of the lists must be non-empty.
int cmd_sweep(const ExperimentConfig& config, const std::vector<double>& eps_list,
              const std::vector<std::size_t>& nodes_list, std::ostream& out,
              std::ostream& err);

int cmd_verify(std::uint64_t seed, const std::string& only, const std::string& out_path,
               std::ostream& out, std::ostream& err);

}  // namespace matfunc::cli
