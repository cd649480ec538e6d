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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace matfunc {

struct InvariantOutcome {
  bool passed = false;
  std::string detail;
};

struct Invariant {
  std::string module;
  std::string name;  // "<module>:<property>"
  std::function<InvariantOutcome(std::uint64_t seed)> check;
};

const std::vector<Invariant>& invariant_catalog();

/// All invariants when `only` is empty, else those whose module or full name
/// equals `only`. Throws InvalidArgument when nothing matches.
std::vector<const Invariant*> select_invariants(const std::string& only);

/// Runs the selection, printing "PASS|FAIL <name>: <detail>" per line.
/// Returns the number of failures.
int run_invariants(const std::vector<const Invariant*>& selection, std::uint64_t seed,
                   std::ostream& out);

}  // namespace matfunc
