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

#include "matfunc/function_spec.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "matfunc/error.hpp"
#include "matfunc/instances.hpp"

namespace matfunc {
namespace {

TEST(FunctionSpec, CatalogDiskMaxima) {
  EXPECT_NEAR(FunctionSpec::exp(2.0).disk_max(), std::exp(2.0), 1e-12);
  EXPECT_NEAR(FunctionSpec::cos(2.0).disk_max(), std::cosh(2.0), 1e-12);
  EXPECT_NEAR(FunctionSpec::sin(1.5).disk_max(), std::cosh(1.5), 1e-12);
  EXPECT_NEAR(FunctionSpec::geometric(3.0, 2.0).disk_max(), 3.0, 1e-12);
}

TEST(FunctionSpec, Coefficients) {
  EXPECT_NEAR(FunctionSpec::exp(2.0).coeff(5).real(), 1.0 / 120.0, 1e-17);
  EXPECT_NEAR(FunctionSpec::cos(2.0).coeff(4).real(), 1.0 / 24.0, 1e-17);
  EXPECT_EQ(FunctionSpec::cos(2.0).coeff(3), Complex(0.0));
  EXPECT_NEAR(FunctionSpec::sin(2.0).coeff(3).real(), -1.0 / 6.0, 1e-17);
  EXPECT_NEAR(FunctionSpec::geometric(3.0, 2.0).coeff(4).real(), 1.0 / 81.0, 1e-17);
  const FunctionSpec p = FunctionSpec::polynomial({1.0, 0.0, 2.0}, 2.0);
  EXPECT_EQ(p.coeff(2), Complex(2.0));
  EXPECT_EQ(p.coeff(40), Complex(0.0));
  EXPECT_EQ(p.degree_bound(), 3u);
}

TEST(FunctionSpec, FactorialCoefficientsStayAccurateFarOut) {
  // 1/170! as a double; well past where naive products lose range.
  EXPECT_NEAR(FunctionSpec::exp(2.0).coeff(170).real() * std::tgamma(171.0), 1.0, 1e-12);
  EXPECT_EQ(FunctionSpec::exp(2.0).coeff(400), Complex(0.0));
}

TEST(FunctionSpec, GeometricPoleMustLieOutsideDisk) {
  EXPECT_THROW(FunctionSpec::geometric(2.0, 2.0), Error);
  EXPECT_THROW(FunctionSpec::geometric(1.5, 2.0), Error);
}

TEST(FunctionSpec, RadiusMustExceedOne) {
  EXPECT_THROW(FunctionSpec::exp(1.0), Error);
  EXPECT_THROW(FunctionSpec::polynomial({1.0}, 0.5), Error);
}

TEST(FunctionSpec, SampledDiskMaxIsSafe) {
  // 1 + z/2 + z^2/4 + z^3/8 peaks at 4 on |z| = 2; sampling hits z = 2 exactly.
  const FunctionSpec p = FunctionSpec::polynomial({1.0, 0.5, 0.25, 0.125}, 2.0);
  EXPECT_NEAR(p.disk_max(), 4.0 * 1.01, 1e-12);
}

TEST(FunctionSpec, CauchyEstimate) {
  std::vector<FunctionSpec> specs = catalog_functions();
  specs.push_back(cubic_example());
  specs.push_back(FunctionSpec::custom({0.5, Complex(0.0, -0.3), 0.0, 0.1}, 1.8));
  for (const auto& fs : specs) {
    for (std::size_t j = 0; j <= 64; ++j) {
      EXPECT_LE(std::abs(fs.coeff(j)),
                fs.disk_max() / std::pow(fs.radius(), static_cast<double>(j)) + 1e-12)
          << fs.name() << " j=" << j;
    }
  }
}

TEST(FunctionSpec, EvaluateAgainstClosedForms) {
  const Complex z(0.7, -1.1);
  EXPECT_LE(std::abs(FunctionSpec::exp(2.0).evaluate(z, 1e-14) - std::exp(z)), 1e-13);
  EXPECT_LE(std::abs(FunctionSpec::cos(2.0).evaluate(z, 1e-14) - std::cos(z)), 1e-13);
  EXPECT_LE(std::abs(FunctionSpec::sin(2.0).evaluate(z, 1e-14) - std::sin(z)), 1e-13);
  EXPECT_LE(std::abs(FunctionSpec::geometric(3.0, 2.0).evaluate(z, 1e-14) -
                     1.0 / (1.0 - z / 3.0)),
            1e-13);
}

TEST(FunctionSpec, EvaluateOutsideDiskIsDivergent) {
  try {
    FunctionSpec::exp(2.0).evaluate(2.0, 1e-10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivergentSeries);
  }
}

TEST(FunctionSpec, ParseKind) {
  EXPECT_EQ(parse_function_kind("exp"), FunctionKind::Exp);
  EXPECT_EQ(parse_function_kind("geometric"), FunctionKind::Geometric);
  EXPECT_EQ(parse_function_kind("poly"), FunctionKind::Polynomial);
  EXPECT_EQ(parse_function_kind("custom"), FunctionKind::Custom);
  EXPECT_FALSE(parse_function_kind("log").has_value());
}

}  // namespace
}  // namespace matfunc
