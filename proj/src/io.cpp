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

#include "matfunc/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "matfunc/error.hpp"

namespace matfunc {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '%' || line[pos] == '#';
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  return out;
}

}  // namespace

ComplexMatrix parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) fail(lineno, "empty input");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix") {
    fail(lineno, "missing %%MatrixMarket matrix banner");
  }
  if (lower(format) != "coordinate") fail(lineno, "only coordinate format is supported");
  field = lower(field);
  symmetry = lower(symmetry);
  const bool is_complex = field == "complex";
  if (!is_complex && field != "real" && field != "integer") {
    fail(lineno, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian" &&
      symmetry != "skew-symmetric") {
    fail(lineno, "unsupported symmetry '" + symmetry + "'");
  }

  long long rows = 0, cols = 0, nnz = 0;
  for (;;) {
    ++lineno;
    if (!std::getline(in, line)) fail(lineno, "missing size line");
    if (skippable(line)) continue;
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0) {
      fail(lineno, "bad size line");
    }
    break;
  }
  if (rows != cols) fail(lineno, "matrix must be square");

  ComplexMatrix a = ComplexMatrix::Zero(rows, cols);
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(entry >> i >> j >> re)) fail(lineno, "bad entry");
    if (is_complex && !(entry >> im)) fail(lineno, "complex entry needs re and im");
    std::string extra;
    if (entry >> extra) fail(lineno, "trailing text '" + extra + "'");
    if (i < 1 || i > rows || j < 1 || j > cols) fail(lineno, "index out of range");
    if (!std::isfinite(re) || !std::isfinite(im)) fail(lineno, "non-finite entry");
    const Complex v(re, im);
    a(i - 1, j - 1) += v;
    if (i != j) {
      if (symmetry == "symmetric") a(j - 1, i - 1) += v;
      if (symmetry == "skew-symmetric") a(j - 1, i - 1) -= v;
      if (symmetry == "hermitian") a(j - 1, i - 1) += std::conj(v);
    }
    ++seen;
  }
  if (seen != nnz) {
    fail(lineno, "expected " + std::to_string(nnz) + " entries, found " +
                     std::to_string(seen));
  }
  return a;
}

ComplexMatrix read_matrix_market(const std::string& path) {
  auto in = open_in(path);
  try {
    return parse_matrix_market(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_matrix_market(const std::string& path, const ComplexMatrix& a) {
  auto out = open_out(path);
  std::size_t nnz = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) nnz += a(i, j) != Complex{} ? 1 : 0;
  }
  out << "%%MatrixMarket matrix coordinate complex general\n"
      << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) == Complex{}) continue;
      out << i + 1 << ' ' << j + 1 << ' ' << format_double(a(i, j).real()) << ' '
          << format_double(a(i, j).imag()) << '\n';
    }
  }
}

ComplexVector parse_vector(std::istream& in) {
  std::vector<Complex> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream entry(line);
    double re = 0.0, im = 0.0;
    if (!(entry >> re)) fail(lineno, "bad vector entry");
    if (!(entry >> im)) {
      if (!entry.eof()) fail(lineno, "bad imaginary part");
      im = 0.0;
    }
    std::string extra;
    entry.clear();
    if (entry >> extra) fail(lineno, "trailing text '" + extra + "'");
    if (!std::isfinite(re) || !std::isfinite(im)) fail(lineno, "non-finite entry");
    values.emplace_back(re, im);
  }
  if (values.empty()) throw Error(ErrorCode::ParseError, "vector file has no entries");
  return Eigen::Map<ComplexVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

ComplexVector read_vector(const std::string& path) {
  auto in = open_in(path);
  try {
    return parse_vector(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_vector(const std::string& path, const ComplexVector& v) {
  auto out = open_out(path);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << format_double(v(i).real()) << ' ' << format_double(v(i).imag()) << '\n';
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace matfunc
