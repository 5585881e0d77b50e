// Copyright 2026 The Noise Eater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference computations used by the tests. Nothing here calls
// into the library's state machinery.

#ifndef NOISE_EATER_TESTS_ORACLES_H_
#define NOISE_EATER_TESTS_ORACLES_H_

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <utility>

namespace oracle {

using Complex = std::complex<double>;
using Poly = std::map<std::pair<int, int>, Complex>;  // (i, j) -> coeff of a^i b^j

/// a^+ -> m[0][0] a^+ + m[1][0] b^+,  b^+ -> m[0][1] a^+ + m[1][1] b^+.
using Matrix = std::array<std::array<Complex, 2>, 2>;

inline Matrix beam_splitter_matrix(double t) {
  const Complex tr{std::sqrt(t), 0.0};
  const Complex rf{0.0, std::sqrt(1.0 - t)};
  return {{{tr, rf}, {rf, tr}}};
}

inline Poly multiply(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [e1, c1] : p) {
    for (const auto& [e2, c2] : q) {
      out[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
    }
  }
  return out;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

/// Output amplitudes of |n1, n2> by expanding the transformed creation
/// operators as polynomials and applying them to the vacuum.
inline std::map<std::pair<int, int>, Complex> transform_two_mode(int n1, int n2, const Matrix& m) {
  const Poly a{{{1, 0}, m[0][0]}, {{0, 1}, m[1][0]}};
  const Poly b{{{1, 0}, m[0][1]}, {{0, 1}, m[1][1]}};
  Poly p{{{0, 0}, 1.0}};
  for (int k = 0; k < n1; ++k) p = multiply(p, a);
  for (int k = 0; k < n2; ++k) p = multiply(p, b);
  std::map<std::pair<int, int>, Complex> out;
  const double norm = std::sqrt(factorial(n1) * factorial(n2));
  for (const auto& [e, c] : p) {
    out[e] = c * std::sqrt(factorial(e.first) * factorial(e.second)) / norm;
  }
  return out;
}

}  // namespace oracle

#endif  // NOISE_EATER_TESTS_ORACLES_H_
