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

#ifndef NOISE_EATER_VALIDATION_H_
#define NOISE_EATER_VALIDATION_H_

#include <cstdint>
#include <string>
#include <vector>

namespace noise_eater {

/// Outcome of one simulated-versus-closed-form comparison.
struct OracleCheck {
  std::string name;
  int draws = 0;
  double max_residual = 0.0;
  std::string worst_case;  // parameters of the largest residual
};

/// Compares the Fock-space simulation with every closed-form expression over
/// `draws` random parameter/phase draws each.
std::vector<OracleCheck> run_oracle_suite(std::uint64_t seed, int draws = 200);

}  // namespace noise_eater

#endif  // NOISE_EATER_VALIDATION_H_
