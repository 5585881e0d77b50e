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

#ifndef NOISE_EATER_ERRORS_H_
#define NOISE_EATER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace noise_eater {

// Bad arguments (invalid mode, out-of-range parameter) are reported with
// std::invalid_argument. Numeric failures derive from NumericError.

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ket would exceed the configured photon-number cutoff.
class CutoffError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The requested quantity is undefined for these parameters (e.g. a fringe
/// with no counts, or an objective with no variation).
class DegenerateError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace noise_eater

#endif  // NOISE_EATER_ERRORS_H_
