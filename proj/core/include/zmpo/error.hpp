/*
 * Copyright 2026 The zmpo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZMPO_ERROR_HPP_
#define ZMPO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace zmpo {

// Base class for every error raised by the library. Callers that only care
// about "something in zmpo failed" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extents or lengths that do not fit together (non power-of-two signals,
// bad reshape partitions, wrong bit-string lengths).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter outside its documented domain (cutoff, gate indices).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Operator and state site layouts that cannot be combined.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Grid indices or windows outside [0, N).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Zero-norm states or signals where a normalisation is required.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// A LAPACK driver reported failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed input files (signal CSV, MPO cache containers).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace zmpo

#endif  // ZMPO_ERROR_HPP_
