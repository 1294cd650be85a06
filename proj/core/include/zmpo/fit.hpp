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

// Least-squares line fits used by the benchmark suites.

#ifndef ZMPO_FIT_HPP_
#define ZMPO_FIT_HPP_

#include <span>

namespace zmpo {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// y = slope * x + intercept. Throws ParameterError with fewer than two
// points, mismatched lengths or constant x.
LineFit linear_fit(std::span<const double> x, std::span<const double> y);

// log y = slope * log x + intercept (natural logs); the prefactor is
// exp(intercept). Throws ParameterError on non-positive data.
LineFit log_log_fit(std::span<const double> x, std::span<const double> y);

// Prefactor c of y ~ c x^exponent with the exponent held fixed: the
// geometric mean of y / x^exponent. Throws ParameterError on non-positive
// data or mismatched lengths.
double power_law_prefactor(std::span<const double> x, std::span<const double> y,
                           double exponent);

struct ExponentialFit {
  double amplitude = 0.0;
  double rate = 0.0;
  double r_squared = 0.0;
};

// values[k] ~ amplitude * exp(-rate * k), fitted on log values with
// k = 0, 1, .... Throws ParameterError on non-positive values or fewer than
// two of them.
ExponentialFit exponential_fit(std::span<const double> values);

}  // namespace zmpo

#endif  // ZMPO_FIT_HPP_
