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

// Transform parameters, the z-plane grid and the direct-summation reference.
//
// For a signal x_0, ..., x_{N-1} with N = 2^n the transform samples
//
//     chi_{k,l} = sum_j x_j exp(-(omega_r k / N) j) exp(-i (omega_i l / N) j)
//
// at the grid points z_{k,l} = exp(-(omega_r k + i omega_i l) / N),
// 0 <= k, l < N. k sets the radius |z| and l the angle.

#ifndef ZMPO_ORACLE_HPP_
#define ZMPO_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "zmpo/mps.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct TransformParams {
  std::size_t n = 1;
  double omega_r = kTwoPi;
  double omega_i = kTwoPi;
  double tau = 1e-15;

  std::uint64_t grid_size() const { return std::uint64_t{1} << n; }

  // Throws ParameterError for n outside [1, 40], non-finite scales or tau
  // outside [0, 1).
  void validate() const;

  // omega_r >= 0 and omega_i a multiple of 2 pi. Other values run but are
  // only checked against the direct sum at small n.
  bool validated_domain() const;
};

struct GridPoint {
  std::uint64_t k = 0;
  std::uint64_t l = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

Complex grid_z(const TransformParams& p, std::uint64_t k, std::uint64_t l);

// Fractional grid coordinates (k, l) of a point z != 0, i.e. the solution of
// z = exp(-(omega_r k + i omega_i l) / N) with l taken in [0, N) when
// omega_i is a multiple of 2 pi. k may fall outside [0, N).
std::pair<double, double> grid_coordinates(const TransformParams& p, Complex z);

// Direct O(N) summation per point. Throws RangeError for points outside
// [0, N)^2 and ShapeError if x does not have length 2^p.n.
std::vector<Complex> direct_oracle(const SignalVector& x, const TransformParams& p,
                                   std::span<const GridPoint> points);

// Whole grid as an N x N row-major array (row k, column l), computed as one
// matrix product. Throws ShapeError above n = 12.
std::vector<Complex> dense_grid_oracle(const SignalVector& x, const TransformParams& p);

struct ErrorReport {
  double delta_max = 0.0;
  double delta_mean = 0.0;
  std::size_t sample_count = 0;
};

// |approx - exact| / sum_j |x_j| per sample. Throws ShapeError on a length
// mismatch and DegenerateStateError when x is identically zero.
ErrorReport error_metrics(std::span<const Complex> approx, std::span<const Complex> exact,
                          const SignalVector& x);

}  // namespace zmpo

#endif  // ZMPO_ORACLE_HPP_
