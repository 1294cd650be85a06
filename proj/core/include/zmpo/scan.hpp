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

// Windowed evaluation of a transform output without forming the N x N grid.
//
// A window (k0, l0, stride, count) samples k = k0 + a * stride and
// l = l0 + b * stride for a, b < count. With a power-of-two stride 2^s the
// s lowest bits of k - k0 and l - l0 are zero, so a coarse scan only reads
// the leading bits of each index.

#ifndef ZMPO_SCAN_HPP_
#define ZMPO_SCAN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zmpo/mps.hpp"
#include "zmpo/oracle.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

struct GridSample {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  Complex z;
  Complex chi;
};

struct GridWindow {
  std::uint64_t k0 = 0;
  std::uint64_t l0 = 0;
  std::uint64_t stride = 1;
  std::size_t count = 256;

  friend bool operator==(const GridWindow&, const GridWindow&) = default;
};

struct GridScan {
  GridWindow window;
  // Row-major: samples[a * count + b] holds (k0 + a stride, l0 + b stride).
  std::vector<GridSample> samples;

  const GridSample& at(std::size_t a, std::size_t b) const {
    return samples[a * window.count + b];
  }
  double max_abs() const;
};

// Throws ParameterError unless stride is a power of two and count >= 1, and
// RangeError unless origin + stride * count <= N on both axes.
void check_window(const GridWindow& w, std::uint64_t grid_size);

class GridEvaluator {
 public:
  // `output` is a transform output on 2 p.n sites. Throws ShapeError otherwise.
  GridEvaluator(MatrixProductState output, const TransformParams& p);

  const TransformParams& params() const { return params_; }
  const MatrixProductState& output() const { return output_; }

  // Throws RangeError outside [0, N)^2.
  Complex evaluate(std::uint64_t k, std::uint64_t l) const;

  // Batch evaluation sharing contractions between points with common
  // leading or trailing bits. Same errors as evaluate().
  std::vector<Complex> evaluate(std::span<const GridPoint> points) const;

  GridScan scan(const GridWindow& w) const;

  // As scan(), but l wraps around modulo N, which is exact when omega_i is a
  // multiple of 2 pi. Only k is range checked.
  GridScan scan_periodic(const GridWindow& w) const;

 private:
  GridScan scan_points(const GridWindow& w, bool wrap) const;

  MatrixProductState output_;
  TransformParams params_;
};

GridScan grid_scan(const MatrixProductState& output, const TransformParams& p,
                   std::uint64_t k0, std::uint64_t l0, std::uint64_t stride,
                   std::size_t count);

}  // namespace zmpo

#endif  // ZMPO_SCAN_HPP_
