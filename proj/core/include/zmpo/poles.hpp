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

// Coarse-to-fine search for peaks of |chi| on the z-plane grid.
//
// Level 0 scans the whole grid at `initial_stride`. Every strict local
// maximum (8-neighbour stencil) whose magnitude is at least
// threshold * (window maximum) becomes a candidate, and each candidate is
// re-scanned on a window of `count` x `count` samples that spans
// `zoom_cells` cells of the parent grid, centred on it. The stride at level
// L + 1 is therefore max(1, zoom_cells * stride_L / count).
//
// Index l is treated as periodic (exact for omega_i a multiple of 2 pi);
// k is not, and stencil neighbours outside [0, N) are ignored.
//
// With chi(z) = sum_j x_j z^j a decaying mode x_j = p^j makes |chi| peak at
// z = 1 / p, so each candidate also reports pole = 1 / z.

#ifndef ZMPO_POLES_HPP_
#define ZMPO_POLES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zmpo/oracle.hpp"
#include "zmpo/scan.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

struct PoleSearchOptions {
  // 0 picks N / count (the whole grid in one window).
  std::uint64_t initial_stride = 0;
  std::size_t count = 256;
  std::size_t refine_levels = 2;
  double threshold = 0.5;
  std::uint64_t zoom_cells = 8;
  // Neighbours within plateau_tolerance * (window maximum) of a sample do
  // not count as lower, so round-off ripples on flat regions are not peaks.
  double plateau_tolerance = 1e-6;
  // Candidates followed per window, strongest first.
  std::size_t max_candidates = 16;
  // Keep every scanned window in the result.
  bool keep_scans = false;
};

struct PoleCandidate {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  Complex z;
  Complex pole;
  double magnitude = 0.0;
  // Window in which the candidate was detected.
  GridWindow window;
  // Grid step at detection.
  std::uint64_t resolution = 1;
};

struct LevelScan {
  std::size_t level = 0;
  GridScan scan;
};

struct PoleSearchResult {
  std::vector<PoleCandidate> candidates;
  std::vector<LevelScan> scans;
  std::vector<std::string> notes;
};

// Strict local maxima of one scanned window. `periodic_l` wraps the l
// neighbours around the window (use only when the window spans all of l).
std::vector<PoleCandidate> detect_peaks(const GridScan& scan, double threshold, double plateau_tolerance,
                                        bool periodic_l);

// Throws ParameterError for a non-power-of-two stride, count == 0,
// threshold < 0 or zoom_cells == 0. An empty candidate list is a valid
// outcome.
PoleSearchResult find_poles(const GridEvaluator& eval, const PoleSearchOptions& options = {});

// Distance from the candidate's grid point to the grid point where a mode
// with pole `pole` peaks, in units of the candidate's resolution (Chebyshev
// norm over (k, l), l circular).
double grid_cell_distance(const TransformParams& p, const PoleCandidate& c, Complex pole);

}  // namespace zmpo

#endif  // ZMPO_POLES_HPP_
