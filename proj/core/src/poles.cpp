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


#include "zmpo/poles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

struct Pending {
  PoleCandidate candidate;
  std::size_t level = 0;
};

std::vector<PoleCandidate> strongest(std::vector<PoleCandidate> c, std::size_t limit) {
  std::stable_sort(c.begin(), c.end(), [](const PoleCandidate& a, const PoleCandidate& b) {
    return a.magnitude > b.magnitude;
  });
  if (c.size() > limit) c.resize(limit);
  return c;
}

}  // namespace

std::vector<PoleCandidate> detect_peaks(const GridScan& scan, double threshold, double plateau_tolerance,
                                        bool periodic_l) {
  const std::size_t count = scan.window.count;
  const double peak = scan.max_abs();
  std::vector<PoleCandidate> out;
  if (!(peak > 0.0)) return out;
  const double floor = threshold * peak;
  const double tol = plateau_tolerance * peak;
  const auto mag = [&](std::size_t a, std::size_t b) { return std::abs(scan.at(a, b).chi); };
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const double v = mag(a, b);
      if (v < floor) continue;
      bool strict = true;
      bool any = false;
      for (int da = -1; da <= 1 && strict; ++da) {
        for (int db = -1; db <= 1 && strict; ++db) {
          if (da == 0 && db == 0) continue;
          const auto na = static_cast<std::int64_t>(a) + da;
          auto nb = static_cast<std::int64_t>(b) + db;
          if (na < 0 || na >= static_cast<std::int64_t>(count)) continue;
          if (nb < 0 || nb >= static_cast<std::int64_t>(count)) {
            if (!periodic_l) continue;
            nb = (nb + static_cast<std::int64_t>(count)) % static_cast<std::int64_t>(count);
          }
          if (nb == static_cast<std::int64_t>(b) && na == static_cast<std::int64_t>(a)) {
            continue;
          }
          any = true;
          if (!(v > mag(static_cast<std::size_t>(na), static_cast<std::size_t>(nb)) + tol)) {
            strict = false;
          }
        }
      }
      if (!strict || !any) continue;
      const GridSample& s = scan.at(a, b);
      out.push_back({s.k, s.l, s.z, 1.0 / s.z, v, scan.window, scan.window.stride});
    }
  }
  return out;
}

PoleSearchResult find_poles(const GridEvaluator& eval, const PoleSearchOptions& options) {
  const TransformParams& p = eval.params();
  const std::uint64_t big_n = p.grid_size();
  if (options.count == 0) throw ParameterError("count must be positive");
  if (!(options.threshold >= 0.0)) throw ParameterError("threshold must be >= 0");
  if (options.zoom_cells == 0) throw ParameterError("zoom_cells must be positive");
  const std::size_t count = static_cast<std::size_t>(
      std::min<std::uint64_t>(options.count, big_n));
  std::uint64_t stride = options.initial_stride;
  if (stride == 0) stride = std::max<std::uint64_t>(1, big_n / count);
  if (!std::has_single_bit(stride)) {
    throw ParameterError("initial stride must be a power of two");
  }
  const std::size_t coarse_count =
      static_cast<std::size_t>(std::min<std::uint64_t>(count, big_n / std::min(stride, big_n)));

  PoleSearchResult result;
  if (options.threshold > 1.0) {
    result.notes.push_back("threshold above 1: no sample can reach threshold x window max");
  }
  if (!p.validated_domain()) {
    result.notes.push_back("grid scales outside the validated domain");
  }

  const auto scan_window = [&](const GridWindow& w, std::size_t level) {
    GridScan s = eval.scan_periodic(w);
    if (options.keep_scans) result.scans.push_back({level, s});
    return s;
  };
  const auto full_period = [&](const GridWindow& w) {
    return w.stride * w.count == big_n;
  };

  const GridWindow coarse{0, 0, stride, coarse_count};
  const GridScan first = scan_window(coarse, 0);
  std::vector<PoleCandidate> found =
      detect_peaks(first, options.threshold, options.plateau_tolerance, full_period(coarse));
  if (found.size() > options.max_candidates) {
    result.notes.push_back("level 0: kept the " + std::to_string(options.max_candidates) +
                           " strongest of " + std::to_string(found.size()) + " peaks");
  }
  std::vector<Pending> pending;
  for (PoleCandidate& c : strongest(std::move(found), options.max_candidates)) {
    pending.push_back({std::move(c), 0});
  }

  std::vector<PoleCandidate> final_list;
  while (!pending.empty()) {
    Pending cur = std::move(pending.front());
    pending.erase(pending.begin());
    const std::uint64_t parent = cur.candidate.resolution;
    const std::uint64_t next =
        std::max<std::uint64_t>(1, options.zoom_cells * parent / count);
    if (cur.level >= options.refine_levels || next >= parent) {
      final_list.push_back(cur.candidate);
      continue;
    }
    const std::uint64_t span = next * count;
    const std::uint64_t half = next * (count / 2);
    GridWindow w{0, 0, next, count};
    w.k0 = cur.candidate.k > half ? cur.candidate.k - half : 0;
    if (span <= big_n) w.k0 = std::min(w.k0, big_n - span);
    w.l0 = (cur.candidate.l + big_n - half % big_n) % big_n;
    const GridScan fine = scan_window(w, cur.level + 1);
    std::vector<PoleCandidate> sub = detect_peaks(fine, options.threshold, options.plateau_tolerance, full_period(w));
    if (sub.empty()) {
      result.notes.push_back("level " + std::to_string(cur.level + 1) +
                             ": no peak around (" + std::to_string(cur.candidate.k) + ", " +
                             std::to_string(cur.candidate.l) +
                             "); kept the coarser candidate");
      final_list.push_back(cur.candidate);
      continue;
    }
    if (sub.size() > options.max_candidates) {
      result.notes.push_back("level " + std::to_string(cur.level + 1) + ": kept the " +
                             std::to_string(options.max_candidates) + " strongest of " +
                             std::to_string(sub.size()) + " peaks");
    }
    for (PoleCandidate& c : strongest(std::move(sub), options.max_candidates)) {
      pending.push_back({std::move(c), cur.level + 1});
    }
  }

  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (PoleCandidate& c : final_list) {
    if (seen.insert({c.k, c.l % big_n}).second) result.candidates.push_back(std::move(c));
  }
  if (result.candidates.empty()) {
    result.notes.push_back("no strict local maximum above threshold");
  }
  return result;
}

double grid_cell_distance(const TransformParams& p, const PoleCandidate& c, Complex pole) {
  if (pole == Complex(0.0)) throw ParameterError("pole at 0 has no grid image");
  const auto [k, l] = grid_coordinates(p, 1.0 / pole);
  const double big_n = static_cast<double>(p.grid_size());
  const double dk = std::abs(static_cast<double>(c.k) - k);
  double dl = std::abs(static_cast<double>(c.l) - l);
  dl = std::min(dl, big_n - dl);
  return std::max(dk, dl) / static_cast<double>(c.resolution);
}

}  // namespace zmpo
