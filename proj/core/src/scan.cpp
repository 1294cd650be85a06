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


#include "zmpo/scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

// Levels of a prefix (or suffix) trie over the bit strings of a batch.
// ids[c][p] is the node holding point p after c sites have been consumed;
// parent/bit describe how each node at level c + 1 was reached.
struct Trie {
  std::vector<std::vector<std::uint32_t>> ids;
  std::vector<std::vector<std::uint32_t>> parent;
  std::vector<std::vector<std::uint8_t>> bit;

  std::size_t nodes(std::size_t level) const { return parent[level].size(); }
};

// bits(p, s) is the bit of point p at site order[s].
template <typename BitFn>
Trie build_trie(std::size_t points, std::size_t levels, BitFn bits) {
  Trie t;
  t.ids.assign(levels + 1, std::vector<std::uint32_t>(points, 0));
  t.parent.resize(levels + 1);
  t.bit.resize(levels + 1);
  t.parent[0] = {0};
  t.bit[0] = {0};
  std::vector<std::int64_t> child;
  for (std::size_t s = 0; s < levels; ++s) {
    child.assign(2 * t.nodes(s), -1);
    for (std::size_t p = 0; p < points; ++p) {
      const std::uint8_t b = bits(p, s);
      std::int64_t& slot = child[2 * t.ids[s][p] + b];
      if (slot < 0) {
        slot = static_cast<std::int64_t>(t.parent[s + 1].size());
        t.parent[s + 1].push_back(t.ids[s][p]);
        t.bit[s + 1].push_back(b);
      }
      t.ids[s + 1][p] = static_cast<std::uint32_t>(slot);
    }
  }
  return t;
}

auto slice(const DenseTensor& a, std::uint8_t sigma) {
  const auto r = static_cast<Eigen::Index>(a.extent(2));
  return a.as_matrix(1).middleCols(sigma * r, r);
}

// Rows of `prev` selected by the trie's parents, grouped by bit and pushed
// through one site: next.row(c) = prev.row(parent[c]) * op(bit[c]).
template <typename OpFn>
Matrix advance(const Matrix& prev, const std::vector<std::uint32_t>& parent,
               const std::vector<std::uint8_t>& bits, Eigen::Index width, OpFn op) {
  Matrix next(static_cast<Eigen::Index>(parent.size()), width);
  for (std::uint8_t b = 0; b < 2; ++b) {
    std::vector<Eigen::Index> rows;
    for (std::size_t c = 0; c < parent.size(); ++c) {
      if (bits[c] == b) rows.push_back(static_cast<Eigen::Index>(c));
    }
    if (rows.empty()) continue;
    Matrix gathered(static_cast<Eigen::Index>(rows.size()), prev.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      gathered.row(static_cast<Eigen::Index>(i)) =
          prev.row(static_cast<Eigen::Index>(parent[static_cast<std::size_t>(rows[i])]));
    }
    Matrix moved = gathered * op(b);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      next.row(rows[i]) = moved.row(static_cast<Eigen::Index>(i));
    }
  }
  return next;
}

}  // namespace

double GridScan::max_abs() const {
  double m = 0.0;
  for (const GridSample& s : samples) m = std::max(m, std::abs(s.chi));
  return m;
}

void check_window(const GridWindow& w, std::uint64_t grid_size) {
  if (w.stride == 0 || !std::has_single_bit(w.stride)) {
    throw ParameterError("stride must be a power of two, got " + std::to_string(w.stride));
  }
  if (w.count == 0) throw ParameterError("count must be positive");
  const auto fits = [&](std::uint64_t origin) {
    if (origin > grid_size || w.stride > grid_size) return false;
    return w.count <= (grid_size - origin) / w.stride;
  };
  if (!fits(w.k0) || !fits(w.l0)) {
    throw RangeError("window origin (" + std::to_string(w.k0) + ", " +
                     std::to_string(w.l0) + ") + " + std::to_string(w.stride) + " x " +
                     std::to_string(w.count) + " exceeds N = " +
                     std::to_string(grid_size));
  }
}

GridEvaluator::GridEvaluator(MatrixProductState output, const TransformParams& p)
    : output_(std::move(output)), params_(p) {
  params_.validate();
  if (output_.size() != 2 * params_.n) {
    throw ShapeError("transform output has " + std::to_string(output_.size()) +
                     " sites, expected " + std::to_string(2 * params_.n));
  }
}

Complex GridEvaluator::evaluate(std::uint64_t k, std::uint64_t l) const {
  const std::uint64_t big_n = params_.grid_size();
  if (k >= big_n || l >= big_n) {
    throw RangeError("grid point outside [0, " + std::to_string(big_n) + ")^2");
  }
  return evaluate_amplitude(output_, bits_for(output_.labels(), k, l));
}

std::vector<Complex> GridEvaluator::evaluate(std::span<const GridPoint> points) const {
  const std::uint64_t big_n = params_.grid_size();
  for (const GridPoint& pt : points) {
    if (pt.k >= big_n || pt.l >= big_n) {
      throw RangeError("grid point (" + std::to_string(pt.k) + ", " +
                       std::to_string(pt.l) + ") outside [0, " + std::to_string(big_n) +
                       ")^2");
    }
  }
  if (points.empty()) return {};
  const std::size_t sites = output_.size();
  const auto& labels = output_.labels();
  const auto bit_at = [&](std::size_t p, std::size_t site) -> std::uint8_t {
    const SiteLabel& lab = labels[site];
    const std::uint64_t v = lab.reg == Register::kFirst ? points[p].k : points[p].l;
    return static_cast<std::uint8_t>((v >> lab.weight) & 1u);
  };
  const Trie left = build_trie(points.size(), sites,
                               [&](std::size_t p, std::size_t s) { return bit_at(p, s); });
  const Trie right = build_trie(points.size(), sites, [&](std::size_t p, std::size_t s) {
    return bit_at(p, sites - 1 - s);
  });

  // Split at the bond that minimises the work of both half contractions.
  const auto bond = [&](std::size_t c) {
    return static_cast<double>(c == sites ? 1 : output_.site(c).extent(0));
  };
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t split = 0;
  for (std::size_t c = 0; c <= sites; ++c) {
    double cost = static_cast<double>(points.size()) * bond(c);
    for (std::size_t s = 0; s < c; ++s) {
      cost += static_cast<double>(left.nodes(s + 1)) * bond(s) * bond(s + 1);
    }
    for (std::size_t s = c; s < sites; ++s) {
      cost += static_cast<double>(right.nodes(sites - s)) * bond(s) * bond(s + 1);
    }
    if (cost < best_cost) {
      best_cost = cost;
      split = c;
    }
  }

  Matrix lenv = Matrix::Ones(1, 1);
  for (std::size_t s = 0; s < split; ++s) {
    const DenseTensor& a = output_.site(s);
    lenv = advance(lenv, left.parent[s + 1], left.bit[s + 1],
                   static_cast<Eigen::Index>(a.extent(2)),
                   [&](std::uint8_t b) { return Matrix(slice(a, b)); });
  }
  Matrix renv = Matrix::Ones(1, 1);  // rows are transposed right environments
  for (std::size_t s = sites; s-- > split;) {
    const DenseTensor& a = output_.site(s);
    const std::size_t level = sites - s;
    renv = advance(renv, right.parent[level], right.bit[level],
                   static_cast<Eigen::Index>(a.extent(0)),
                   [&](std::uint8_t b) { return Matrix(slice(a, b).transpose()); });
  }

  std::vector<Complex> out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto li = static_cast<Eigen::Index>(left.ids[split][p]);
    const auto ri = static_cast<Eigen::Index>(right.ids[sites - split][p]);
    out[p] = lenv.row(li).cwiseProduct(renv.row(ri)).sum();
  }
  return out;
}

GridScan GridEvaluator::scan(const GridWindow& w) const { return scan_points(w, false); }

GridScan GridEvaluator::scan_periodic(const GridWindow& w) const {
  return scan_points(w, true);
}

GridScan GridEvaluator::scan_points(const GridWindow& w, bool wrap) const {
  const std::uint64_t big_n = params_.grid_size();
  GridWindow checked = w;
  if (wrap) checked.l0 = 0;
  check_window(checked, big_n);
  std::vector<GridPoint> points;
  points.reserve(w.count * w.count);
  for (std::size_t a = 0; a < w.count; ++a) {
    for (std::size_t b = 0; b < w.count; ++b) {
      const std::uint64_t l = w.l0 + b * w.stride;
      points.push_back({w.k0 + a * w.stride, wrap ? l % big_n : l});
    }
  }
  const std::vector<Complex> chi = evaluate(points);
  GridScan out{w, {}};
  out.samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.samples.push_back(
        {points[i].k, points[i].l, grid_z(params_, points[i].k, points[i].l), chi[i]});
  }
  return out;
}

GridScan grid_scan(const MatrixProductState& output, const TransformParams& p,
                   std::uint64_t k0, std::uint64_t l0, std::uint64_t stride,
                   std::size_t count) {
  return GridEvaluator(output, p).scan({k0, l0, stride, count});
}

}  // namespace zmpo
