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


#include "zmpo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

void check_signal(const SignalVector& x, const TransformParams& p) {
  p.validate();
  if (x.n() != p.n) {
    throw ShapeError("signal of length " + std::to_string(x.size()) +
                     " does not match n = " + std::to_string(p.n));
  }
}

// omega_i / 2 pi when that is an integer, so phases reduce exactly mod N.
std::optional<std::int64_t> fourier_multiple(double omega_i) {
  const double m = omega_i / kTwoPi;
  const double r = std::round(m);
  if (std::abs(m - r) > 1e-12 * std::max(1.0, std::abs(m)) || std::abs(r) > 1e12) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(r);
}

// exp(-i omega_i l j / N), with the integer part of the turn count removed
// before any rounding when omega_i is a multiple of 2 pi.
Complex phase(const TransformParams& p, std::optional<std::int64_t> multiple,
              std::uint64_t l, std::uint64_t j) {
  const std::uint64_t n_mask = p.grid_size() - 1;
  if (multiple) {
    const auto m = static_cast<std::uint64_t>(*multiple);
    // (m l j) mod N; unsigned wrap-around is harmless because N divides 2^64.
    const std::uint64_t r = (m * ((l * j) & n_mask)) & n_mask;
    return std::polar(1.0, -kTwoPi * static_cast<double>(r) /
                               static_cast<double>(p.grid_size()));
  }
  return std::polar(1.0, -p.omega_i * static_cast<double>(l) *
                             static_cast<double>(j) /
                             static_cast<double>(p.grid_size()));
}

}  // namespace

void TransformParams::validate() const {
  if (n < 1 || n > 40) {
    throw ParameterError("n must be in [1, 40], got " + std::to_string(n));
  }
  if (!std::isfinite(omega_r) || !std::isfinite(omega_i)) {
    throw ParameterError("grid scales must be finite");
  }
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw ParameterError("tau must lie in [0, 1)");
  }
}

bool TransformParams::validated_domain() const {
  return omega_r >= 0.0 && fourier_multiple(omega_i).has_value() && omega_i != 0.0;
}

Complex grid_z(const TransformParams& p, std::uint64_t k, std::uint64_t l) {
  const double inv_n = 1.0 / static_cast<double>(p.grid_size());
  const double radius = std::exp(-p.omega_r * static_cast<double>(k) * inv_n);
  return std::polar(radius, -p.omega_i * static_cast<double>(l) * inv_n);
}

std::pair<double, double> grid_coordinates(const TransformParams& p, Complex z) {
  if (z == Complex(0.0)) throw ParameterError("z = 0 has no grid coordinates");
  const double big_n = static_cast<double>(p.grid_size());
  const Complex s = -std::log(z);  // s = (omega_r k + i omega_i l) / N
  const double k = p.omega_r != 0.0 ? s.real() * big_n / p.omega_r : 0.0;
  double l = p.omega_i != 0.0 ? s.imag() * big_n / p.omega_i : 0.0;
  if (fourier_multiple(p.omega_i)) {
    const double period = big_n * kTwoPi / std::abs(p.omega_i);
    l = std::fmod(l, period);
    if (l < 0.0) l += period;
  }
  return {k, l};
}

std::vector<Complex> direct_oracle(const SignalVector& x, const TransformParams& p,
                                   std::span<const GridPoint> points) {
  check_signal(x, p);
  const std::uint64_t big_n = p.grid_size();
  const auto multiple = fourier_multiple(p.omega_i);
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const GridPoint& pt : points) {
    if (pt.k >= big_n || pt.l >= big_n) {
      throw RangeError("grid point (" + std::to_string(pt.k) + ", " +
                       std::to_string(pt.l) + ") outside [0, " + std::to_string(big_n) +
                       ")^2");
    }
    const double rate = p.omega_r * static_cast<double>(pt.k) / static_cast<double>(big_n);
    Complex sum = 0.0;
    for (std::uint64_t j = 0; j < big_n; ++j) {
      sum += x[j] * std::exp(-rate * static_cast<double>(j)) * phase(p, multiple, pt.l, j);
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Complex> dense_grid_oracle(const SignalVector& x, const TransformParams& p) {
  check_signal(x, p);
  if (p.n > 12) throw ShapeError("dense grid oracle is limited to n <= 12");
  const auto big_n = static_cast<Eigen::Index>(p.grid_size());
  const auto multiple = fourier_multiple(p.omega_i);
  Matrix radial(big_n, big_n);
  Matrix angular(big_n, big_n);
  for (Eigen::Index k = 0; k < big_n; ++k) {
    const double rate = p.omega_r * static_cast<double>(k) / static_cast<double>(big_n);
    for (Eigen::Index j = 0; j < big_n; ++j) {
      radial(k, j) = std::exp(-rate * static_cast<double>(j));
    }
  }
  for (Eigen::Index j = 0; j < big_n; ++j) {
    for (Eigen::Index l = 0; l < big_n; ++l) {
      angular(j, l) = x[static_cast<std::size_t>(j)] *
                      phase(p, multiple, static_cast<std::uint64_t>(l),
                            static_cast<std::uint64_t>(j));
    }
  }
  Matrix chi = radial * angular;
  return std::vector<Complex>(chi.data(), chi.data() + chi.size());
}

ErrorReport error_metrics(std::span<const Complex> approx, std::span<const Complex> exact,
                          const SignalVector& x) {
  if (approx.size() != exact.size()) {
    throw ShapeError("error_metrics: " + std::to_string(approx.size()) + " vs " +
                     std::to_string(exact.size()) + " values");
  }
  const double l1 = x.l1_norm();
  if (!(l1 > 0.0)) throw DegenerateStateError("error normalisation by a zero signal");
  ErrorReport r;
  r.sample_count = approx.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double d = std::abs(approx[i] - exact[i]) / l1;
    r.delta_max = std::max(r.delta_max, d);
    sum += d;
  }
  if (r.sample_count > 0) r.delta_mean = sum / static_cast<double>(r.sample_count);
  return r;
}

}  // namespace zmpo
