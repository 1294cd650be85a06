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


#include "zmpo/mpo_builder.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "zmpo/error.hpp"
#include "zmpo/gates.hpp"

namespace zmpo {
namespace {

void check_build_params(std::size_t n, double rate, double tau) {
  if (n == 0) throw ParameterError("n must be at least 1");
  if (!std::isfinite(rate)) throw ParameterError("rate must be finite");
  if (!(tau >= 0.0 && tau < 1.0)) throw ParameterError("cutoff must lie in [0, 1)");
}

DenseTensor pass_through(std::size_t bond) {
  DenseTensor w({bond, 2, 2, bond});
  for (std::size_t b = 0; b < bond; ++b) {
    for (std::size_t i = 0; i < 2; ++i) w.at({b, i, i, b}) = 1.0;
  }
  return w;
}

// Folds the layers left to right: layers[0] acts first.
MatrixProductOperator fold(std::vector<MatrixProductOperator> layers, double tau) {
  MatrixProductOperator acc = std::move(layers.front());
  for (std::size_t i = 1; i < layers.size(); ++i) {
    acc = zip_merge(acc, layers[i], tau);
  }
  return acc;
}

}  // namespace

MatrixProductOperator controlled_fan_out(const std::vector<SiteLabel>& labels,
                                         std::size_t source, const DenseTensor& gate,
                                         const std::vector<DiagonalTarget>& targets) {
  const std::size_t len = labels.size();
  if (source >= len) throw RangeError("fan-out source outside the chain");
  if (gate.shape() != Shape{2, 2}) throw ShapeError("fan-out gate must be 2 x 2");
  std::size_t prev = source;
  for (const DiagonalTarget& t : targets) {
    if (t.site <= prev || t.site >= len) {
      throw RangeError("fan-out targets must be ascending and right of the source");
    }
    prev = t.site;
  }
  const std::size_t last = targets.empty() ? source : targets.back().site;

  std::vector<DenseTensor> sites;
  sites.reserve(len);
  std::size_t next_target = 0;
  for (std::size_t s = 0; s < len; ++s) {
    if (s < source || s > last) {
      sites.push_back(pass_through(1));
    } else if (s == source) {
      const std::size_t bond = targets.empty() ? 1 : 2;
      DenseTensor w({1, 2, 2, bond});
      for (std::size_t o = 0; o < 2; ++o) {
        for (std::size_t i = 0; i < 2; ++i) {
          w.at({0, o, i, bond == 2 ? o : 0}) = gate.at({o, i});
        }
      }
      sites.push_back(std::move(w));
    } else if (next_target < targets.size() && targets[next_target].site == s) {
      DenseTensor block = fused_diagonal_block(targets[next_target].factors);
      ++next_target;
      if (s == last) {
        // Close the bond: sum the block over its right leg.
        DenseTensor w({2, 2, 2, 1});
        for (std::size_t b = 0; b < 2; ++b) {
          for (std::size_t i = 0; i < 2; ++i) w.at({b, i, i, 0}) = block.at({b, i, i, b});
        }
        sites.push_back(std::move(w));
      } else {
        sites.push_back(std::move(block));
      }
    } else {
      sites.push_back(pass_through(2));
    }
  }
  return MatrixProductOperator(std::move(sites), labels, labels);
}

MatrixProductOperator build_dt_mpo(std::size_t n, double omega_r, double tau) {
  check_build_params(n, omega_r, tau);
  const std::vector<SiteLabel> labels = paired_labels(n);
  std::vector<MatrixProductOperator> layers;
  // Register-1 layers: damping-Hadamard on qubit l, then controls from the
  // still untouched register-1 qubits m > l.
  const DenseTensor h = damping_hadamard(omega_r).tensor;
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<DiagonalTarget> targets;
    for (std::size_t m = l + 1; m <= n; ++m) {
      const double theta = controlled_damping_angle(l, m, omega_r);
      targets.push_back({first_register_site(m), {1.0, std::exp(-theta)}});
    }
    layers.push_back(controlled_fan_out(labels, first_register_site(l), h, targets));
  }
  // Controls m < l come from the register-2 copy of bit m.
  DenseTensor eye({2, 2}, {1.0, 0.0, 0.0, 1.0});
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<DiagonalTarget> targets;
    for (std::size_t l = m + 1; l <= n; ++l) {
      const double theta = controlled_damping_angle(l, m, omega_r);
      targets.push_back({first_register_site(l), {1.0, std::exp(-theta)}});
    }
    layers.push_back(controlled_fan_out(labels, second_register_site(m), eye, targets));
  }
  MatrixProductOperator dt = fold(std::move(layers), tau);

  std::vector<SiteLabel> out = labels;
  for (std::size_t l = 1; l <= n; ++l) {
    out[first_register_site(l)] = {Register::kFirst, l - 1};
  }
  return MatrixProductOperator(dt.sites(), labels, std::move(out),
                               {OperatorKind::kDamping, omega_r, 0.0, tau}, dt.scale());
}

MatrixProductOperator build_qft_mpo(std::size_t n, double omega_i, double tau) {
  check_build_params(n, omega_i, tau);
  const std::vector<SiteLabel> labels = paired_labels(n);
  std::vector<MatrixProductOperator> layers;
  const DenseTensor h = fourier_hadamard(omega_i).tensor;
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<DiagonalTarget> targets;
    for (std::size_t m = l + 1; m <= n; ++m) {
      const double theta = controlled_phase_angle(l, m, omega_i);
      targets.push_back({second_register_site(m), {1.0, std::polar(1.0, -theta)}});
    }
    layers.push_back(controlled_fan_out(labels, second_register_site(l), h, targets));
  }
  MatrixProductOperator qft = fold(std::move(layers), tau);

  std::vector<SiteLabel> out = labels;
  for (std::size_t l = 1; l <= n; ++l) {
    out[second_register_site(l)] = {Register::kSecond, l - 1};
  }
  return MatrixProductOperator(qft.sites(), labels, std::move(out),
                               {OperatorKind::kFourier, 0.0, omega_i, tau}, qft.scale());
}

MatrixProductOperator paired_projector(std::size_t n) {
  if (n == 0) throw ParameterError("n must be at least 1");
  std::vector<DenseTensor> sites;
  for (std::size_t t = 0; t < n; ++t) {
    DenseTensor first({1, 2, 2, 2});
    DenseTensor second({2, 2, 2, 1});
    for (std::size_t i = 0; i < 2; ++i) {
      first.at({0, i, i, i}) = 1.0;
      second.at({i, i, i, 0}) = 1.0;
    }
    sites.push_back(std::move(first));
    sites.push_back(std::move(second));
  }
  std::vector<SiteLabel> labels = paired_labels(n);
  return MatrixProductOperator(std::move(sites), labels, labels);
}

MatrixProductOperator compose_zt(const MatrixProductOperator& dt,
                                 const MatrixProductOperator& qft, double tau) {
  if (dt.size() % 2 != 0 || dt.size() != qft.size()) {
    throw LayoutError("DT and QFT must act on the same paired layout");
  }
  if (dt.metadata().kind != OperatorKind::kDamping ||
      qft.metadata().kind != OperatorKind::kFourier) {
    throw LayoutError("compose_zt expects a damping stage followed by a Fourier stage");
  }
  MatrixProductOperator restricted = zip_merge(paired_projector(dt.size() / 2), dt, tau);
  MatrixProductOperator zt = zip_merge(restricted, qft, tau);
  zt.set_metadata({OperatorKind::kZTransform, dt.metadata().omega_r,
                   qft.metadata().omega_i, tau});
  return zt;
}

MatrixProductOperator build_zt_mpo(std::size_t n, double omega_r, double omega_i,
                                   double tau) {
  return compose_zt(build_dt_mpo(n, omega_r, tau), build_qft_mpo(n, omega_i, tau), tau);
}

bool fourier_scale_is_periodic(double omega_i) {
  const double turns = omega_i / (2.0 * std::numbers::pi);
  return std::abs(turns - std::round(turns)) <= 1e-12 * std::max(1.0, std::abs(turns));
}

}  // namespace zmpo
