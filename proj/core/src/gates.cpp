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


#include "zmpo/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

DenseTensor two_by_two(Complex a, Complex b, Complex c, Complex d) {
  return DenseTensor({2, 2}, {a, b, c, d});
}

void check_indices(std::size_t l, std::size_t m) {
  if (l == 0 || m == 0) throw ParameterError("qubit indices are 1-based");
  if (l == m) {
    throw ParameterError("control and target coincide (l = m = " +
                         std::to_string(l) + ")");
  }
}

}  // namespace

GateTensor damping_hadamard(double omega_r) {
  return {GateKind::kDampingHadamard,
          {omega_r},
          two_by_two(kInvSqrt2, kInvSqrt2, kInvSqrt2,
                     kInvSqrt2 * std::exp(-omega_r / 2.0))};
}

double controlled_damping_angle(std::size_t l, std::size_t m, double omega_r) {
  check_indices(l, m);
  // 2^{l - m - 1}; exact for any integer exponent in range.
  return std::ldexp(omega_r, static_cast<int>(l) - static_cast<int>(m) - 1);
}

GateTensor damping_diag(double theta) {
  return {GateKind::kDampingDiag, {theta},
          two_by_two(1.0, 0.0, 0.0, std::exp(-theta))};
}

GateTensor copy_tensor() {
  DenseTensor t({2, 2, 2});
  t.at({0, 0, 0}) = 1.0;
  t.at({1, 1, 1}) = 1.0;
  return {GateKind::kCopy, {}, std::move(t)};
}

DenseTensor fused_diagonal_block(const std::array<Complex, 2>& d) {
  DenseTensor t({2, 2, 2, 2});
  for (std::size_t i = 0; i < 2; ++i) {
    t.at({0, i, i, 0}) = 1.0;
    t.at({1, i, i, 1}) = d[i];
  }
  return t;
}

Matrix controlled_diagonal(const std::array<Complex, 2>& d) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = d[0];
  m(3, 3) = d[1];
  return m;
}

GateTensor fused_damping_block(double theta) {
  return {GateKind::kFusedDampingBlock, {theta},
          fused_diagonal_block({1.0, std::exp(-theta)})};
}

GateTensor fourier_hadamard(double omega_i) {
  return {GateKind::kHadamard,
          {omega_i},
          two_by_two(kInvSqrt2, kInvSqrt2, kInvSqrt2,
                     kInvSqrt2 * std::polar(1.0, -omega_i / 2.0))};
}

double controlled_phase_angle(std::size_t l, std::size_t m, double omega_i) {
  check_indices(l, m);
  if (m < l) {
    throw ParameterError("Fourier-stage controls must lie after the target");
  }
  return std::ldexp(omega_i, static_cast<int>(l) - static_cast<int>(m) - 1);
}

GateTensor phase_diag(double theta) {
  return {GateKind::kPhaseDiag, {theta},
          two_by_two(1.0, 0.0, 0.0, std::polar(1.0, -theta))};
}

GateTensor fused_phase_block(double theta) {
  return {GateKind::kFusedPhaseBlock, {theta},
          fused_diagonal_block({1.0, std::polar(1.0, -theta)})};
}

GateTensor qft_gate(std::size_t l, std::size_t m, double omega_i) {
  if (l == m) {
    if (l == 0) throw ParameterError("qubit indices are 1-based");
    return fourier_hadamard(omega_i);
  }
  return phase_diag(controlled_phase_angle(l, m, omega_i));
}

}  // namespace zmpo
