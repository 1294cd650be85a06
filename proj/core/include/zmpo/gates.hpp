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

// Local gates of the damping and Fourier stages.
//
// Two-index gates are stored as (out, in). Four-index blocks are stored in
// MPO order (left bond, out, in, right bond). Every exponent carries a minus
// sign: damping factors are e^{-theta}, phases are e^{-i theta}.

#ifndef ZMPO_GATES_HPP_
#define ZMPO_GATES_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "zmpo/tensor.hpp"

namespace zmpo {

enum class GateKind {
  kDampingHadamard,
  kDampingDiag,
  kCopy,
  kFusedDampingBlock,
  kHadamard,
  kPhaseDiag,
  kFusedPhaseBlock,
};

struct GateTensor {
  GateKind kind;
  std::vector<double> params;
  DenseTensor tensor;
};

// (1/sqrt 2) [[1, 1], [1, e^{-omega_r / 2}]].
GateTensor damping_hadamard(double omega_r);

// omega_r / 2^{m - l + 1} for target qubit l and control qubit m (1-based).
// m < l is allowed and gives angles >= omega_r. Throws ParameterError when
// l == m or either index is 0.
double controlled_damping_angle(std::size_t l, std::size_t m, double omega_r);

// diag(1, e^{-theta}).
GateTensor damping_diag(double theta);

// delta_{a b c} on three binary legs, shape (2, 2, 2).
GateTensor copy_tensor();

// Block diag(I, R(theta)) with R = diag(1, e^{-theta}): the left bond value
// selects the block and is passed through unchanged. Shape (2, 2, 2, 2).
GateTensor fused_damping_block(double theta);

// (1/sqrt 2) [[1, 1], [1, e^{-i omega_i / 2}]]; the usual Hadamard at
// omega_i = 2 pi.
GateTensor fourier_hadamard(double omega_i);

// omega_i / 2^{m - l + 1}; only m > l occurs in the Fourier stage. Throws
// ParameterError otherwise.
double controlled_phase_angle(std::size_t l, std::size_t m, double omega_i);

// diag(1, e^{-i theta}).
GateTensor phase_diag(double theta);

// Block diag(I, diag(1, e^{-i theta})), shape (2, 2, 2, 2).
GateTensor fused_phase_block(double theta);

// Fourier-stage gate on target l with control m: the Hadamard when l == m,
// otherwise the controlled phase diagonal.
GateTensor qft_gate(std::size_t l, std::size_t m, double omega_i);

// Block diag(I, diag(d)) for an arbitrary diagonal d, shape (2, 2, 2, 2).
DenseTensor fused_diagonal_block(const std::array<Complex, 2>& d);

// Dense |0><0| (x) I + |1><1| (x) diag(d), control first. 4 x 4.
Matrix controlled_diagonal(const std::array<Complex, 2>& d);

}  // namespace zmpo

#endif  // ZMPO_GATES_HPP_
