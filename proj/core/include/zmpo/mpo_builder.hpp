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

// Construction of the damping (DT), Fourier (QFT) and composed z-transform
// (ZT) operators on the interleaved 2n-site layout.
//
// Qubit l (1-based) of register 1 sits at site 2(l - 1) and qubit l of
// register 2 at site 2(l - 1) + 1. Each stage is a sequence of exact
// bond-2 "fan-out" layers (a local gate on one qubit whose output bit then
// controls diagonal factors on later qubits); layers are folded together
// with zip_merge. Both stages leave their output register bit-reversed:
// qubit l ends up holding the bit of weight 2^{l-1}. This is recorded in the
// output labels.

#ifndef ZMPO_MPO_BUILDER_HPP_
#define ZMPO_MPO_BUILDER_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "zmpo/mpo.hpp"
#include "zmpo/mps.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

struct DiagonalTarget {
  std::size_t site = 0;
  // Factor applied to the target's bit value when the control bit is 1.
  std::array<Complex, 2> factors = {1.0, 1.0};
};

// Applies the 2 x 2 `gate` (out, in) at `source`, then multiplies by
// target.factors[bit] at every target whenever the source's output bit is 1.
// Targets must lie strictly right of the source, in ascending order. The
// result is exact with bond dimension at most 2. Labels are left unchanged.
MatrixProductOperator controlled_fan_out(const std::vector<SiteLabel>& labels,
                                         std::size_t source, const DenseTensor& gate,
                                         const std::vector<DiagonalTarget>& targets);

// Sites of qubit l (1-based) of each register in the paired layout.
inline std::size_t first_register_site(std::size_t l) { return 2 * (l - 1); }
inline std::size_t second_register_site(std::size_t l) { return 2 * (l - 1) + 1; }

// Throws ParameterError for n == 0, non-finite rates or tau outside [0, 1).
MatrixProductOperator build_dt_mpo(std::size_t n, double omega_r, double tau);
MatrixProductOperator build_qft_mpo(std::size_t n, double omega_i, double tau);

// Projector onto the paired support sum_j |j>|j><j|<j|, exact with bond 2
// inside each pair and bond 1 between pairs.
MatrixProductOperator paired_projector(std::size_t n);

// QFT after DT restricted to the paired support: the projector is merged in
// first, so columns the transform never sees carry no weight in the
// compression. Throws LayoutError unless both act on the same paired layout.
MatrixProductOperator compose_zt(const MatrixProductOperator& dt,
                                 const MatrixProductOperator& qft, double tau);

MatrixProductOperator build_zt_mpo(std::size_t n, double omega_r, double omega_i,
                                   double tau);

// True when omega_i is (numerically) an integer multiple of 2 pi, the case in
// which the Fourier stage is exact.
bool fourier_scale_is_periodic(double omega_i);

}  // namespace zmpo

#endif  // ZMPO_MPO_BUILDER_HPP_
