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

// QR / LQ and truncated SVD of tensors flattened by a row/column split.
//
// Truncation rule (used everywhere in the library): given singular values
// s_1 >= s_2 >= ... >= s_m, keep the smallest r >= 1 such that
//
//     sum_{i > r} s_i^2  <=  tau * sum_i s_i^2 .
//
// The Frobenius reconstruction error of the truncated factorization is then
// sqrt(sum_{i > r} s_i^2) <= sqrt(tau) * ||A||_F.

#ifndef ZMPO_LINALG_HPP_
#define ZMPO_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "zmpo/tensor.hpp"

namespace zmpo {

struct QrFactorization {
  // Shape (row extents..., r), orthonormal columns.
  DenseTensor orthonormal_factor;
  // Shape (r, column extents...), upper trapezoidal.
  DenseTensor triangular_factor;
};

struct LqFactorization {
  // Shape (row extents..., r), lower trapezoidal.
  DenseTensor triangular_factor;
  // Shape (r, column extents...), orthonormal rows.
  DenseTensor orthonormal_factor;
};

struct TruncatedFactorization {
  // Shape (row extents..., r); orthonormal columns.
  DenseTensor left_factor;
  // Descending, length r.
  std::vector<double> singular_values;
  // Shape (r, column extents...); orthonormal rows.
  DenseTensor right_factor;
  // (sum of squared discarded values) / (sum of all squared values).
  double discarded_weight = 0.0;
  // Full spectrum before truncation, descending.
  std::vector<double> full_spectrum;

  std::size_t rank() const { return singular_values.size(); }
};

// Thin QR with r = min(rows, cols).
QrFactorization qr_factor(const DenseTensor& t, std::size_t split);

// Thin LQ with r = min(rows, cols).
LqFactorization lq_factor(const DenseTensor& t, std::size_t split);

// Throws ParameterError unless tau is in [0, 1).
TruncatedFactorization truncated_svd(const DenseTensor& t, std::size_t split,
                                     double tau);

// Number of leading values the truncation rule keeps for this spectrum.
std::size_t truncation_rank(const std::vector<double>& descending_values,
                            double tau, double* discarded_weight = nullptr);

// Matrix-level routines used by the tensor-network sweeps.
struct MatrixSvd {
  Matrix u;
  std::vector<double> s;
  Matrix vh;
};
MatrixSvd svd(const Matrix& a);
void qr(const Matrix& a, Matrix& q, Matrix& r);

}  // namespace zmpo

#endif  // ZMPO_LINALG_HPP_
