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

#include "zmpo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

Shape concat(Shape head, std::size_t middle, const Shape& tail_source,
             std::size_t tail_begin) {
  head.push_back(middle);
  head.insert(head.end(), tail_source.begin() + tail_begin, tail_source.end());
  return head;
}

Shape leading(const Shape& s, std::size_t split) {
  return Shape(s.begin(), s.begin() + split);
}

void check_split(const DenseTensor& t, std::size_t split) {
  if (t.empty()) throw ShapeError("factorization of an empty tensor");
  if (split == 0 || split >= t.rank()) {
    throw ShapeError("split " + std::to_string(split) +
                     " must leave at least one axis on each side of a rank-" +
                     std::to_string(t.rank()) + " tensor");
  }
}

void check_finite(const Matrix& a) {
  if (!a.allFinite()) throw NumericError("matrix contains NaN or Inf");
}

}  // namespace

MatrixSvd svd(const Matrix& a) {
  check_finite(a);
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  MatrixSvd out;
  out.u.resize(m, k);
  out.vh.resize(k, n);
  out.s.assign(static_cast<std::size_t>(k), 0.0);

  // QR iteration (zgesvd) rather than divide and conquer: the zgesdd shipped
  // with the reference OpenBLAS build returned factors with O(1e-2) errors on
  // some of the ill-conditioned site matrices that appear in the operator
  // merges, without reporting failure.
  Matrix work = a;
  std::vector<double> superb(static_cast<std::size_t>(std::max(1, k - 1)));
  const lapack_int info =
      LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'S', 'S', m, n, work.data(), n,
                     out.s.data(), out.u.data(), k, out.vh.data(), n,
                     superb.data());
  if (info != 0) {
    throw NumericError("SVD failed (LAPACK info " + std::to_string(info) + ")");
  }
  return out;
}

void qr(const Matrix& a, Matrix& q, Matrix& r) {
  check_finite(a);
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Matrix work = a;
  std::vector<Complex> tau(static_cast<std::size_t>(k));
  lapack_int info =
      LAPACKE_zgeqrf(LAPACK_ROW_MAJOR, m, n, work.data(), n, tau.data());
  if (info != 0) {
    throw NumericError("QR failed (LAPACK info " + std::to_string(info) + ")");
  }
  r = Matrix::Zero(k, n);
  for (lapack_int i = 0; i < k; ++i) {
    for (lapack_int j = i; j < n; ++j) r(i, j) = work(i, j);
  }
  info = LAPACKE_zungqr(LAPACK_ROW_MAJOR, m, k, k, work.data(), n, tau.data());
  if (info != 0) {
    throw NumericError("Q formation failed (LAPACK info " +
                       std::to_string(info) + ")");
  }
  q = work.leftCols(k);
}

QrFactorization qr_factor(const DenseTensor& t, std::size_t split) {
  check_split(t, split);
  Matrix q, r;
  qr(Matrix(t.as_matrix(split)), q, r);
  const std::size_t k = static_cast<std::size_t>(q.cols());
  return {DenseTensor::from_matrix(q, concat(leading(t.shape(), split), k, {}, 0)),
          DenseTensor::from_matrix(r, concat({}, k, t.shape(), split))};
}

LqFactorization lq_factor(const DenseTensor& t, std::size_t split) {
  check_split(t, split);
  // A^H = Q R  =>  A = R^H Q^H.
  Matrix q, r;
  qr(Matrix(t.as_matrix(split).adjoint()), q, r);
  const std::size_t k = static_cast<std::size_t>(q.cols());
  Matrix l = r.adjoint();
  Matrix qh = q.adjoint();
  return {DenseTensor::from_matrix(l, concat(leading(t.shape(), split), k, {}, 0)),
          DenseTensor::from_matrix(qh, concat({}, k, t.shape(), split))};
}

std::size_t truncation_rank(const std::vector<double>& values, double tau,
                            double* discarded_weight) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw ParameterError("cutoff tau must lie in [0, 1), got " +
                         std::to_string(tau));
  }
  double total = 0.0;
  for (double v : values) total += v * v;
  std::size_t keep = values.size();
  double tail = 0.0;
  if (total > 0.0) {
    const double budget = tau * total;
    while (keep > 1) {
      const double v = values[keep - 1];
      if (tail + v * v > budget) break;
      tail += v * v;
      --keep;
    }
  } else {
    keep = std::min<std::size_t>(1, values.size());
  }
  if (discarded_weight) *discarded_weight = total > 0.0 ? tail / total : 0.0;
  return keep;
}

TruncatedFactorization truncated_svd(const DenseTensor& t, std::size_t split,
                                     double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw ParameterError("cutoff tau must lie in [0, 1), got " +
                         std::to_string(tau));
  }
  check_split(t, split);
  MatrixSvd f = svd(Matrix(t.as_matrix(split)));
  TruncatedFactorization out;
  const std::size_t keep = truncation_rank(f.s, tau, &out.discarded_weight);
  out.full_spectrum = f.s;
  out.singular_values.assign(f.s.begin(), f.s.begin() + keep);
  const auto r = static_cast<Eigen::Index>(keep);
  out.left_factor = DenseTensor::from_matrix(
      f.u.leftCols(r), concat(leading(t.shape(), split), keep, {}, 0));
  out.right_factor = DenseTensor::from_matrix(f.vh.topRows(r),
                                              concat({}, keep, t.shape(), split));
  return out;
}

}  // namespace zmpo
