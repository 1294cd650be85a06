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

// Dense complex tensors.
//
// Storage is row-major: the last axis is contiguous. A tensor of shape
// (d0, d1, ..., dk) stores element (i0, ..., ik) at offset
// ((i0 * d1 + i1) * d2 + i2) ... . Reshapes never move data; permutations
// always produce a new tensor.
//
// Every factorization in this library flattens a tensor into a matrix by a
// "split": the first `split` axes form the row index and the remaining axes
// form the column index, both in row-major order.

#ifndef ZMPO_TENSOR_HPP_
#define ZMPO_TENSOR_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace zmpo {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;

using Matrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

std::size_t shape_size(const Shape& shape);

class DenseTensor {
 public:
  DenseTensor() = default;
  // Zero-filled tensor.
  explicit DenseTensor(Shape shape);
  DenseTensor(Shape shape, std::vector<Complex> data);

  static DenseTensor from_matrix(const Matrix& m, Shape shape);
  // Scalar tensor of rank 0 is not supported; a "scalar" is shape {1}.
  static DenseTensor scalar(Complex value);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  Complex& operator[](std::size_t offset) { return data_[offset]; }
  const Complex& operator[](std::size_t offset) const { return data_[offset]; }

  Complex& at(std::initializer_list<std::size_t> index);
  const Complex& at(std::initializer_list<std::size_t> index) const;

  // Product of extents of axes [0, split) and [split, rank).
  std::size_t rows(std::size_t split) const;
  std::size_t cols(std::size_t split) const;

  // Matrix views over the same storage.
  MatrixMap as_matrix(std::size_t split);
  ConstMatrixMap as_matrix(std::size_t split) const;

  DenseTensor reshaped(Shape shape) const&;
  DenseTensor reshaped(Shape shape) &&;

  // Result axis i is input axis axes[i].
  DenseTensor permuted(std::span<const std::size_t> axes) const;
  DenseTensor permuted(std::initializer_list<std::size_t> axes) const {
    return permuted(std::span<const std::size_t>(axes.begin(), axes.size()));
  }

  double frobenius_norm() const;
  bool all_finite() const;

  DenseTensor& operator*=(Complex factor);

 private:
  std::size_t offset(std::initializer_list<std::size_t> index) const;

  Shape shape_;
  std::vector<Complex> data_;
};

// Sum over a[..., axes_a, ...] * b[..., axes_b, ...]. The result keeps the
// free axes of `a` in order followed by the free axes of `b`.
DenseTensor tensordot(const DenseTensor& a, std::span<const std::size_t> axes_a,
                      const DenseTensor& b, std::span<const std::size_t> axes_b);
DenseTensor tensordot(const DenseTensor& a,
                      std::initializer_list<std::size_t> axes_a,
                      const DenseTensor& b,
                      std::initializer_list<std::size_t> axes_b);

double max_abs_difference(const DenseTensor& a, const DenseTensor& b);

}  // namespace zmpo

#endif  // ZMPO_TENSOR_HPP_
