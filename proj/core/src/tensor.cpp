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

#include "zmpo/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

std::string shape_string(const Shape& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    os << (i ? "," : "") << shape[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::size_t shape_size(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         std::multiplies<>());
}

DenseTensor::DenseTensor(Shape shape)
    : shape_(std::move(shape)), data_(shape_size(shape_)) {
  if (shape_.empty()) throw ShapeError("tensor needs at least one axis");
  for (std::size_t e : shape_) {
    if (e == 0) throw ShapeError("zero extent in shape " + shape_string(shape_));
  }
}

DenseTensor::DenseTensor(Shape shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_.empty()) throw ShapeError("tensor needs at least one axis");
  for (std::size_t e : shape_) {
    if (e == 0) throw ShapeError("zero extent in shape " + shape_string(shape_));
  }
  if (shape_size(shape_) != data_.size()) {
    throw ShapeError("shape " + shape_string(shape_) + " does not match " +
                     std::to_string(data_.size()) + " elements");
  }
}

DenseTensor DenseTensor::from_matrix(const Matrix& m, Shape shape) {
  std::vector<Complex> data(m.data(), m.data() + m.size());
  return DenseTensor(std::move(shape), std::move(data));
}

DenseTensor DenseTensor::scalar(Complex value) {
  return DenseTensor({1}, {value});
}

std::size_t DenseTensor::offset(std::initializer_list<std::size_t> index) const {
  if (index.size() != shape_.size()) {
    throw ShapeError("index rank " + std::to_string(index.size()) +
                     " does not match tensor rank " +
                     std::to_string(shape_.size()));
  }
  std::size_t off = 0;
  std::size_t axis = 0;
  for (std::size_t i : index) {
    if (i >= shape_[axis]) throw ShapeError("index out of range");
    off = off * shape_[axis] + i;
    ++axis;
  }
  return off;
}

Complex& DenseTensor::at(std::initializer_list<std::size_t> index) {
  return data_[offset(index)];
}

const Complex& DenseTensor::at(std::initializer_list<std::size_t> index) const {
  return data_[offset(index)];
}

std::size_t DenseTensor::rows(std::size_t split) const {
  if (split > shape_.size()) throw ShapeError("split beyond tensor rank");
  return std::accumulate(shape_.begin(), shape_.begin() + split, std::size_t{1},
                         std::multiplies<>());
}

std::size_t DenseTensor::cols(std::size_t split) const {
  if (split > shape_.size()) throw ShapeError("split beyond tensor rank");
  return std::accumulate(shape_.begin() + split, shape_.end(), std::size_t{1},
                         std::multiplies<>());
}

MatrixMap DenseTensor::as_matrix(std::size_t split) {
  return MatrixMap(data_.data(), static_cast<Eigen::Index>(rows(split)),
                   static_cast<Eigen::Index>(cols(split)));
}

ConstMatrixMap DenseTensor::as_matrix(std::size_t split) const {
  return ConstMatrixMap(data_.data(), static_cast<Eigen::Index>(rows(split)),
                        static_cast<Eigen::Index>(cols(split)));
}

DenseTensor DenseTensor::reshaped(Shape shape) const& {
  return DenseTensor(std::move(shape), data_);
}

DenseTensor DenseTensor::reshaped(Shape shape) && {
  return DenseTensor(std::move(shape), std::move(data_));
}

DenseTensor DenseTensor::permuted(std::span<const std::size_t> axes) const {
  const std::size_t r = rank();
  if (axes.size() != r) throw ShapeError("permutation rank mismatch");
  std::vector<bool> seen(r, false);
  for (std::size_t a : axes) {
    if (a >= r || seen[a]) throw ShapeError("invalid permutation");
    seen[a] = true;
  }
  Shape out_shape(r);
  for (std::size_t i = 0; i < r; ++i) out_shape[i] = shape_[axes[i]];
  if (std::is_sorted(axes.begin(), axes.end())) return *this;

  // Input strides, re-ordered to output axis order.
  std::vector<std::size_t> in_stride(r);
  std::size_t s = 1;
  for (std::size_t i = r; i-- > 0;) {
    in_stride[i] = s;
    s *= shape_[i];
  }
  std::vector<std::size_t> stride(r);
  for (std::size_t i = 0; i < r; ++i) stride[i] = in_stride[axes[i]];

  DenseTensor out(out_shape);
  std::vector<std::size_t> idx(r, 0);
  const std::size_t inner = out_shape[r - 1];
  const std::size_t inner_stride = stride[r - 1];
  std::size_t src = 0;
  Complex* dst = out.data_.data();
  const std::size_t total = data_.size();
  for (std::size_t done = 0; done < total; done += inner) {
    const Complex* p = data_.data() + src;
    for (std::size_t i = 0; i < inner; ++i) dst[i] = p[i * inner_stride];
    dst += inner;
    // Advance the multi-index over the outer axes.
    for (std::size_t ax = r - 1; ax-- > 0;) {
      ++idx[ax];
      src += stride[ax];
      if (idx[ax] < out_shape[ax]) break;
      src -= stride[ax] * out_shape[ax];
      idx[ax] = 0;
    }
  }
  return out;
}

double DenseTensor::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& c : data_) sum += std::norm(c);
  return std::sqrt(sum);
}

bool DenseTensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

DenseTensor& DenseTensor::operator*=(Complex factor) {
  for (Complex& c : data_) c *= factor;
  return *this;
}

DenseTensor tensordot(const DenseTensor& a, std::span<const std::size_t> axes_a,
                      const DenseTensor& b, std::span<const std::size_t> axes_b) {
  if (axes_a.size() != axes_b.size()) {
    throw ShapeError("tensordot: axis lists differ in length");
  }
  for (std::size_t i = 0; i < axes_a.size(); ++i) {
    if (axes_a[i] >= a.rank() || axes_b[i] >= b.rank() ||
        a.extent(axes_a[i]) != b.extent(axes_b[i])) {
      throw ShapeError("tensordot: contracted extents do not match");
    }
  }
  std::vector<std::size_t> perm_a;
  Shape free_shape;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (std::find(axes_a.begin(), axes_a.end(), i) == axes_a.end()) {
      perm_a.push_back(i);
      free_shape.push_back(a.extent(i));
    }
  }
  const std::size_t free_a = perm_a.size();
  perm_a.insert(perm_a.end(), axes_a.begin(), axes_a.end());

  std::vector<std::size_t> perm_b(axes_b.begin(), axes_b.end());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (std::find(axes_b.begin(), axes_b.end(), i) == axes_b.end()) {
      perm_b.push_back(i);
      free_shape.push_back(b.extent(i));
    }
  }
  const DenseTensor ap = a.permuted(perm_a);
  const DenseTensor bp = b.permuted(perm_b);
  Matrix prod = ap.as_matrix(free_a) * bp.as_matrix(axes_b.size());
  if (free_shape.empty()) free_shape.push_back(1);
  return DenseTensor::from_matrix(prod, std::move(free_shape));
}

DenseTensor tensordot(const DenseTensor& a,
                      std::initializer_list<std::size_t> axes_a,
                      const DenseTensor& b,
                      std::initializer_list<std::size_t> axes_b) {
  return tensordot(a, std::span<const std::size_t>(axes_a.begin(), axes_a.size()),
                   b, std::span<const std::size_t>(axes_b.begin(), axes_b.size()));
}

double max_abs_difference(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) throw ShapeError("max_abs_difference: shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace zmpo
