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


#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zmpo/error.hpp"
#include "zmpo/linalg.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {
namespace {

using testing::random_matrix;

double orthonormality_error(const Matrix& q) {
  return (q.adjoint() * q - Matrix::Identity(q.cols(), q.cols())).norm();
}

TEST(DenseTensorTest, RowMajorLayout) {
  DenseTensor t({2, 3, 4});
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
  EXPECT_EQ(t.at({1, 2, 3}), Complex(23.0));
  EXPECT_EQ(t.at({0, 1, 0}), Complex(4.0));
  EXPECT_EQ(t.as_matrix(1).rows(), 2);
  EXPECT_EQ(t.as_matrix(1).cols(), 12);
  EXPECT_EQ(t.as_matrix(2)(1, 3), Complex(1 * 4 + 3.0));
}

TEST(DenseTensorTest, RejectsMismatchedData) {
  EXPECT_THROW(DenseTensor({2, 2}, std::vector<Complex>(3)), ShapeError);
  EXPECT_THROW(DenseTensor({2, 0}), ShapeError);
}

TEST(DenseTensorTest, PermuteMatchesIndexMap) {
  Rng rng(3);
  DenseTensor t = testing::random_tensor({2, 3, 4}, rng);
  DenseTensor p = t.permuted({2, 0, 1});
  ASSERT_EQ(p.shape(), (Shape{4, 2, 3}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(p.at({k, i, j}), t.at({i, j, k}));
}

TEST(DenseTensorTest, TensordotMatchesLoops) {
  Rng rng(5);
  DenseTensor a = testing::random_tensor({3, 2, 4}, rng);
  DenseTensor b = testing::random_tensor({4, 2, 5}, rng);
  DenseTensor c = tensordot(a, {1, 2}, b, {1, 0});
  ASSERT_EQ(c.shape(), (Shape{3, 5}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t m = 0; m < 5; ++m) {
      Complex ref = 0.0;
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t r = 0; r < 4; ++r) ref += a.at({i, s, r}) * b.at({r, s, m});
      EXPECT_NEAR(std::abs(c.at({i, m}) - ref), 0.0, 1e-12);
    }
  }
}

TEST(QrFactorTest, IdentityIsItsOwnFactorization) {
  DenseTensor t = DenseTensor::from_matrix(Matrix::Identity(2, 2), {2, 2});
  QrFactorization f = qr_factor(t, 1);
  Matrix q = f.orthonormal_factor.as_matrix(1);
  Matrix r = f.triangular_factor.as_matrix(1);
  // Up to a diagonal sign/phase per column.
  EXPECT_NEAR(std::abs(q(0, 1)) + std::abs(q(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR((q * r - Matrix::Identity(2, 2)).norm(), 0.0, 1e-15);
}

TEST(QrFactorTest, PermutationReconstructs) {
  Matrix a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  QrFactorization f = qr_factor(DenseTensor::from_matrix(a, {2, 2}), 1);
  Matrix qr = f.orthonormal_factor.as_matrix(1) * f.triangular_factor.as_matrix(1);
  EXPECT_LE((qr - a).norm(), 1e-14);
}

TEST(QrFactorTest, RandomTallMatrix) {
  Rng rng(11);
  Matrix a = random_matrix(8, 5, rng);
  QrFactorization f = qr_factor(DenseTensor::from_matrix(a, {8, 5}), 1);
  Matrix q = f.orthonormal_factor.as_matrix(1);
  Matrix r = f.triangular_factor.as_matrix(1);
  EXPECT_LE(orthonormality_error(q), 1e-12);
  EXPECT_LE((q * r - a).norm(), 1e-12 * a.norm());
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j) EXPECT_EQ(r(i, j), Complex(0.0));
}

TEST(QrFactorTest, SplitMustMatchRank) {
  DenseTensor t({2, 2, 2});
  EXPECT_THROW(qr_factor(t, 3), ShapeError);
  EXPECT_THROW(qr_factor(t, 0), ShapeError);
}

TEST(QrFactorTest, ReconstructsRandomInputsUpTo256) {
  Rng rng(12);
  for (Eigen::Index rows : {1, 7, 64, 256}) {
    for (Eigen::Index cols : {1, 13, 256}) {
      Matrix a = random_matrix(rows, cols, rng);
      QrFactorization f = qr_factor(DenseTensor::from_matrix(a, {static_cast<std::size_t>(rows),
                                                                 static_cast<std::size_t>(cols)}),
                                    1);
      Matrix back = f.orthonormal_factor.as_matrix(1) * f.triangular_factor.as_matrix(1);
      EXPECT_LE((back - a).norm(), 1e-12 * a.norm()) << rows << "x" << cols;
    }
  }
}

TEST(LqFactorTest, RandomWideMatrix) {
  Rng rng(13);
  Matrix a = random_matrix(4, 9, rng);
  LqFactorization f = lq_factor(DenseTensor::from_matrix(a, {4, 9}), 1);
  Matrix l = f.triangular_factor.as_matrix(1);
  Matrix q = f.orthonormal_factor.as_matrix(1);
  EXPECT_LE((q * q.adjoint() - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_LE((l * q - a).norm(), 1e-12 * a.norm());
}

TEST(TruncatedSvdTest, IdentityKeepsBothValues) {
  DenseTensor t = DenseTensor::from_matrix(Matrix::Identity(2, 2), {2, 2});
  TruncatedFactorization f = truncated_svd(t, 1, 1e-15);
  ASSERT_EQ(f.rank(), 2u);
  EXPECT_NEAR(f.singular_values[0], 1.0, 1e-15);
  EXPECT_NEAR(f.singular_values[1], 1.0, 1e-15);
  EXPECT_EQ(f.discarded_weight, 0.0);
}

TEST(TruncatedSvdTest, DropsNegligibleValue) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-9;
  TruncatedFactorization f = truncated_svd(DenseTensor::from_matrix(a, {2, 2}), 1, 1e-15);
  EXPECT_EQ(f.rank(), 1u);
  EXPECT_NEAR(f.discarded_weight, 1e-18, 1e-30);
}

TEST(TruncatedSvdTest, RandomMatrixAgainstFullDecomposition) {
  Rng rng(17);
  Matrix a = random_matrix(16, 16, rng);
  const double tau = 1e-6;
  TruncatedFactorization f = truncated_svd(DenseTensor::from_matrix(a, {16, 16}), 1, tau);

  Eigen::JacobiSVD<Eigen::MatrixXcd> ref(Eigen::MatrixXcd(a),
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd s = ref.singularValues();
  for (std::size_t i = 0; i < f.rank(); ++i) {
    EXPECT_NEAR(f.singular_values[i], s(static_cast<Eigen::Index>(i)), 1e-12 * s(0));
  }
  double tail = 0.0;
  for (Eigen::Index i = static_cast<Eigen::Index>(f.rank()); i < s.size(); ++i) {
    tail += s(i) * s(i);
  }

  Matrix us = f.left_factor.as_matrix(1);
  for (std::size_t i = 0; i < f.rank(); ++i) {
    us.col(static_cast<Eigen::Index>(i)) *= f.singular_values[i];
  }
  const double err = (us * f.right_factor.as_matrix(1) - a).norm();
  EXPECT_LE(err, std::sqrt(tau) * a.norm());
  EXPECT_NEAR(err, std::sqrt(tail), 1e-10 * a.norm());
  EXPECT_LE(orthonormality_error(f.left_factor.as_matrix(1)), 1e-12);
}

TEST(TruncatedSvdTest, RejectsCutoffOutsideUnitInterval) {
  DenseTensor t = DenseTensor::from_matrix(Matrix::Identity(2, 2), {2, 2});
  EXPECT_THROW(truncated_svd(t, 1, -1e-3), ParameterError);
  EXPECT_THROW(truncated_svd(t, 1, 1.0), ParameterError);
}

TEST(TruncatedSvdTest, ZeroMatrixKeepsOneValue) {
  DenseTensor t({3, 3});
  TruncatedFactorization f = truncated_svd(t, 1, 0.5);
  EXPECT_EQ(f.rank(), 1u);
}

TEST(TruncatedSvdTest, DiscardedWeightNeverExceedsCutoff) {
  Rng rng(19);
  for (double tau : {0.0, 1e-12, 1e-6, 1e-2, 0.3}) {
    for (int trial = 0; trial < 5; ++trial) {
      // Graded spectrum so the cutoff actually bites.
      Matrix a = random_matrix(12, 10, rng);
      for (Eigen::Index j = 0; j < a.cols(); ++j) a.col(j) *= std::pow(0.1, j);
      TruncatedFactorization f = truncated_svd(DenseTensor::from_matrix(a, {12, 10}), 1, tau);
      double total = 0.0, kept = 0.0;
      for (double s : f.full_spectrum) total += s * s;
      for (double s : f.singular_values) kept += s * s;
      EXPECT_LE((total - kept) / total, tau + 1e-15);
      EXPECT_NEAR(f.discarded_weight, (total - kept) / total, 1e-12);
      // Minimality: dropping one more value would violate the cutoff.
      if (f.rank() > 1) {
        const double next = f.singular_values.back();
        EXPECT_GT((total - kept + next * next) / total, tau);
      }
    }
  }
}

TEST(TruncatedSvdTest, ZeroCutoffReconstructsExactly) {
  Rng rng(23);
  Matrix a = random_matrix(9, 14, rng);
  TruncatedFactorization f = truncated_svd(DenseTensor::from_matrix(a, {9, 14}), 1, 0.0);
  Matrix us = f.left_factor.as_matrix(1);
  for (std::size_t i = 0; i < f.rank(); ++i) {
    us.col(static_cast<Eigen::Index>(i)) *= f.singular_values[i];
  }
  EXPECT_LE((us * f.right_factor.as_matrix(1) - a).norm(), 1e-13 * a.norm());
}

TEST(TruncatedSvdTest, HigherRankTensorSplit) {
  Rng rng(29);
  DenseTensor t = testing::random_tensor({3, 2, 2, 5}, rng);
  TruncatedFactorization f = truncated_svd(t, 2, 0.0);
  EXPECT_EQ(f.left_factor.shape(), (Shape{3, 2, f.rank()}));
  EXPECT_EQ(f.right_factor.shape(), (Shape{f.rank(), 2, 5}));
}

}  // namespace
}  // namespace zmpo
