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
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zmpo/error.hpp"
#include "zmpo/mpo_builder.hpp"
#include "zmpo/oracle.hpp"
#include "zmpo/signals.hpp"
#include "zmpo/transform.hpp"

namespace zmpo {
namespace {

using std::numbers::pi;

std::vector<GridPoint> full_grid(std::size_t n) {
  std::vector<GridPoint> pts;
  const std::uint64_t big_n = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < big_n; ++k)
    for (std::uint64_t l = 0; l < big_n; ++l) pts.push_back({k, l});
  return pts;
}

std::vector<Complex> chi_grid(const TransformResult& r) {
  std::vector<Complex> v;
  for (const GridPoint& p : full_grid(r.params.n)) {
    v.push_back(evaluate_chi(r.output, p.k, p.l));
  }
  return v;
}

// Plain textbook evaluation with complex exponentials, no phase reduction.
Complex naive_chi(const SignalVector& x, const TransformParams& p, std::uint64_t k,
                  std::uint64_t l) {
  const double big_n = static_cast<double>(p.grid_size());
  const Complex s = Complex(p.omega_r * static_cast<double>(k),
                            p.omega_i * static_cast<double>(l)) / big_n;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sum += x[j] * std::exp(-s * static_cast<double>(j));
  }
  return sum;
}

TEST(TransformParamsTest, Validation) {
  TransformParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_TRUE(p.validated_domain());
  p.tau = 1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.n = 0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.omega_r = -1.0;
  EXPECT_FALSE(p.validated_domain());
  p = {};
  p.omega_i = 3.0;
  EXPECT_FALSE(p.validated_domain());
  p.omega_i = 4.0 * pi;
  EXPECT_TRUE(p.validated_domain());
}

TEST(GridTest, PointInvariants) {
  TransformParams p;
  p.n = 5;
  p.omega_r = 1.7;
  for (std::uint64_t k : {0u, 3u, 31u}) {
    for (std::uint64_t l : {0u, 7u, 30u}) {
      const Complex z = grid_z(p, k, l);
      EXPECT_NEAR(std::abs(z), std::exp(-1.7 * k / 32.0), 1e-15);
      const double expected_arg = std::remainder(-2.0 * pi * l / 32.0, 2.0 * pi);
      EXPECT_NEAR(std::remainder(std::arg(z) - expected_arg, 2.0 * pi), 0.0, 1e-14);
      const auto [kk, ll] = grid_coordinates(p, z);
      EXPECT_NEAR(kk, static_cast<double>(k), 1e-12);
      EXPECT_NEAR(ll, static_cast<double>(l), 1e-12);
    }
  }
}

TEST(DirectOracleTest, DeltaAtZeroIsOne) {
  std::vector<Complex> x(16);
  x[0] = 1.0;
  TransformParams p;
  p.n = 4;
  for (const Complex& c : direct_oracle(SignalVector(x), p, full_grid(4))) {
    EXPECT_EQ(c, Complex(1.0));
  }
}

TEST(DirectOracleTest, ShiftedDeltaGivesGridPoint) {
  std::vector<Complex> x(16);
  x[1] = 1.0;
  TransformParams p;
  p.n = 4;
  p.omega_r = 0.9;
  const auto pts = full_grid(4);
  const auto chi = direct_oracle(SignalVector(x), p, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex expected = std::exp(-0.9 * pts[i].k / 16.0) *
                             std::polar(1.0, -2.0 * pi * pts[i].l / 16.0);
    EXPECT_LE(std::abs(chi[i] - expected), 1e-15);
  }
}

TEST(DirectOracleTest, RootsOfUnityCancel) {
  TransformParams p;
  p.n = 6;
  p.omega_r = 0.0;
  const SignalVector x(std::vector<Complex>(64, 1.0));
  std::vector<GridPoint> pts;
  for (std::uint64_t l = 1; l < 64; ++l) pts.push_back({5, l});
  for (const Complex& c : direct_oracle(x, p, pts)) EXPECT_LE(std::abs(c), 1e-13);
}

TEST(DirectOracleTest, AgreesWithNaiveSumAndDenseGrid) {
  const SignalVector x = testing::random_signal(6, 31);
  TransformParams p;
  p.n = 6;
  const auto pts = full_grid(6);
  const auto direct = direct_oracle(x, p, pts);
  const auto dense = dense_grid_oracle(x, p);
  const double l1 = x.l1_norm();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_LE(std::abs(direct[i] - naive_chi(x, p, pts[i].k, pts[i].l)), 1e-12 * l1);
    EXPECT_LE(std::abs(direct[i] - dense[i]), 1e-12 * l1);
  }
}

TEST(DirectOracleTest, RejectsOutOfRangePoints) {
  TransformParams p;
  p.n = 2;
  const SignalVector x = testing::random_signal(2, 1);
  const std::vector<GridPoint> bad{{4, 0}};
  EXPECT_THROW(direct_oracle(x, p, bad), RangeError);
  p.n = 3;
  EXPECT_THROW(direct_oracle(x, p, {}), ShapeError);
}

TEST(ErrorMetricsTest, IdenticalListsGiveZero) {
  const SignalVector x = testing::random_signal(2, 2);
  std::vector<Complex> v{1.0, 2.0, Complex(0, 1), 4.0};
  ErrorReport r = error_metrics(v, v, x);
  EXPECT_EQ(r.delta_max, 0.0);
  EXPECT_EQ(r.delta_mean, 0.0);
  EXPECT_EQ(r.sample_count, 4u);
}

TEST(ErrorMetricsTest, OnePointMismatch) {
  const SignalVector x(std::vector<Complex>{1.0, 1.0});  // sum |x| = 2
  std::vector<Complex> exact(4, 0.0), approx(4, 0.0);
  approx[2] = Complex(0.3, 0.4);
  ErrorReport r = error_metrics(approx, exact, x);
  EXPECT_DOUBLE_EQ(r.delta_max, 0.25);
  EXPECT_DOUBLE_EQ(r.delta_mean, 0.0625);
  EXPECT_LE(r.delta_mean, r.delta_max);
}

TEST(ErrorMetricsTest, ZeroSignalIsDegenerate) {
  const SignalVector x(std::vector<Complex>(4));
  std::vector<Complex> v(4);
  EXPECT_THROW(error_metrics(v, v, x), DegenerateStateError);
  EXPECT_THROW(error_metrics(v, std::vector<Complex>(3), testing::random_signal(2, 3)),
               ShapeError);
}

TEST(TransformTest, DeltaGivesOneEverywhere) {
  std::vector<Complex> x(16);
  x[0] = 1.0;
  for (double wr : {0.0, 2.0 * pi, 5.0}) {
    TransformParams p;
    p.n = 4;
    p.omega_r = wr;
    TransformResult r = transform(SignalVector(x), p);
    for (const Complex& c : chi_grid(r)) EXPECT_LE(std::abs(c - 1.0), 1e-10);
  }
}

TEST(TransformTest, ConstantSignalSumsAtOrigin) {
  TransformParams p;
  p.n = 6;
  p.omega_r = 3.3;
  TransformResult r = transform(SignalVector(std::vector<Complex>(64, 1.0)), p);
  EXPECT_LE(std::abs(evaluate_chi(r.output, 0, 0) - 64.0), 1e-9);
}

TEST(TransformTest, ExactWithoutTruncation) {
  for (SignalKind kind : all_signal_kinds()) {
    for (std::size_t n = 2; n <= 5; ++n) {
      TransformParams p;
      p.n = n;
      p.tau = 0.0;
      const SignalVector x = gen_signal(kind, n);
      TransformResult r = transform(x, p);
      ErrorReport e = error_metrics(chi_grid(r), dense_grid_oracle(x, p), x);
      EXPECT_LE(e.delta_max, 1e-10) << to_string(kind) << " n=" << n;
    }
  }
}

TEST(TransformTest, ErrorWithinSquareRootOfCutoff) {
  const SignalVector x = testing::random_signal(6, 77);
  for (double tau : {1e-15, 1e-10, 1e-6}) {
    TransformParams p;
    p.n = 6;
    p.tau = tau;
    TransformResult r = transform(x, p);
    ErrorReport e = error_metrics(chi_grid(r), dense_grid_oracle(x, p), x);
    EXPECT_LE(e.delta_max, std::sqrt(tau)) << "tau=" << tau;
  }
}

TEST(TransformTest, PipelineIsLinear) {
  const Complex alpha(0.7, -1.2), beta(-2.0, 0.4);
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::vector<Complex> x = testing::random_samples(n, 10 + n);
    const std::vector<Complex> y = testing::random_samples(n, 20 + n);
    std::vector<Complex> xy(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xy[j] = alpha * x[j] + beta * y[j];
    TransformParams p;
    p.n = n;
    p.tau = 0.0;
    const auto cx = chi_grid(transform(SignalVector(x), p));
    const auto cy = chi_grid(transform(SignalVector(y), p));
    const auto cxy = chi_grid(transform(SignalVector(xy), p));
    const double scale = SignalVector(x).l1_norm() + SignalVector(y).l1_norm();
    for (std::size_t i = 0; i < cx.size(); ++i) {
      EXPECT_LE(std::abs(cxy[i] - (alpha * cx[i] + beta * cy[i])), 1e-12 * 3.0 * scale);
    }
  }
}

TEST(TransformTest, PrebuiltOperatorGivesSameOutput) {
  TransformParams p;
  p.n = 5;
  const SignalVector x = gen_signal(SignalKind::kMultiDecay, 5);
  MatrixProductOperator zt = build_zt_mpo(p.n, p.omega_r, p.omega_i, p.tau);
  TransformResult a = transform(x, p);
  TransformResult b = transform(x, p, zt);
  EXPECT_LE(testing::max_abs_diff(chi_grid(a), chi_grid(b)), 1e-12 * x.l1_norm());
  EXPECT_LT(b.timings.build, a.timings.build);
  TransformParams other = p;
  other.omega_r = 1.0;
  EXPECT_THROW(transform(x, other, zt), LayoutError);
}

TEST(TransformTest, ReportsBondsAndTimings) {
  TransformParams p;
  p.n = 8;
  TransformResult r = transform(gen_signal(SignalKind::kSinusoid, 8), p);
  EXPECT_EQ(r.input_max_bond, 2u);
  EXPECT_EQ(r.paired_max_bond, 4u);
  EXPECT_EQ(r.output_bonds.size(), 15u);
  EXPECT_GE(r.output_max_bond(), 1u);
  EXPECT_GT(r.operator_report.max_bond_dimension, 1u);
  EXPECT_LE(r.timings.core(), r.timings.full());
  EXPECT_TRUE(r.validated);
}

TEST(TransformTest, GrowingModesOutsideValidatedDomain) {
  // Negative radial scale: accepted, flagged, still exact against the sum.
  TransformParams p;
  p.n = 3;
  p.omega_r = -1.0;
  p.tau = 0.0;
  const SignalVector x = testing::random_signal(3, 4);
  TransformResult r = transform(x, p);
  EXPECT_FALSE(r.validated);
  EXPECT_LE(error_metrics(chi_grid(r), dense_grid_oracle(x, p), x).delta_max, 1e-10);
}

TEST(TransformTest, RejectsMismatchedSize) {
  TransformParams p;
  p.n = 4;
  EXPECT_THROW(transform(testing::random_signal(3, 1), p), ShapeError);
  TransformResult r = transform(testing::random_signal(4, 1), p);
  EXPECT_THROW(evaluate_chi(r.output, 16, 0), RangeError);
}

}  // namespace
}  // namespace zmpo
