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
#include <filesystem>
#include <fstream>
#include <vector>

#include <gtest/gtest.h>

#include "zmpo/error.hpp"
#include "zmpo/fit.hpp"
#include "zmpo/mpo_builder.hpp"
#include "zmpo/mpo_cache.hpp"
#include "zmpo/oracle.hpp"

namespace zmpo {
namespace {

namespace fs = std::filesystem;

TEST(FitTest, ExactLine) {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  LineFit f = linear_fit(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
}

TEST(FitTest, PowerLawSlope) {
  std::vector<double> x, y;
  for (double n : {64.0, 128.0, 256.0, 512.0}) {
    x.push_back(n);
    y.push_back(0.3 * std::pow(n, 1.5));
  }
  LineFit f = log_log_fit(x, y);
  EXPECT_NEAR(f.slope, 1.5, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(0.3), 1e-12);
}

TEST(FitTest, FixedExponentPrefactor) {
  const std::vector<double> tau{1e-12, 1e-8, 1e-4};
  std::vector<double> y;
  for (double t : tau) y.push_back(0.2 * std::sqrt(t));
  EXPECT_NEAR(power_law_prefactor(tau, y, 0.5), 0.2, 1e-14);
  // Scatter by factors 2 and 1/2 cancels in the geometric mean.
  y = {0.4 * 1e-6, 0.1 * 1e-4, 0.2 * 1e-2};
  EXPECT_NEAR(power_law_prefactor(tau, y, 0.5), 0.2, 1e-14);
  EXPECT_THROW(power_law_prefactor(tau, std::vector<double>{1.0}, 0.5), ParameterError);
}

TEST(FitTest, NoisyLineHasLowerRSquared) {
  const std::vector<double> x{0, 1, 2, 3, 4}, y{0, 2, 1, 4, 2};
  LineFit f = linear_fit(x, y);
  EXPECT_GT(f.r_squared, 0.0);
  EXPECT_LT(f.r_squared, 1.0);
}

TEST(FitTest, ExponentialDecay) {
  std::vector<double> v;
  for (int k = 0; k < 10; ++k) v.push_back(2.0 * std::exp(-0.7 * k));
  ExponentialFit f = exponential_fit(v);
  EXPECT_NEAR(f.amplitude, 2.0, 1e-12);
  EXPECT_NEAR(f.rate, 0.7, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(FitTest, RejectsBadInput) {
  const std::vector<double> one{1.0}, two{1.0, 2.0}, same{1.0, 1.0};
  EXPECT_THROW(linear_fit(one, one), ParameterError);
  EXPECT_THROW(linear_fit(two, one), ParameterError);
  EXPECT_THROW(linear_fit(same, two), ParameterError);
  const std::vector<double> neg{1.0, -1.0};
  EXPECT_THROW(log_log_fit(two, neg), ParameterError);
  EXPECT_THROW(exponential_fit(neg), ParameterError);
}

class MpoCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zmpo_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

void expect_same_operator(const MatrixProductOperator& a, const MatrixProductOperator& b) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.input_labels(), b.input_labels());
  EXPECT_EQ(a.output_labels(), b.output_labels());
  EXPECT_EQ(a.scale(), b.scale());
  EXPECT_EQ(a.metadata().kind, b.metadata().kind);
  EXPECT_EQ(a.metadata().omega_r, b.metadata().omega_r);
  EXPECT_EQ(a.metadata().omega_i, b.metadata().omega_i);
  EXPECT_EQ(a.metadata().tau, b.metadata().tau);
  for (std::size_t s = 0; s < a.size(); ++s) {
    EXPECT_EQ(a.site(s).shape(), b.site(s).shape());
    EXPECT_TRUE(std::equal(a.site(s).data().begin(), a.site(s).data().end(),
                           b.site(s).data().begin()));
  }
}

TEST_F(MpoCacheTest, RoundTripIsBitExact) {
  MatrixProductOperator zt = build_zt_mpo(4, 1.3, kTwoPi, 1e-15);
  save_mpo(dir_ / "zt.zmpo", zt);
  expect_same_operator(zt, load_mpo(dir_ / "zt.zmpo"));
}

TEST_F(MpoCacheTest, LoadOrBuildMissesThenHits) {
  bool hit = true;
  MatrixProductOperator first = load_or_build_zt(dir_, 3, kTwoPi, kTwoPi, 1e-15, &hit);
  EXPECT_FALSE(hit);
  EXPECT_TRUE(fs::exists(zt_cache_path(dir_, 3, kTwoPi, kTwoPi, 1e-15)));
  MatrixProductOperator second = load_or_build_zt(dir_, 3, kTwoPi, kTwoPi, 1e-15, &hit);
  EXPECT_TRUE(hit);
  expect_same_operator(first, second);
}

TEST_F(MpoCacheTest, DistinctParametersGetDistinctFiles) {
  EXPECT_NE(zt_cache_path(dir_, 3, 1.0, kTwoPi, 1e-15),
            zt_cache_path(dir_, 3, std::nextafter(1.0, 2.0), kTwoPi, 1e-15));
  EXPECT_NE(zt_cache_path(dir_, 3, 1.0, kTwoPi, 1e-15),
            zt_cache_path(dir_, 4, 1.0, kTwoPi, 1e-15));
}

TEST_F(MpoCacheTest, CorruptFilesAreRejected) {
  EXPECT_THROW(load_mpo(dir_ / "missing.zmpo"), FormatError);
  {
    std::ofstream(dir_ / "bad.zmpo", std::ios::binary) << "ZMPX0000";
  }
  EXPECT_THROW(load_mpo(dir_ / "bad.zmpo"), FormatError);
  save_mpo(dir_ / "zt.zmpo", build_zt_mpo(3, kTwoPi, kTwoPi, 1e-15));
  const auto size = fs::file_size(dir_ / "zt.zmpo");
  fs::resize_file(dir_ / "zt.zmpo", size - 9);
  EXPECT_THROW(load_mpo(dir_ / "zt.zmpo"), FormatError);
}

}  // namespace
}  // namespace zmpo
