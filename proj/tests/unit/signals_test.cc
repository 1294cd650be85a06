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
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zmpo/error.hpp"
#include "zmpo/signal_io.hpp"
#include "zmpo/signals.hpp"

namespace zmpo {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("zmpo_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(SignalsTest, SinusoidStartsAtZero) {
  EXPECT_EQ(gen_signal(SignalKind::kSinusoid, 6)[0], Complex(0.0));
  const SignalVector x = gen_signal(SignalKind::kSinusoid, 6);
  EXPECT_NEAR(x[3].real(), std::sin(2.0 * std::numbers::pi * 3.0 * 5.0 / 64.0), 1e-15);
}

TEST(SignalsTest, CuspStartsAtOne) {
  EXPECT_EQ(gen_signal(SignalKind::kCusp, 5)[0], Complex(1.0));
}

TEST(SignalsTest, MultiDecayAmplitudesUnitNorm) {
  MultiDecayTerms t = multi_decay_terms({});
  ASSERT_EQ(t.amplitudes.size(), 10u);
  double norm = 0.0;
  for (double a : t.amplitudes) {
    EXPECT_GE(a, 0.0);
    norm += a * a;
  }
  EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12);
  for (double w : t.frequencies) {
    EXPECT_GE(w, -20.0);
    EXPECT_LT(w, 20.0);
  }
  for (double l : t.decay_rates) {
    EXPECT_GE(l, -2.0);
    EXPECT_LT(l, 0.0);
  }
}

TEST(SignalsTest, DeterministicGivenSeed) {
  SignalParams p;
  p.seed = 77;
  const SignalVector a = gen_signal(SignalKind::kGaussianNoise, 8, p);
  const SignalVector b = gen_signal(SignalKind::kGaussianNoise, 8, p);
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a[j], b[j]);
  p.seed = 78;
  EXPECT_NE(gen_signal(SignalKind::kGaussianNoise, 8, p)[0], a[0]);
}

TEST(SignalsTest, GaussianNoiseMoments) {
  const SignalVector x = gen_signal(SignalKind::kGaussianNoise, 14);
  double mean = 0.0, var = 0.0;
  for (const Complex& c : x.samples()) mean += c.real();
  mean /= static_cast<double>(x.size());
  for (const Complex& c : x.samples()) var += (c.real() - mean) * (c.real() - mean);
  var /= static_cast<double>(x.size());
  EXPECT_NEAR(mean, 0.0, 5.0 / std::sqrt(static_cast<double>(x.size())));
  EXPECT_NEAR(var, 1.0, 0.05);
}

TEST(SignalsTest, DampedCosineMatchesPowerForm) {
  SignalParams p;
  const SignalVector x = gen_signal(SignalKind::kDampedCosine, 10, p);
  Complex power = 1.0;
  for (std::size_t j = 0; j < 50; ++j) {
    EXPECT_LE(std::abs(x[j] - power * std::cos(p.omega0 * static_cast<double>(j))), 1e-13);
    power *= p.damping;
  }
}

TEST(SignalsTest, DeltaIndexChecked) {
  SignalParams p;
  p.delta_index = 3;
  EXPECT_EQ(gen_signal(SignalKind::kDelta, 2, p)[3], Complex(1.0));
  p.delta_index = 4;
  EXPECT_THROW(gen_signal(SignalKind::kDelta, 2, p), RangeError);
}

TEST(SignalsTest, UnknownKindRejected) {
  EXPECT_THROW(parse_signal_kind("chirp"), ParameterError);
  for (SignalKind k : all_signal_kinds()) EXPECT_EQ(parse_signal_kind(to_string(k)), k);
}

TEST(SignalIoTest, CsvRoundTripIsExact) {
  TempDir dir;
  const SignalVector x = testing::random_signal(5, 9);
  write_signal_csv(dir / "x.csv", x);
  const SignalVector y = read_signal_csv(dir / "x.csv");
  ASSERT_EQ(y.size(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) EXPECT_EQ(y[j], x[j]);
}

TEST(SignalIoTest, CsvAcceptsRealColumnAndComments) {
  TempDir dir;
  write_text(dir / "x.csv", "# comment\nvalue\n1\n2.5\n\n-3,1e-3\n4\n");
  const SignalVector y = read_signal_csv(dir / "x.csv");
  ASSERT_EQ(y.size(), 4u);
  EXPECT_EQ(y[1], Complex(2.5));
  EXPECT_EQ(y[2], Complex(-3.0, 1e-3));
}

TEST(SignalIoTest, MalformedCsvRejected) {
  TempDir dir;
  write_text(dir / "bad.csv", "real,imag\n1,0\nnot,a number\n");
  EXPECT_THROW(read_signal_csv(dir / "bad.csv"), FormatError);
  write_text(dir / "empty.csv", "real,imag\n");
  EXPECT_THROW(read_signal_csv(dir / "empty.csv"), FormatError);
  write_text(dir / "odd.csv", "1\n2\n3\n");
  EXPECT_THROW(read_signal_csv(dir / "odd.csv"), ShapeError);
  EXPECT_THROW(read_signal_csv(dir / "missing.csv"), FormatError);
}

TEST(SignalIoTest, BinaryRoundTripIsExact) {
  TempDir dir;
  const SignalVector x = testing::random_signal(6, 10);
  write_signal_binary(dir / "x.zsig", x);
  const SignalVector y = read_signal_file(dir / "x.zsig");
  for (std::size_t j = 0; j < x.size(); ++j) EXPECT_EQ(y[j], x[j]);
  EXPECT_EQ(fs::file_size(dir / "x.zsig"), 16u + 16u * x.size());
}

TEST(SignalIoTest, BinaryRejectsCorruption) {
  TempDir dir;
  write_text(dir / "junk.zsig", "NOPE....");
  EXPECT_THROW(read_signal_binary(dir / "junk.zsig"), FormatError);
  const SignalVector x = testing::random_signal(3, 11);
  write_signal_binary(dir / "x.zsig", x);
  fs::resize_file(dir / "x.zsig", fs::file_size(dir / "x.zsig") - 5);
  EXPECT_THROW(read_signal_binary(dir / "x.zsig"), FormatError);
}

TEST(SignalSpecTest, ParsesKeys) {
  SignalSpec s = parse_signal_spec("damped_cosine:a_abs=0.5,a_arg=0.1,omega0=0.2");
  EXPECT_EQ(s.kind, SignalKind::kDampedCosine);
  EXPECT_NEAR(std::abs(s.params.damping), 0.5, 1e-15);
  EXPECT_NEAR(std::arg(s.params.damping), 0.1, 1e-15);
  EXPECT_EQ(s.params.omega0, 0.2);
  EXPECT_EQ(parse_signal_spec("gaussian_noise:seed=7").params.seed, 7u);
  EXPECT_EQ(parse_signal_spec("delta").kind, SignalKind::kDelta);
}

TEST(SignalSpecTest, FormatRoundTrips) {
  for (const char* text : {"gaussian_noise:seed=5", "delta:index=3",
                           "multi_decay:n_terms=4,amplitude_seed=1,frequency_seed=2,"
                           "decay_seed=3", "cusp"}) {
    EXPECT_EQ(format_signal_spec(parse_signal_spec(text)), text);
  }
  const SignalSpec d = parse_signal_spec("damped_cosine:a_abs=0.99,a_arg=-0.01,omega0=0.5");
  const SignalSpec again = parse_signal_spec(format_signal_spec(d));
  EXPECT_LE(std::abs(again.params.damping - d.params.damping), 1e-16);
  EXPECT_EQ(again.params.omega0, 0.5);
}

TEST(SignalSpecTest, RejectsBadInput) {
  EXPECT_THROW(parse_signal_spec("noise"), ParameterError);
  EXPECT_THROW(parse_signal_spec("delta:foo=1"), ParameterError);
  EXPECT_THROW(parse_signal_spec("delta:index=x"), FormatError);
  EXPECT_THROW(parse_signal_spec("delta:index"), FormatError);
}

TEST(SignalSpecTest, LoadPrefersExistingFile) {
  TempDir dir;
  const SignalVector x = testing::random_signal(2, 12);
  write_signal_csv(dir / "x.csv", x);
  EXPECT_EQ(load_signal((dir / "x.csv").string(), 9).size(), 4u);
  EXPECT_EQ(load_signal("sinusoid", 5).size(), 32u);
}

}  // namespace
}  // namespace zmpo
