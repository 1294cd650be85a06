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


#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "zmpo/signal_io.hpp"
#include "zmpo/signals.hpp"

namespace zmpo::tools {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    return static_cast<std::size_t>(
        std::find(header.begin(), header.end(), name) - header.begin());
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream f(path);
  CsvTable t;
  std::string line;
  std::getline(f, line);
  t.header = split(line);
  while (std::getline(f, line)) t.rows.push_back(split(line));
  return t;
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

json read_json(const fs::path& path) { return json::parse(read_file(path)); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zmpo_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("ZMPO_MEMORY_BUDGET_MB");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("ZMPO_MEMORY_BUDGET_MB");
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "zmpo");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, DeltaTransformIsOneOnTheFullGrid) {
  ASSERT_EQ(run({"transform", "--input", "delta", "--n", "4", "--out", path("t")}), kExitOk)
      << err_.str();
  const CsvTable t = read_csv(dir_ / "t" / "scan.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"k", "l", "re_z", "im_z", "re_chi", "im_chi",
                                                "abs_chi"}));
  ASSERT_EQ(t.rows.size(), 256u);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(std::stod(row[t.column("abs_chi")]), 1.0, 1e-10);
  }
  const json m = read_json(dir_ / "t" / "manifest.json");
  EXPECT_EQ(m["params"]["n"], 4);
  EXPECT_EQ(m["window"]["count"], 16);
  EXPECT_EQ(m["window"]["stride"], 1);
  EXPECT_TRUE(m["timings"]["full"].get<double>() >= m["timings"]["core"].get<double>());
}

TEST_F(CliTest, VerifyReportsOracleError) {
  ASSERT_EQ(run({"transform", "--input", "gaussian_noise", "--n", "6", "--tau", "0", "--out",
                 path("t"), "--verify"}),
            kExitOk)
      << err_.str();
  const json m = read_json(dir_ / "t" / "manifest.json");
  EXPECT_EQ(m["verify"]["sample_count"], 4096);
  EXPECT_LE(m["verify"]["delta_max"].get<double>(), 1e-10);
  EXPECT_LE(m["verify"]["delta_mean"].get<double>(), m["verify"]["delta_max"].get<double>());
}

TEST_F(CliTest, OutputsAreDeterministic) {
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(run({"transform", "--input", "multi_decay:seed=3", "--n", "7", "--out",
                   path(name), "--stride", "2", "--count", "32", "--k0", "8"}),
              kExitOk);
  }
  EXPECT_EQ(read_file(dir_ / "a" / "scan.csv"), read_file(dir_ / "b" / "scan.csv"));
  const CsvTable t = read_csv(dir_ / "a" / "scan.csv");
  EXPECT_EQ(t.rows.size(), 32u * 32u);
  EXPECT_EQ(t.rows.front()[0], "8");
}

TEST_F(CliTest, ReadsSignalFilesAndInfersSize) {
  write_signal_csv(dir_ / "x.csv", gen_signal(SignalKind::kCusp, 5));
  write_signal_binary(dir_ / "x.zsig", gen_signal(SignalKind::kCusp, 5));
  ASSERT_EQ(run({"transform", "--input", path("x.csv"), "--out", path("c")}), kExitOk);
  ASSERT_EQ(run({"transform", "--input", path("x.zsig"), "--out", path("b")}), kExitOk);
  EXPECT_EQ(read_file(dir_ / "c" / "scan.csv"), read_file(dir_ / "b" / "scan.csv"));
  EXPECT_EQ(read_json(dir_ / "c" / "manifest.json")["params"]["n"], 5);
  EXPECT_EQ(run({"transform", "--input", path("x.csv"), "--n", "6", "--out", path("d")}),
            kExitParseError);
}

TEST_F(CliTest, MalformedCsvFailsWithoutOutput) {
  std::ofstream(dir_ / "bad.csv") << "real,imag\n1,0\nnot,a number\n";
  EXPECT_EQ(run({"transform", "--input", path("bad.csv"), "--out", path("t")}),
            kExitParseError);
  EXPECT_FALSE(fs::exists(dir_ / "t"));
  EXPECT_NE(err_.str().find("bad.csv"), std::string::npos);
}

TEST_F(CliTest, ArgumentErrorsUseTheParseCode) {
  EXPECT_EQ(run({"transform", "--input", "delta", "--n", "4", "--out", path("t"), "--bogus"}),
            kExitParseError);
  EXPECT_EQ(run({"transform", "--input", "delta", "--out", path("t")}), kExitParseError);
  EXPECT_EQ(run({"transform", "--input", "nonsense", "--n", "4", "--out", path("t")}),
            kExitParseError);
  EXPECT_EQ(run({"transform", "--input", "delta", "--n", "4", "--tau", "2", "--out", path("t")}),
            kExitParseError);
  EXPECT_EQ(run({"transform", "--input", "delta", "--n", "4", "--stride", "8", "--count", "4",
                 "--out", path("t")}),
            kExitParseError);
  EXPECT_EQ(run({"bench", "sideways"}), kExitParseError);
  EXPECT_EQ(run({}), kExitParseError);
  EXPECT_EQ(run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("transform"), std::string::npos);
}

TEST_F(CliTest, MemoryBudgetRefusesLargeRuns) {
  setenv("ZMPO_MEMORY_BUDGET_MB", "1", 1);
  EXPECT_EQ(run({"transform", "--input", "delta", "--n", "16", "--out", path("t")}),
            kExitNumericError);
  EXPECT_NE(err_.str().find("ZMPO_MEMORY_BUDGET_MB"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "t"));
  setenv("ZMPO_MEMORY_BUDGET_MB", "lots", 1);
  EXPECT_EQ(run({"transform", "--input", "delta", "--n", "4", "--out", path("t")}),
            kExitParseError);
}

TEST_F(CliTest, OperatorCacheIsReused) {
  const std::vector<std::string> args{"transform", "--input", "sinusoid", "--n", "5",
                                      "--mpo-cache", path("cache"), "--out", path("t")};
  ASSERT_EQ(run(args), kExitOk);
  EXPECT_FALSE(read_json(dir_ / "t" / "manifest.json")["mpo_cache"]["hit"].get<bool>());
  const std::string first = read_file(dir_ / "t" / "scan.csv");
  ASSERT_EQ(run(args), kExitOk);
  EXPECT_TRUE(read_json(dir_ / "t" / "manifest.json")["mpo_cache"]["hit"].get<bool>());
  EXPECT_EQ(read_file(dir_ / "t" / "scan.csv"), first);
}

TEST_F(CliTest, BondsSuiteRespectsProductBound) {
  ASSERT_EQ(run({"bench", "bonds", "--n-min", "4", "--n-max", "8", "--out", path("b")}),
            kExitOk);
  const CsvTable t = read_csv(dir_ / "b" / "bench_bonds.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"suite", "signal", "n", "tau", "omega_r",
                                                "omega_i", "metric", "value"}));
  ASSERT_EQ(t.rows.size(), 15u);
  for (std::size_t i = 0; i < t.rows.size(); i += 3) {
    const double d = std::stod(t.rows[i][7]), q = std::stod(t.rows[i + 1][7]),
                 z = std::stod(t.rows[i + 2][7]);
    EXPECT_LE(z, d * q);
  }
  const json s = read_json(dir_ / "b" / "bench_bonds_summary.json");
  EXPECT_TRUE(s["zt_within_product"].get<bool>());
  EXPECT_TRUE(s["rows"].back().contains("spectrum_fit"));
}

TEST_F(CliTest, ErrorSuiteFitsTheSweep) {
  ASSERT_EQ(run({"bench", "error", "--error-n", "6", "--taus", "1e-12,1e-9,1e-6", "--out",
                 path("b")}),
            kExitOk)
      << err_.str();
  const CsvTable t = read_csv(dir_ / "b" / "bench_error.csv");
  ASSERT_EQ(t.rows.size(), 6u);
  for (const auto& row : t.rows) EXPECT_GE(std::stod(row[7]), 0.0);
  const json s = read_json(dir_ / "b" / "bench_error_summary.json");
  EXPECT_GT(s["fit_delta_max"]["slope"].get<double>(), 0.0);
  EXPECT_GT(s["prefactor_delta_mean"].get<double>(), 0.0);
}

TEST_F(CliTest, RuntimeSuiteRecordsFullAndCore) {
  ASSERT_EQ(run({"bench", "runtime", "--n-min", "4", "--n-max", "6", "--signals",
                 "sinusoid,gaussian_noise", "--out", path("b")}),
            kExitOk);
  const CsvTable t = read_csv(dir_ / "b" / "bench_runtime.csv");
  ASSERT_EQ(t.rows.size(), 12u);
  for (std::size_t i = 0; i < t.rows.size(); i += 2) {
    EXPECT_EQ(t.rows[i][6], "runtime_full_seconds");
    EXPECT_GE(std::stod(t.rows[i][7]), std::stod(t.rows[i + 1][7]));
  }
  const json s = read_json(dir_ / "b" / "bench_runtime_summary.json");
  EXPECT_TRUE(s["core_le_full"].get<bool>());
  EXPECT_TRUE(s["fits"].contains("gaussian_noise"));
}

TEST_F(CliTest, PolesOnDeltaAreEmpty) {
  ASSERT_EQ(run({"poles", "--input", "delta", "--n", "8"}), kExitOk);
  const json j = json::parse(out_.str());
  EXPECT_TRUE(j["candidates"].empty());
}

TEST_F(CliTest, PolesThresholdAboveOneAddsNote) {
  ASSERT_EQ(run({"poles", "--input", "damped_cosine:a_abs=0.995,a_arg=0,omega0=0.3", "--n",
                 "8", "--threshold", "1.1"}),
            kExitOk);
  const json j = json::parse(out_.str());
  EXPECT_TRUE(j["candidates"].empty());
  EXPECT_FALSE(j["notes"].empty());
}

TEST_F(CliTest, PolesDumpLevelsAndDeterminism) {
  const std::vector<std::string> args{"poles", "--input",
                                      "damped_cosine:a_abs=0.995,a_arg=0,omega0=0.3",
                                      "--n", "9", "--out", path("p"), "--dump-levels"};
  ASSERT_EQ(run(args), kExitOk) << err_.str();
  const std::string first = read_file(dir_ / "p" / "poles.json");
  const json j = json::parse(first);
  EXPECT_GE(j["candidates"].size(), 2u);
  ASSERT_FALSE(j["level_dumps"].empty());
  for (const json& d : j["level_dumps"]) {
    EXPECT_TRUE(fs::exists(dir_ / "p" / d["file"].get<std::string>()));
  }
  ASSERT_EQ(run(args), kExitOk);
  EXPECT_EQ(read_file(dir_ / "p" / "poles.json"), first);
  EXPECT_EQ(run({"poles", "--input", "delta", "--n", "4", "--dump-levels"}), kExitParseError);
}

}  // namespace
}  // namespace zmpo::tools
