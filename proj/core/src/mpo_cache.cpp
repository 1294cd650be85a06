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


#include "zmpo/mpo_cache.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "zmpo/error.hpp"
#include "zmpo/mpo_builder.hpp"

namespace zmpo {
namespace {

static_assert(std::endian::native == std::endian::little,
              "operator files are read by memcpy on little-endian hosts");

constexpr char kMagic[4] = {'Z', 'M', 'P', 'O'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kMaxExtent = 1 << 16;

class Writer {
 public:
  explicit Writer(const std::filesystem::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw FormatError("cannot write " + path.string());
  }
  template <typename T>
  void put(const T& v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void put_label(const SiteLabel& s) {
    put(static_cast<std::uint8_t>(s.reg));
    put(static_cast<std::uint64_t>(s.weight));
  }
  void finish(const std::filesystem::path& path) {
    out_.flush();
    if (!out_) throw FormatError("short write to " + path.string());
  }

 private:
  std::ofstream out_;
};

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path)
      : in_(path, std::ios::binary), name_(path.string()) {
    if (!in_) throw FormatError("cannot open " + name_);
  }
  template <typename T>
  T get() {
    T v{};
    if (!in_.read(reinterpret_cast<char*>(&v), sizeof(T))) {
      throw FormatError(name_ + ": truncated operator file");
    }
    return v;
  }
  SiteLabel get_label() {
    const auto reg = get<std::uint8_t>();
    const auto weight = get<std::uint64_t>();
    if (reg != 1 && reg != 2) throw FormatError(name_ + ": bad register tag");
    if (weight >= 64) throw FormatError(name_ + ": bad bit weight");
    return {static_cast<Register>(reg), static_cast<std::size_t>(weight)};
  }
  void read_magic() {
    char magic[4];
    if (!in_.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
      throw FormatError(name_ + ": not a ZMPO file");
    }
  }
  const std::string& name() const { return name_; }

 private:
  std::ifstream in_;
  std::string name_;
};

std::string hex_bits(double v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v)));
  return buf;
}

}  // namespace

void save_mpo(const std::filesystem::path& path, const MatrixProductOperator& op) {
  Writer w(path);
  w.put(kMagic);
  w.put(kVersion);
  w.put(static_cast<std::uint32_t>(op.metadata().kind));
  w.put(op.metadata().omega_r);
  w.put(op.metadata().omega_i);
  w.put(op.metadata().tau);
  w.put(op.scale());
  w.put(static_cast<std::uint64_t>(op.size()));
  for (std::size_t s = 0; s < op.size(); ++s) {
    w.put_label(op.input_labels()[s]);
    w.put_label(op.output_labels()[s]);
    const DenseTensor& t = op.site(s);
    for (std::size_t axis = 0; axis < 4; ++axis) {
      w.put(static_cast<std::uint64_t>(t.extent(axis)));
    }
    for (const Complex& c : t.data()) {
      w.put(c.real());
      w.put(c.imag());
    }
  }
  w.finish(path);
}

MatrixProductOperator load_mpo(const std::filesystem::path& path) {
  Reader r(path);
  r.read_magic();
  const auto version = r.get<std::uint32_t>();
  if (version != kVersion) {
    throw FormatError(r.name() + ": unsupported version " + std::to_string(version));
  }
  const auto kind = r.get<std::uint32_t>();
  if (kind > static_cast<std::uint32_t>(OperatorKind::kZTransform)) {
    throw FormatError(r.name() + ": unknown operator kind");
  }
  OperatorMetadata meta;
  meta.kind = static_cast<OperatorKind>(kind);
  meta.omega_r = r.get<double>();
  meta.omega_i = r.get<double>();
  meta.tau = r.get<double>();
  const double scale = r.get<double>();
  const auto sites = r.get<std::uint64_t>();
  if (sites == 0 || sites > 128) throw FormatError(r.name() + ": implausible site count");

  std::vector<DenseTensor> tensors;
  std::vector<SiteLabel> in_labels, out_labels;
  for (std::uint64_t s = 0; s < sites; ++s) {
    in_labels.push_back(r.get_label());
    out_labels.push_back(r.get_label());
    Shape shape(4);
    for (std::size_t& e : shape) {
      const auto v = r.get<std::uint64_t>();
      if (v == 0 || v > kMaxExtent) throw FormatError(r.name() + ": implausible extent");
      e = static_cast<std::size_t>(v);
    }
    DenseTensor t(shape);
    for (Complex& c : t.data()) {
      const double re = r.get<double>();
      const double im = r.get<double>();
      c = Complex(re, im);
    }
    tensors.push_back(std::move(t));
  }
  try {
    return MatrixProductOperator(std::move(tensors), std::move(in_labels),
                                 std::move(out_labels), meta, scale);
  } catch (const Error& e) {
    throw FormatError(r.name() + ": " + e.what());
  }
}

std::filesystem::path zt_cache_path(const std::filesystem::path& dir, std::size_t n,
                                    double omega_r, double omega_i, double tau) {
  return dir / ("zt_n" + std::to_string(n) + "_" + hex_bits(omega_r) + "_" +
                hex_bits(omega_i) + "_" + hex_bits(tau) + ".zmpo");
}

MatrixProductOperator load_or_build_zt(const std::filesystem::path& dir, std::size_t n,
                                       double omega_r, double omega_i, double tau,
                                       bool* hit) {
  const std::filesystem::path path = zt_cache_path(dir, n, omega_r, omega_i, tau);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    MatrixProductOperator op = load_mpo(path);
    const OperatorMetadata& m = op.metadata();
    if (m.kind == OperatorKind::kZTransform && op.size() == 2 * n &&
        m.omega_r == omega_r && m.omega_i == omega_i && m.tau == tau) {
      if (hit) *hit = true;
      return op;
    }
  }
  MatrixProductOperator op = build_zt_mpo(n, omega_r, omega_i, tau);
  std::filesystem::create_directories(dir);
  // Write then rename so a concurrent reader never sees a partial file.
  const std::filesystem::path tmp = path.string() + ".tmp";
  save_mpo(tmp, op);
  std::filesystem::rename(tmp, path);
  if (hit) *hit = false;
  return op;
}

}  // namespace zmpo
