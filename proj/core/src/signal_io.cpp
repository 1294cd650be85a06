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


#include "zmpo/signal_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

static_assert(std::endian::native == std::endian::little,
              "binary signal files are read by memcpy on little-endian hosts");

constexpr char kMagic[4] = {'Z', 'S', 'I', 'G'};
constexpr std::uint32_t kVersion = 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Complex> parse_sample(std::string_view line) {
  const auto comma = line.find(',');
  const auto re = parse_double(line.substr(0, comma));
  if (!re) return std::nullopt;
  if (comma == std::string_view::npos) return Complex(*re, 0.0);
  const auto im = parse_double(line.substr(comma + 1));
  if (!im) return std::nullopt;
  return Complex(*re, *im);
}

template <typename T>
void write_raw(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& in, const std::filesystem::path& path) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw FormatError(path.string() + ": truncated signal file");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw FormatError("signal spec: '" + std::string(key) + "' expects an integer");
  }
  return v;
}

double parse_real(std::string_view key, std::string_view value) {
  const auto v = parse_double(value);
  if (!v || !std::isfinite(*v)) {
    throw FormatError("signal spec: '" + std::string(key) + "' expects a number");
  }
  return *v;
}

std::string shortest(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SignalVector read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<Complex> samples;
  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto sample = parse_sample(t);
    if (!sample) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'real,imag'");
    }
    header_allowed = false;
    samples.push_back(*sample);
  }
  if (samples.empty()) throw FormatError(path.string() + ": no samples");
  return SignalVector(std::move(samples));
}

void write_signal_csv(const std::filesystem::path& path, const SignalVector& x) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "real,imag\n";
  char buf[80];
  for (const Complex& c : x.samples()) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", c.real(), c.imag());
    out << buf;
  }
}

SignalVector read_signal_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError(path.string() + ": not a ZSIG file");
  }
  const auto version = read_raw<std::uint32_t>(in, path);
  if (version != kVersion) {
    throw FormatError(path.string() + ": unsupported version " + std::to_string(version));
  }
  const auto count = read_raw<std::uint64_t>(in, path);
  if (count == 0 || count > (std::uint64_t{1} << 34)) {
    throw FormatError(path.string() + ": implausible sample count");
  }
  std::vector<Complex> samples(count);
  for (Complex& c : samples) {
    const double re = read_raw<double>(in, path);
    const double im = read_raw<double>(in, path);
    c = Complex(re, im);
  }
  return SignalVector(std::move(samples));
}

void write_signal_binary(const std::filesystem::path& path, const SignalVector& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(kMagic, 4);
  write_raw(out, kVersion);
  write_raw(out, static_cast<std::uint64_t>(x.size()));
  for (const Complex& c : x.samples()) {
    write_raw(out, c.real());
    write_raw(out, c.imag());
  }
}

SignalVector read_signal_file(const std::filesystem::path& path) {
  if (path.extension() == ".zsig") return read_signal_binary(path);
  return read_signal_csv(path);
}

SignalSpec parse_signal_spec(std::string_view text) {
  SignalSpec spec;
  const auto colon = text.find(':');
  spec.kind = parse_signal_kind(trim(text.substr(0, colon)));
  if (colon == std::string_view::npos) return spec;

  double a_abs = std::abs(spec.params.damping);
  double a_arg = std::arg(spec.params.damping);
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("signal spec: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    SignalParams& p = spec.params;
    if (key == "seed") {
      p.seed = parse_uint(key, value);
    } else if (key == "n_terms") {
      p.n_terms = parse_uint(key, value);
    } else if (key == "amplitude_seed") {
      p.amplitude_seed = parse_uint(key, value);
    } else if (key == "frequency_seed") {
      p.frequency_seed = parse_uint(key, value);
    } else if (key == "decay_seed") {
      p.decay_seed = parse_uint(key, value);
    } else if (key == "a_abs") {
      a_abs = parse_real(key, value);
    } else if (key == "a_arg") {
      a_arg = parse_real(key, value);
    } else if (key == "omega0") {
      p.omega0 = parse_real(key, value);
    } else if (key == "index") {
      p.delta_index = parse_uint(key, value);
    } else {
      throw ParameterError("signal spec: unknown key '" + std::string(key) + "'");
    }
  }
  spec.params.damping = std::polar(a_abs, a_arg);
  return spec;
}

std::string format_signal_spec(const SignalSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.kind);
  const SignalParams& p = spec.params;
  std::vector<std::string> items;
  switch (spec.kind) {
    case SignalKind::kGaussianNoise:
      items.push_back("seed=" + std::to_string(p.seed.value_or(kDefaultNoiseSeed)));
      break;
    case SignalKind::kMultiDecay:
      items.push_back("n_terms=" + std::to_string(p.n_terms));
      items.push_back("amplitude_seed=" +
                      std::to_string(p.amplitude_seed.value_or(kDefaultAmplitudeSeed)));
      items.push_back("frequency_seed=" +
                      std::to_string(p.frequency_seed.value_or(kDefaultFrequencySeed)));
      items.push_back("decay_seed=" +
                      std::to_string(p.decay_seed.value_or(kDefaultDecaySeed)));
      break;
    case SignalKind::kDampedCosine:
      items.push_back("a_abs=" + shortest(std::abs(p.damping)));
      items.push_back("a_arg=" + shortest(std::arg(p.damping)));
      items.push_back("omega0=" + shortest(p.omega0));
      break;
    case SignalKind::kDelta:
      items.push_back("index=" + std::to_string(p.delta_index));
      break;
    case SignalKind::kSinusoid:
    case SignalKind::kCusp:
      break;
  }
  for (std::size_t i = 0; i < items.size(); ++i) out << (i == 0 ? ':' : ',') << items[i];
  return out.str();
}

SignalVector load_signal(std::string_view input, std::size_t n) {
  const std::filesystem::path path{std::string(input)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return read_signal_file(path);
  const SignalSpec spec = parse_signal_spec(input);
  return gen_signal(spec.kind, n, spec.params);
}

}  // namespace zmpo
