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

// Signal files and textual signal specifications.
//
// CSV: one sample per line as "real,imag" (the imaginary column may be
// omitted). Blank lines and lines starting with '#' are skipped, and a first
// line that does not parse as numbers is taken as a header.
//
// Binary (".zsig"): little-endian
//   char[4]  "ZSIG"
//   uint32   version (1)
//   uint64   sample count
//   float64  re, im for each sample
//
// Signal spec: "<kind>[:key=value,...]" with kind as in signals.hpp and keys
// seed, n_terms, amplitude_seed, frequency_seed, decay_seed, a_abs, a_arg,
// omega0, index.

#ifndef ZMPO_SIGNAL_IO_HPP_
#define ZMPO_SIGNAL_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "zmpo/mps.hpp"
#include "zmpo/signals.hpp"

namespace zmpo {

// All readers throw FormatError on malformed content and ShapeError when the
// length is not a power of two.
SignalVector read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(const std::filesystem::path& path, const SignalVector& x);

SignalVector read_signal_binary(const std::filesystem::path& path);
void write_signal_binary(const std::filesystem::path& path, const SignalVector& x);

// Dispatches on the extension: ".zsig" is binary, anything else CSV.
SignalVector read_signal_file(const std::filesystem::path& path);

struct SignalSpec {
  SignalKind kind = SignalKind::kDelta;
  SignalParams params;
};

// Throws ParameterError on unknown kinds or keys and FormatError on values
// that do not parse.
SignalSpec parse_signal_spec(std::string_view text);
std::string format_signal_spec(const SignalSpec& spec);

// An existing file is read; anything else is parsed as a signal spec and
// generated at size n.
SignalVector load_signal(std::string_view input, std::size_t n);

}  // namespace zmpo

#endif  // ZMPO_SIGNAL_IO_HPP_
