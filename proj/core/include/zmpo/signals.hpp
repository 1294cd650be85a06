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

// Test-signal families on j = 0, ..., N - 1 with sampling interval
// dt = 5 / N.
//
//   sinusoid        sin(2 pi j dt)
//   gaussian_noise  independent N(0, 1) samples
//   multi_decay     sum_k a_k sin(w_k dt j) e^{lambda_k dt j}, with a_k ~ U[0, 1]
//                   rescaled to unit Euclidean norm, w_k ~ U[-20, 20],
//                   lambda_k ~ U[-2, 0]
//   cusp            |cos(2 pi j dt)|^0.8
//   damped_cosine   a^j cos(w0 j)
//   delta           1 at one index, 0 elsewhere
//
// Random draws use zmpo::Rng, so a given seed gives the same samples on every
// platform.

#ifndef ZMPO_SIGNALS_HPP_
#define ZMPO_SIGNALS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zmpo/mps.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

enum class SignalKind {
  kSinusoid,
  kGaussianNoise,
  kMultiDecay,
  kCusp,
  kDampedCosine,
  kDelta,
};

std::string_view to_string(SignalKind kind);
// Throws ParameterError for an unknown name.
SignalKind parse_signal_kind(std::string_view name);
std::vector<SignalKind> all_signal_kinds();

inline constexpr std::uint64_t kDefaultNoiseSeed = 1234;
inline constexpr std::uint64_t kDefaultAmplitudeSeed = 1001;
inline constexpr std::uint64_t kDefaultFrequencySeed = 2002;
inline constexpr std::uint64_t kDefaultDecaySeed = 4004;

struct SignalParams {
  // gaussian_noise seed.
  std::optional<std::uint64_t> seed;
  // multi_decay.
  std::size_t n_terms = 10;
  std::optional<std::uint64_t> amplitude_seed;
  std::optional<std::uint64_t> frequency_seed;
  std::optional<std::uint64_t> decay_seed;
  // damped_cosine.
  Complex damping = std::polar(0.99998, -0.002);
  double omega0 = 0.0061;
  // delta.
  std::size_t delta_index = 0;
};

struct MultiDecayTerms {
  std::vector<double> amplitudes;
  std::vector<double> frequencies;
  std::vector<double> decay_rates;
};

MultiDecayTerms multi_decay_terms(const SignalParams& params);

// Throws ShapeError for n == 0 and RangeError for a delta index >= 2^n.
SignalVector gen_signal(SignalKind kind, std::size_t n, const SignalParams& params = {});

}  // namespace zmpo

#endif  // ZMPO_SIGNALS_HPP_
