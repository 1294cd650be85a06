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


#include "zmpo/signals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zmpo/error.hpp"
#include "zmpo/random.hpp"

namespace zmpo {
namespace {

struct KindName {
  SignalKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {SignalKind::kSinusoid, "sinusoid"},
    {SignalKind::kGaussianNoise, "gaussian_noise"},
    {SignalKind::kMultiDecay, "multi_decay"},
    {SignalKind::kCusp, "cusp"},
    {SignalKind::kDampedCosine, "damped_cosine"},
    {SignalKind::kDelta, "delta"},
};

std::vector<double> uniform_draws(std::uint64_t seed, std::size_t count, double lo,
                                  double hi) {
  Rng rng(seed);
  std::vector<double> v(count);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

}  // namespace

std::string_view to_string(SignalKind kind) {
  for (const KindName& k : kNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

SignalKind parse_signal_kind(std::string_view name) {
  for (const KindName& k : kNames) {
    if (k.name == name) return k.kind;
  }
  throw ParameterError("unknown signal kind '" + std::string(name) + "'");
}

std::vector<SignalKind> all_signal_kinds() {
  std::vector<SignalKind> kinds;
  for (const KindName& k : kNames) kinds.push_back(k.kind);
  return kinds;
}

MultiDecayTerms multi_decay_terms(const SignalParams& params) {
  MultiDecayTerms t;
  const std::size_t m = params.n_terms;
  t.amplitudes = uniform_draws(params.amplitude_seed.value_or(kDefaultAmplitudeSeed), m,
                               0.0, 1.0);
  double norm = 0.0;
  for (double a : t.amplitudes) norm += a * a;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& a : t.amplitudes) a /= norm;
  }
  t.frequencies = uniform_draws(params.frequency_seed.value_or(kDefaultFrequencySeed),
                                m, -20.0, 20.0);
  t.decay_rates =
      uniform_draws(params.decay_seed.value_or(kDefaultDecaySeed), m, -2.0, 0.0);
  return t;
}

SignalVector gen_signal(SignalKind kind, std::size_t n, const SignalParams& params) {
  if (n == 0 || n > 40) throw ShapeError("signal size n must lie in [1, 40]");
  const std::size_t len = std::size_t{1} << n;
  const double dt = 5.0 / static_cast<double>(len);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<Complex> x(len);

  switch (kind) {
    case SignalKind::kSinusoid:
      for (std::size_t j = 0; j < len; ++j) {
        x[j] = std::sin(kTwoPi * static_cast<double>(j) * dt);
      }
      break;
    case SignalKind::kGaussianNoise: {
      Rng rng(params.seed.value_or(kDefaultNoiseSeed));
      for (Complex& v : x) v = rng.normal();
      break;
    }
    case SignalKind::kMultiDecay: {
      const MultiDecayTerms t = multi_decay_terms(params);
      for (std::size_t j = 0; j < len; ++j) {
        const double tj = dt * static_cast<double>(j);
        double sum = 0.0;
        for (std::size_t k = 0; k < t.amplitudes.size(); ++k) {
          sum += t.amplitudes[k] * std::sin(t.frequencies[k] * tj) *
                 std::exp(t.decay_rates[k] * tj);
        }
        x[j] = sum;
      }
      break;
    }
    case SignalKind::kCusp:
      for (std::size_t j = 0; j < len; ++j) {
        x[j] = std::pow(std::abs(std::cos(kTwoPi * static_cast<double>(j) * dt)), 0.8);
      }
      break;
    case SignalKind::kDampedCosine: {
      // a^j = exp(j log a); evaluated directly rather than by repeated
      // multiplication so the error does not grow with j.
      const Complex log_a = std::log(params.damping);
      for (std::size_t j = 0; j < len; ++j) {
        const double jd = static_cast<double>(j);
        x[j] = std::exp(jd * log_a) * std::cos(params.omega0 * jd);
      }
      break;
    }
    case SignalKind::kDelta:
      if (params.delta_index >= len) {
        throw RangeError("delta index " + std::to_string(params.delta_index) +
                         " outside a signal of length " + std::to_string(len));
      }
      x[params.delta_index] = 1.0;
      break;
  }
  return SignalVector(std::move(x));
}

}  // namespace zmpo
