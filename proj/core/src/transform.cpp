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


#include "zmpo/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "zmpo/error.hpp"
#include "zmpo/mpo_builder.hpp"

namespace zmpo {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_operator(const MatrixProductOperator& zt, const TransformParams& p) {
  const OperatorMetadata& m = zt.metadata();
  if (m.kind != OperatorKind::kZTransform || zt.size() != 2 * p.n ||
      m.omega_r != p.omega_r || m.omega_i != p.omega_i) {
    throw LayoutError("prebuilt operator does not match the requested transform");
  }
}

TransformResult run(const SignalVector& x, const TransformParams& p,
                    const MatrixProductOperator* prebuilt) {
  p.validate();
  if (x.n() != p.n) {
    throw ShapeError("signal of length " + std::to_string(x.size()) +
                     " does not match n = " + std::to_string(p.n));
  }
  TransformTimings timings;

  auto t0 = Clock::now();
  MatrixProductState encoded = encode_signal_mps(x, p.tau);
  timings.encode = seconds_since(t0);

  t0 = Clock::now();
  MatrixProductState paired = lift_to_paired(encoded, p.tau);
  timings.lift = seconds_since(t0);

  std::optional<MatrixProductOperator> built;
  t0 = Clock::now();
  if (prebuilt == nullptr) built = build_zt_mpo(p.n, p.omega_r, p.omega_i, p.tau);
  timings.build = seconds_since(t0);
  const MatrixProductOperator& zt = prebuilt ? *prebuilt : *built;

  t0 = Clock::now();
  MatrixProductState out = apply_mpo(zt, paired, p.tau);
  out.scale(static_cast<double>(p.grid_size()));
  timings.apply = seconds_since(t0);

  std::vector<std::size_t> output_bonds = out.bond_dimensions();
  return TransformResult{p,
                         std::move(out),
                         bond_spectrum(zt),
                         encoded.max_bond_dimension(),
                         paired.max_bond_dimension(),
                         std::move(output_bonds),
                         timings,
                         p.validated_domain()};
}

}  // namespace

std::size_t TransformResult::output_max_bond() const {
  std::size_t m = 1;
  for (std::size_t b : output_bonds) m = std::max(m, b);
  return m;
}

TransformResult transform(const SignalVector& x, const TransformParams& p) {
  return run(x, p, nullptr);
}

TransformResult transform(const SignalVector& x, const TransformParams& p,
                          const MatrixProductOperator& zt) {
  p.validate();
  check_operator(zt, p);
  return run(x, p, &zt);
}

Complex evaluate_chi(const MatrixProductState& output, std::uint64_t k, std::uint64_t l) {
  const std::uint64_t big_n = std::uint64_t{1} << (output.size() / 2);
  if (k >= big_n || l >= big_n) {
    throw RangeError("grid point outside [0, " + std::to_string(big_n) + ")^2");
  }
  return evaluate_amplitude(output, bits_for(output.labels(), k, l));
}

}  // namespace zmpo
