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

// End-to-end transform: encode, lift, build (or reuse) the ZT operator,
// apply it and rescale so amplitudes read as chi_{k,l} directly.

#ifndef ZMPO_TRANSFORM_HPP_
#define ZMPO_TRANSFORM_HPP_

#include <cstddef>
#include <vector>

#include "zmpo/mpo.hpp"
#include "zmpo/mps.hpp"
#include "zmpo/oracle.hpp"

namespace zmpo {

// Wall-clock seconds per stage.
struct TransformTimings {
  double encode = 0.0;
  double lift = 0.0;
  double build = 0.0;
  double apply = 0.0;

  // Everything from raw samples to the output state.
  double full() const { return encode + lift + build + apply; }
  // Operator construction and application only; the input state is given.
  double core() const { return build + apply; }
};

struct TransformResult {
  TransformParams params;
  // 2n sites; register 1 carries k, register 2 carries l, both through the
  // site labels. Amplitudes equal chi_{k,l} (the factor N is applied).
  MatrixProductState output;
  // Spectra of the operator that was applied.
  BondSpectrumReport operator_report;
  std::size_t input_max_bond = 1;
  std::size_t paired_max_bond = 1;
  std::vector<std::size_t> output_bonds;
  TransformTimings timings;
  bool validated = true;

  std::size_t output_max_bond() const;
};

// Builds the ZT operator from p. Throws ParameterError on invalid p and
// ShapeError when x has the wrong length.
TransformResult transform(const SignalVector& x, const TransformParams& p);

// Reuses a prebuilt ZT operator (timings.build is then zero). Throws
// LayoutError if the operator was built for a different grid.
TransformResult transform(const SignalVector& x, const TransformParams& p,
                          const MatrixProductOperator& zt);

// chi at one grid point of a transform output. Throws RangeError outside
// [0, N)^2.
Complex evaluate_chi(const MatrixProductState& output, std::uint64_t k, std::uint64_t l);

}  // namespace zmpo

#endif  // ZMPO_TRANSFORM_HPP_
