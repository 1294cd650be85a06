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


// JSON encodings shared by the commands and the HTTP API. Doubles are
// written in the shortest form that round-trips exactly (at most 17
// significant digits).

#ifndef ZMPO_TOOLS_JSON_UTIL_HPP_
#define ZMPO_TOOLS_JSON_UTIL_HPP_

#include <nlohmann/json.hpp>

#include "zmpo/oracle.hpp"
#include "zmpo/poles.hpp"
#include "zmpo/scan.hpp"
#include "zmpo/tensor.hpp"
#include "zmpo/transform.hpp"

namespace zmpo::tools {

using nlohmann::json;

inline json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline json params_json(const TransformParams& p) {
  return {{"n", p.n},
          {"N", p.grid_size()},
          {"omega_r", p.omega_r},
          {"omega_i", p.omega_i},
          {"tau", p.tau},
          {"validated_domain", p.validated_domain()}};
}

inline json window_json(const GridWindow& w) {
  return {{"k0", w.k0}, {"l0", w.l0}, {"stride", w.stride}, {"count", w.count}};
}

inline json bonds_json(const TransformResult& r) {
  return {{"input_max", r.input_max_bond},
          {"paired_max", r.paired_max_bond},
          {"operator_max", r.operator_report.max_bond_dimension},
          {"operator", r.operator_report.bond_dimensions},
          {"output_max", r.output_max_bond()},
          {"output", r.output_bonds}};
}

inline json timings_json(const TransformTimings& t) {
  return {{"encode", t.encode}, {"lift", t.lift},   {"build", t.build},
          {"apply", t.apply},   {"full", t.full()}, {"core", t.core()}};
}

inline json candidate_json(const PoleCandidate& c) {
  return {{"k", c.k},
          {"l", c.l},
          {"z", complex_json(c.z)},
          {"pole", complex_json(c.pole)},
          {"magnitude", c.magnitude},
          {"resolution", c.resolution},
          {"window", window_json(c.window)}};
}

inline json error_json(const ErrorReport& e) {
  return {{"delta_max", e.delta_max},
          {"delta_mean", e.delta_mean},
          {"sample_count", e.sample_count}};
}

}  // namespace zmpo::tools

#endif  // ZMPO_TOOLS_JSON_UTIL_HPP_
