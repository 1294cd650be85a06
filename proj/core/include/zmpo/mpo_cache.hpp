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

// On-disk container for built operators, so repeated runs skip construction.
//
// Little-endian layout:
//   char[4]  "ZMPO"
//   uint32   version (1)
//   uint32   kind (OperatorKind)
//   float64  omega_r, omega_i, tau, scale
//   uint64   site count L
//   L times:
//     uint8 reg, uint64 weight        input label
//     uint8 reg, uint64 weight        output label
//     uint64[4]                       shape (left, out, in, right)
//     float64 re, im per element      row-major data

#ifndef ZMPO_MPO_CACHE_HPP_
#define ZMPO_MPO_CACHE_HPP_

#include <cstddef>
#include <filesystem>

#include "zmpo/mpo.hpp"

namespace zmpo {

void save_mpo(const std::filesystem::path& path, const MatrixProductOperator& op);

// Throws FormatError on a malformed or truncated file.
MatrixProductOperator load_mpo(const std::filesystem::path& path);

// File name under `dir` for the ZT operator with these parameters. Doubles
// enter the name by their bit patterns, so distinct inputs never collide.
std::filesystem::path zt_cache_path(const std::filesystem::path& dir, std::size_t n,
                                    double omega_r, double omega_i, double tau);

// Loads the cached ZT operator if present, otherwise builds and stores it.
// `hit` reports which happened.
MatrixProductOperator load_or_build_zt(const std::filesystem::path& dir, std::size_t n,
                                       double omega_r, double omega_i, double tau,
                                       bool* hit = nullptr);

}  // namespace zmpo

#endif  // ZMPO_MPO_CACHE_HPP_
