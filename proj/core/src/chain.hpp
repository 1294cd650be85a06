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

// Gauge sweeps over an open chain of tensors whose first axis is the left
// bond and whose last axis is the right bond. MPS sites (rank 3) and MPO
// sites (rank 4) share these routines; the middle axes are "physical".

#ifndef ZMPO_SRC_CHAIN_HPP_
#define ZMPO_SRC_CHAIN_HPP_

#include <cstddef>
#include <vector>

#include "zmpo/tensor.hpp"

namespace zmpo::chain {

struct SweepReport {
  // spectra[b] is the full (pre-truncation) spectrum at bond b, descending.
  std::vector<std::vector<double>> spectra;
  // discarded[b] is the discarded-weight ratio at bond b.
  std::vector<double> discarded;
};

// QR at `site`, absorbing R into site + 1.
void left_orthonormalize(std::vector<DenseTensor>& sites, std::size_t site);
// LQ at `site`, absorbing L into site - 1.
void right_orthonormalize(std::vector<DenseTensor>& sites, std::size_t site);

// Left-isometric tensors before `center`, right-isometric after it.
void canonicalize(std::vector<DenseTensor>& sites, std::size_t center);

// Expects the centre at site 0; leaves it at the last site.
SweepReport truncate_left_to_right(std::vector<DenseTensor>& sites, double tau);
// Expects the centre at the last site; leaves it at site 0.
SweepReport truncate_right_to_left(std::vector<DenseTensor>& sites, double tau);

// Canonicalize to site 0 then truncate left to right.
SweepReport compress(std::vector<DenseTensor>& sites, double tau);

// Bond extents between neighbouring sites, length sites.size() - 1.
std::vector<std::size_t> bond_dimensions(const std::vector<DenseTensor>& sites);

void check_bonds(const std::vector<DenseTensor>& sites);

// Multiplies `site`'s left bond by m (m is left_new x left_old).
DenseTensor absorb_left(const Matrix& m, const DenseTensor& site);
// Multiplies `site`'s right bond by m (m is right_old x right_new).
DenseTensor absorb_right(const DenseTensor& site, const Matrix& m);

}  // namespace zmpo::chain

#endif  // ZMPO_SRC_CHAIN_HPP_
