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

// Matrix product states over qubit sites.
//
// Site tensors have shape (left bond, 2, right bond). Sites are ordered left
// to right; in dense vectors produced by to_dense() site 0 is the most
// significant bit.
//
// Signals of length N = 2^n are encoded most-significant-bit first:
// j = j_1 2^{n-1} + ... + j_n, and site t carries j_{t+1}. The paired
// (two-register) layout interleaves the registers as (j_1, j'_1, j_2, j'_2,
// ...), which keeps the copy constraint j_t = j'_t local.

#ifndef ZMPO_MPS_HPP_
#define ZMPO_MPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zmpo/random.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

enum class Register : std::uint8_t { kFirst = 1, kSecond = 2 };

// Which register a site belongs to and which power of two its bit carries.
// A configuration (a, b) of the two registers puts bit
// ((reg == kFirst ? a : b) >> weight) & 1 on the site.
struct SiteLabel {
  Register reg = Register::kFirst;
  std::size_t weight = 0;

  friend bool operator==(const SiteLabel&, const SiteLabel&) = default;
};

using BitString = std::vector<std::uint8_t>;

// Bits per site for register values (first, second) under `labels`.
BitString bits_for(std::span<const SiteLabel> labels, std::uint64_t first,
                   std::uint64_t second = 0);

// Labels of an n-site signal register, most significant bit first.
std::vector<SiteLabel> signal_labels(std::size_t n);
// Labels of the 2n-site interleaved paired layout (j_1, j'_1, ...).
std::vector<SiteLabel> paired_labels(std::size_t n);

class SignalVector {
 public:
  // Throws ShapeError unless the length is 2^n with n >= 1, and
  // ParameterError on non-finite samples.
  explicit SignalVector(std::vector<Complex> samples);

  std::size_t n() const { return n_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const Complex> samples() const { return samples_; }
  const Complex& operator[](std::size_t j) const { return samples_[j]; }
  double l1_norm() const;

 private:
  std::vector<Complex> samples_;
  std::size_t n_ = 0;
};

class MatrixProductState {
 public:
  MatrixProductState(std::vector<DenseTensor> sites, std::vector<SiteLabel> labels,
                     std::optional<std::size_t> center = std::nullopt);

  std::size_t size() const { return sites_.size(); }
  const DenseTensor& site(std::size_t i) const { return sites_.at(i); }
  const std::vector<DenseTensor>& sites() const { return sites_; }
  const std::vector<SiteLabel>& labels() const { return labels_; }
  std::optional<std::size_t> orthogonality_center() const { return center_; }

  std::vector<std::size_t> bond_dimensions() const;
  std::size_t max_bond_dimension() const;

  double norm() const;

  // Dense amplitudes, site 0 most significant. Throws ShapeError above
  // `max_sites` sites.
  std::vector<Complex> to_dense(std::size_t max_sites = 26) const;

  // Multiplies every amplitude by `factor`; absorbed into the centre site
  // (or site 0 when no centre is set) so gauge invariants are kept.
  void scale(Complex factor);

  // Replaces the labels, e.g. after an operator relabels outputs.
  void relabel(std::vector<SiteLabel> labels);

 private:
  std::vector<DenseTensor> sites_;
  std::vector<SiteLabel> labels_;
  std::optional<std::size_t> center_;
};

// TT-SVD of the signal with truncation cutoff tau. The resulting state is
// left-canonical with its centre on the last site.
MatrixProductState encode_signal_mps(const SignalVector& x, double tau);

// Lifts an n-site signal state to the 2n-site paired layout
// sum_j x_j |j>|j>, interleaved, then recompresses with tau.
MatrixProductState lift_to_paired(const MatrixProductState& m, double tau);

MatrixProductState canonicalize(const MatrixProductState& m, std::size_t center);

// Canonical SVD compression with cutoff tau. Per-bond discarded weight is
// reported through `discarded` when non-null.
MatrixProductState compress(const MatrixProductState& m, double tau,
                            std::vector<double>* discarded = nullptr);

// <bits|m>, contracted left to right.
Complex evaluate_amplitude(const MatrixProductState& m, std::span<const std::uint8_t> bits);

// Autoregressive sampler: draws configurations with probability
// |amplitude|^2 / norm^2 one site at a time. Construction precomputes right
// environments; sampling itself is const and thread-safe given distinct
// generators.
class ConfigurationSampler {
 public:
  explicit ConfigurationSampler(const MatrixProductState& m);

  BitString sample(Rng& rng) const;
  // Probability of a full configuration under the sampler's distribution.
  double probability(std::span<const std::uint8_t> bits) const;

 private:
  MatrixProductState state_;
  // right_env_[s] contracts sites s..L-1 with their conjugates; shape D_s x D_s.
  std::vector<Matrix> right_env_;
  double norm_squared_ = 0.0;
};

BitString sample_configuration(const MatrixProductState& m, Rng& rng);

}  // namespace zmpo

#endif  // ZMPO_MPS_HPP_
