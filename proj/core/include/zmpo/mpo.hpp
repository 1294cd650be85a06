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

// Matrix product operators on qubit chains.
//
// Site tensors have shape (left bond, out, in, right bond) with out = in = 2.
// An operator carries an explicit positive real scale so that long products
// of 1/sqrt(2) factors never underflow; every dense view and every state the
// operator produces includes it.
//
// Each site has an input label and an output label. They differ where the
// operator moves information between bit weights (the damping and Fourier
// stages leave their results bit-reversed, and the reversal is recorded here
// as a relabelling rather than built as swap tensors).

#ifndef ZMPO_MPO_HPP_
#define ZMPO_MPO_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "zmpo/mps.hpp"
#include "zmpo/tensor.hpp"

namespace zmpo {

enum class OperatorKind { kGeneric, kDamping, kFourier, kZTransform };

std::string_view to_string(OperatorKind kind);

struct OperatorMetadata {
  OperatorKind kind = OperatorKind::kGeneric;
  double omega_r = 0.0;
  double omega_i = 0.0;
  double tau = 0.0;
};

struct BondSpectrumReport {
  // spectra[b] at bond b, descending, strictly positive, scaled to unit
  // Euclidean norm.
  std::vector<std::vector<double>> spectra;
  std::vector<std::size_t> bond_dimensions;
  std::size_t max_bond_dimension = 1;
};

class MatrixProductOperator {
 public:
  MatrixProductOperator(std::vector<DenseTensor> sites,
                        std::vector<SiteLabel> input_labels,
                        std::vector<SiteLabel> output_labels,
                        OperatorMetadata metadata = {}, double scale = 1.0);

  static MatrixProductOperator identity(std::vector<SiteLabel> labels);

  std::size_t size() const { return sites_.size(); }
  const DenseTensor& site(std::size_t i) const { return sites_.at(i); }
  const std::vector<DenseTensor>& sites() const { return sites_; }
  const std::vector<SiteLabel>& input_labels() const { return input_labels_; }
  const std::vector<SiteLabel>& output_labels() const { return output_labels_; }
  const OperatorMetadata& metadata() const { return metadata_; }
  void set_metadata(const OperatorMetadata& m) { metadata_ = m; }
  double scale() const { return scale_; }

  std::vector<std::size_t> bond_dimensions() const;
  std::size_t max_bond_dimension() const;

  // Output label for a site whose incoming state carries `in`. Sites the
  // operator does not relabel pass any label through; otherwise `in` must
  // equal the site's input label. Throws LayoutError on a mismatch.
  SiteLabel map_label(std::size_t site, const SiteLabel& in) const;

  // Dense 2^L x 2^L matrix (rows: output bits, columns: input bits, site 0
  // most significant), scale included. Throws ShapeError above max_sites.
  Matrix to_dense(std::size_t max_sites = 12) const;

 private:
  std::vector<DenseTensor> sites_;
  std::vector<SiteLabel> input_labels_;
  std::vector<SiteLabel> output_labels_;
  OperatorMetadata metadata_;
  double scale_ = 1.0;
};

// b * a (a acts first), contracted site by site, brought to canonical form by
// a right-to-left QR sweep and compressed by a left-to-right truncated SVD
// sweep with cutoff tau. Throws LayoutError unless the chains line up.
MatrixProductOperator zip_merge(const MatrixProductOperator& a,
                                const MatrixProductOperator& b, double tau);

// op * state. State and operator are brought to right-canonical form and
// contracted in one left-to-right zip-up pass (cutoff tau / 10), then
// recompressed right to left with cutoff tau. The result has its centre at
// site 0; per-bond discarded weights of the final sweep go to `discarded`.
MatrixProductState apply_mpo(const MatrixProductOperator& op,
                             const MatrixProductState& state, double tau,
                             std::vector<double>* discarded = nullptr);

BondSpectrumReport bond_spectrum(const MatrixProductOperator& op);

}  // namespace zmpo

#endif  // ZMPO_MPO_HPP_
