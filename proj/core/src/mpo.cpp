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


#include "zmpo/mpo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "chain.hpp"
#include "zmpo/error.hpp"
#include "zmpo/linalg.hpp"

namespace zmpo {
namespace {

void check_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw LayoutError("chains of " + std::to_string(a) + " and " +
                      std::to_string(b) + " sites cannot be combined");
  }
}

std::vector<SiteLabel> mapped_labels(const MatrixProductOperator& op,
                                     const std::vector<SiteLabel>& in) {
  check_same_length(op.size(), in.size());
  std::vector<SiteLabel> out;
  out.reserve(in.size());
  for (std::size_t s = 0; s < in.size(); ++s) out.push_back(op.map_label(s, in[s]));
  return out;
}

// P[(la, lb), o, i, (ra, rb)] = sum_m B[lb, o, m, rb] A[la, m, i, ra].
DenseTensor site_product(const DenseTensor& a, const DenseTensor& b) {
  // tensordot -> [la, i, ra, lb, o, rb]
  DenseTensor t = tensordot(a, {1}, b, {2});
  t = t.permuted({0, 3, 4, 1, 2, 5});
  return std::move(t).reshaped({a.extent(0) * b.extent(0), 2, 2,
                                a.extent(3) * b.extent(3)});
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kDamping:
      return "DT";
    case OperatorKind::kFourier:
      return "QFT";
    case OperatorKind::kZTransform:
      return "ZT";
    case OperatorKind::kGeneric:
      break;
  }
  return "generic";
}

MatrixProductOperator::MatrixProductOperator(std::vector<DenseTensor> sites,
                                             std::vector<SiteLabel> input_labels,
                                             std::vector<SiteLabel> output_labels,
                                             OperatorMetadata metadata, double scale)
    : sites_(std::move(sites)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)),
      metadata_(metadata),
      scale_(scale) {
  chain::check_bonds(sites_);
  for (const DenseTensor& w : sites_) {
    if (w.rank() != 4 || w.extent(1) != 2 || w.extent(2) != 2) {
      throw ShapeError("MPO sites must have shape (left, 2, 2, right)");
    }
  }
  if (input_labels_.size() != sites_.size() || output_labels_.size() != sites_.size()) {
    throw ShapeError("one input and one output label per site is required");
  }
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    if (input_labels_[s].reg != output_labels_[s].reg) {
      throw LayoutError("an operator site cannot change register");
    }
  }
  if (!std::isfinite(scale_) || scale_ < 0.0) {
    throw ParameterError("operator scale must be finite and non-negative");
  }
}

MatrixProductOperator MatrixProductOperator::identity(std::vector<SiteLabel> labels) {
  DenseTensor eye({1, 2, 2, 1});
  eye.at({0, 0, 0, 0}) = 1.0;
  eye.at({0, 1, 1, 0}) = 1.0;
  std::vector<DenseTensor> sites(labels.size(), eye);
  std::vector<SiteLabel> out = labels;
  return MatrixProductOperator(std::move(sites), std::move(labels), std::move(out));
}

std::vector<std::size_t> MatrixProductOperator::bond_dimensions() const {
  return chain::bond_dimensions(sites_);
}

std::size_t MatrixProductOperator::max_bond_dimension() const {
  std::size_t m = 1;
  for (std::size_t b : bond_dimensions()) m = std::max(m, b);
  return m;
}

SiteLabel MatrixProductOperator::map_label(std::size_t site, const SiteLabel& in) const {
  if (in == input_labels_.at(site)) return output_labels_[site];
  if (input_labels_[site] == output_labels_[site] && in.reg == input_labels_[site].reg) {
    return in;
  }
  throw LayoutError("site " + std::to_string(site) +
                    " label does not match the operator's input layout");
}

Matrix MatrixProductOperator::to_dense(std::size_t max_sites) const {
  if (sites_.size() > max_sites) {
    throw ShapeError("refusing to densify an operator on " +
                     std::to_string(sites_.size()) + " sites");
  }
  // acc[O, I, r]
  DenseTensor acc({1, 1, 1}, {Complex(scale_)});
  for (const DenseTensor& w : sites_) {
    const std::size_t rows = acc.extent(0);
    const std::size_t cols = acc.extent(1);
    DenseTensor t = tensordot(acc, {2}, w, {0});  // [O, I, o, i, r]
    t = t.permuted({0, 2, 1, 3, 4});
    acc = std::move(t).reshaped({rows * 2, cols * 2, w.extent(3)});
  }
  return Matrix(acc.as_matrix(1));
}

MatrixProductOperator zip_merge(const MatrixProductOperator& a,
                                const MatrixProductOperator& b, double tau) {
  check_same_length(a.size(), b.size());
  std::vector<SiteLabel> out = mapped_labels(b, a.output_labels());
  std::vector<DenseTensor> sites;
  sites.reserve(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    sites.push_back(site_product(a.site(s), b.site(s)));
  }
  chain::compress(sites, tau);
  double scale = a.scale() * b.scale();
  const double norm = sites.back().frobenius_norm();
  if (norm > 0.0) {
    sites.back() *= 1.0 / norm;
    scale *= norm;
  }
  OperatorMetadata meta = a.metadata();
  meta.kind = OperatorKind::kGeneric;
  meta.tau = tau;
  return MatrixProductOperator(std::move(sites), a.input_labels(), std::move(out),
                               meta, scale);
}

MatrixProductState apply_mpo(const MatrixProductOperator& op,
                             const MatrixProductState& state, double tau,
                             std::vector<double>* discarded) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw ParameterError("cutoff must lie in [0, 1)");
  }
  std::vector<SiteLabel> labels = mapped_labels(op, state.labels());
  std::vector<DenseTensor> in = state.sites();
  if (state.orthogonality_center() != 0) chain::canonicalize(in, 0);
  // The zip-up truncates on local spectra, which only track the global
  // weight when everything to the right is isometric. A left-canonical
  // operator (the zip_merge output) makes the local spectra useless and the
  // carried bond grows by an order of magnitude.
  std::vector<DenseTensor> ops = op.sites();
  chain::canonicalize(ops, 0);

  const double zip_tau = tau / 10.0;
  const std::size_t len = in.size();
  std::vector<DenseTensor> out;
  out.reserve(len);
  // carry[alpha, w, a]: new left bond, operator bond, state bond.
  DenseTensor carry({1, 1, 1}, {Complex(1.0)});
  for (std::size_t s = 0; s < len; ++s) {
    const DenseTensor& w = ops[s];
    DenseTensor y = tensordot(carry, {2}, in[s], {0});  // [alpha, w, i, a']
    DenseTensor z = tensordot(y, {1, 2}, w, {0, 2});    // [alpha, a', o, w']
    z = z.permuted({0, 2, 1, 3});                       // [alpha, o, a', w']
    const std::size_t alpha = z.extent(0);
    if (s + 1 == len) {
      out.push_back(std::move(z).reshaped({alpha, 2, 1}));
      break;
    }
    const std::size_t a_next = z.extent(2);
    const std::size_t w_next = z.extent(3);
    MatrixSvd f = svd(Matrix(z.as_matrix(2)));
    const std::size_t keep = truncation_rank(f.s, zip_tau);
    const auto r = static_cast<Eigen::Index>(keep);
    out.push_back(DenseTensor::from_matrix(f.u.leftCols(r), {alpha, 2, keep}));
    Matrix sv = f.vh.topRows(r);
    for (Eigen::Index i = 0; i < r; ++i) sv.row(i) *= f.s[static_cast<std::size_t>(i)];
    carry = DenseTensor::from_matrix(sv, {keep, a_next, w_next}).permuted({0, 2, 1});
  }
  chain::SweepReport report = chain::truncate_right_to_left(out, tau);
  if (discarded) *discarded = std::move(report.discarded);
  out.front() *= op.scale();
  return MatrixProductState(std::move(out), std::move(labels), 0);
}

BondSpectrumReport bond_spectrum(const MatrixProductOperator& op) {
  std::vector<DenseTensor> sites = op.sites();
  chain::canonicalize(sites, 0);
  chain::SweepReport sweep = chain::truncate_left_to_right(sites, 0.0);
  BondSpectrumReport report;
  report.bond_dimensions = op.bond_dimensions();
  report.max_bond_dimension = op.max_bond_dimension();
  for (std::vector<double>& s : sweep.spectra) {
    std::vector<double> kept;
    double sum = 0.0;
    for (double v : s) {
      if (v > 0.0) {
        kept.push_back(v);
        sum += v * v;
      }
    }
    if (kept.empty()) kept.push_back(0.0);
    if (sum > 0.0) {
      const double inv = 1.0 / std::sqrt(sum);
      for (double& v : kept) v *= inv;
    }
    report.spectra.push_back(std::move(kept));
  }
  return report;
}

}  // namespace zmpo
