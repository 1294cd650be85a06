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

#include "zmpo/mps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "chain.hpp"
#include "zmpo/error.hpp"
#include "zmpo/linalg.hpp"

namespace zmpo {
namespace {

// Columns of the (left x 2*right) view that belong to physical index sigma.
auto slice(const DenseTensor& a, std::uint8_t sigma) {
  const auto r = static_cast<Eigen::Index>(a.extent(2));
  return a.as_matrix(1).middleCols(sigma * r, r);
}

void check_bits(const MatrixProductState& m, std::span<const std::uint8_t> bits) {
  if (bits.size() != m.size()) {
    throw ShapeError("bit string of length " + std::to_string(bits.size()) +
                     " for a state on " + std::to_string(m.size()) + " sites");
  }
  for (std::uint8_t b : bits) {
    if (b > 1) throw ShapeError("bit values must be 0 or 1");
  }
}

}  // namespace

BitString bits_for(std::span<const SiteLabel> labels, std::uint64_t first,
                   std::uint64_t second) {
  BitString bits(labels.size());
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const std::uint64_t v = labels[s].reg == Register::kFirst ? first : second;
    bits[s] = static_cast<std::uint8_t>((v >> labels[s].weight) & 1u);
  }
  return bits;
}

std::vector<SiteLabel> signal_labels(std::size_t n) {
  std::vector<SiteLabel> labels;
  for (std::size_t t = 0; t < n; ++t) labels.push_back({Register::kFirst, n - 1 - t});
  return labels;
}

std::vector<SiteLabel> paired_labels(std::size_t n) {
  std::vector<SiteLabel> labels;
  for (std::size_t t = 0; t < n; ++t) {
    labels.push_back({Register::kFirst, n - 1 - t});
    labels.push_back({Register::kSecond, n - 1 - t});
  }
  return labels;
}

SignalVector::SignalVector(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  const std::size_t len = samples_.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw ShapeError("signal length " + std::to_string(len) +
                     " is not a power of two >= 2");
  }
  n_ = static_cast<std::size_t>(std::countr_zero(len));
  for (const Complex& c : samples_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ParameterError("signal contains a non-finite sample");
    }
  }
}

double SignalVector::l1_norm() const {
  double sum = 0.0;
  for (const Complex& c : samples_) sum += std::abs(c);
  return sum;
}

MatrixProductState::MatrixProductState(std::vector<DenseTensor> sites,
                                       std::vector<SiteLabel> labels,
                                       std::optional<std::size_t> center)
    : sites_(std::move(sites)), labels_(std::move(labels)), center_(center) {
  chain::check_bonds(sites_);
  for (const DenseTensor& t : sites_) {
    if (t.rank() != 3 || t.extent(1) != 2) {
      throw ShapeError("MPS sites must have shape (left, 2, right)");
    }
  }
  if (labels_.size() != sites_.size()) {
    throw ShapeError("one label per site is required");
  }
  if (center_ && *center_ >= sites_.size()) {
    throw RangeError("orthogonality centre outside the chain");
  }
}

std::vector<std::size_t> MatrixProductState::bond_dimensions() const {
  return chain::bond_dimensions(sites_);
}

std::size_t MatrixProductState::max_bond_dimension() const {
  std::size_t m = 1;
  for (std::size_t b : bond_dimensions()) m = std::max(m, b);
  return m;
}

double MatrixProductState::norm() const {
  Matrix env = Matrix::Ones(1, 1);
  for (const DenseTensor& a : sites_) {
    Matrix next = Matrix::Zero(static_cast<Eigen::Index>(a.extent(2)),
                               static_cast<Eigen::Index>(a.extent(2)));
    for (std::uint8_t s = 0; s < 2; ++s) {
      next.noalias() += slice(a, s).adjoint() * env * slice(a, s);
    }
    env = std::move(next);
  }
  return std::sqrt(std::max(0.0, env(0, 0).real()));
}

std::vector<Complex> MatrixProductState::to_dense(std::size_t max_sites) const {
  if (sites_.size() > max_sites) {
    throw ShapeError("refusing to densify a state on " +
                     std::to_string(sites_.size()) + " sites");
  }
  Matrix v = Matrix::Ones(1, 1);
  for (const DenseTensor& a : sites_) {
    Matrix next = v * a.as_matrix(1);  // (P, 2 * r) == (2P, r) row-major
    const Eigen::Index r = static_cast<Eigen::Index>(a.extent(2));
    v = Eigen::Map<Matrix>(next.data(), next.size() / r, r);
  }
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

void MatrixProductState::scale(Complex factor) {
  sites_[center_.value_or(0)] *= factor;
}

void MatrixProductState::relabel(std::vector<SiteLabel> labels) {
  if (labels.size() != sites_.size()) {
    throw ShapeError("one label per site is required");
  }
  labels_ = std::move(labels);
}

MatrixProductState encode_signal_mps(const SignalVector& x, double tau) {
  const std::size_t n = x.n();
  std::vector<DenseTensor> sites;
  sites.reserve(n);
  Matrix rest = Eigen::Map<const Matrix>(x.samples().data(), 1,
                                         static_cast<Eigen::Index>(x.size()));
  std::size_t left = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const Eigen::Index rows = static_cast<Eigen::Index>(left * 2);
    Matrix m = Eigen::Map<Matrix>(rest.data(), rows, rest.size() / rows);
    MatrixSvd f = svd(m);
    const std::size_t keep = truncation_rank(f.s, tau);
    const auto r = static_cast<Eigen::Index>(keep);
    sites.push_back(DenseTensor::from_matrix(f.u.leftCols(r), {left, 2, keep}));
    rest = f.vh.topRows(r);
    for (Eigen::Index i = 0; i < r; ++i) rest.row(i) *= f.s[static_cast<std::size_t>(i)];
    left = keep;
  }
  sites.push_back(DenseTensor::from_matrix(rest, {left, 2, 1}));
  return MatrixProductState(std::move(sites), signal_labels(n), n - 1);
}

MatrixProductState lift_to_paired(const MatrixProductState& m, double tau) {
  const std::size_t n = m.size();
  if (m.labels() != signal_labels(n)) {
    throw LayoutError("lifting expects a single-register signal state");
  }
  std::vector<DenseTensor> sites;
  sites.reserve(2 * n);
  for (const DenseTensor& a : m.sites()) {
    const std::size_t dl = a.extent(0);
    const std::size_t dr = a.extent(2);
    // T1[a, i, (b, c)] = A[a, i, b] delta(c, i)
    DenseTensor t1({dl, 2, dr * 2});
    for (std::size_t l = 0; l < dl; ++l) {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t b = 0; b < dr; ++b) {
          t1.at({l, i, b * 2 + i}) = a.at({l, i, b});
        }
      }
    }
    // T2[(b, c), i', b] = delta(i', c)
    DenseTensor t2({dr * 2, 2, dr});
    for (std::size_t b = 0; b < dr; ++b) {
      for (std::size_t c = 0; c < 2; ++c) t2.at({b * 2 + c, c, b}) = 1.0;
    }
    sites.push_back(std::move(t1));
    sites.push_back(std::move(t2));
  }
  chain::compress(sites, tau);
  const std::size_t last = sites.size() - 1;
  return MatrixProductState(std::move(sites), paired_labels(n), last);
}

MatrixProductState canonicalize(const MatrixProductState& m, std::size_t center) {
  if (center >= m.size()) {
    throw RangeError("centre " + std::to_string(center) + " outside a state of " +
                     std::to_string(m.size()) + " sites");
  }
  std::vector<DenseTensor> sites = m.sites();
  chain::canonicalize(sites, center);
  return MatrixProductState(std::move(sites), m.labels(), center);
}

MatrixProductState compress(const MatrixProductState& m, double tau,
                            std::vector<double>* discarded) {
  std::vector<DenseTensor> sites = m.sites();
  chain::SweepReport report = chain::compress(sites, tau);
  if (discarded) *discarded = std::move(report.discarded);
  const std::size_t last = sites.size() - 1;
  return MatrixProductState(std::move(sites), m.labels(), last);
}

Complex evaluate_amplitude(const MatrixProductState& m,
                           std::span<const std::uint8_t> bits) {
  check_bits(m, bits);
  Eigen::Matrix<Complex, 1, Eigen::Dynamic> v(1);
  v(0) = 1.0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    v = v * slice(m.site(s), bits[s]);
  }
  return v(0);
}

ConfigurationSampler::ConfigurationSampler(const MatrixProductState& m)
    : state_(m), right_env_(m.size() + 1) {
  right_env_[m.size()] = Matrix::Ones(1, 1);
  for (std::size_t s = m.size(); s-- > 0;) {
    const DenseTensor& a = m.site(s);
    Matrix env = Matrix::Zero(static_cast<Eigen::Index>(a.extent(0)),
                              static_cast<Eigen::Index>(a.extent(0)));
    for (std::uint8_t sigma = 0; sigma < 2; ++sigma) {
      env.noalias() += slice(a, sigma) * right_env_[s + 1] * slice(a, sigma).adjoint();
    }
    right_env_[s] = std::move(env);
  }
  norm_squared_ = right_env_[0](0, 0).real();
  if (!(norm_squared_ > 0.0)) {
    throw DegenerateStateError("cannot sample from a zero-norm state");
  }
}

BitString ConfigurationSampler::sample(Rng& rng) const {
  BitString bits(state_.size());
  Eigen::Matrix<Complex, 1, Eigen::Dynamic> v(1);
  v(0) = 1.0;
  for (std::size_t s = 0; s < state_.size(); ++s) {
    const DenseTensor& a = state_.site(s);
    Eigen::Matrix<Complex, 1, Eigen::Dynamic> w[2];
    double p[2];
    for (std::uint8_t sigma = 0; sigma < 2; ++sigma) {
      w[sigma] = v * slice(a, sigma);
      p[sigma] = std::max(
          0.0, (w[sigma] * right_env_[s + 1] * w[sigma].adjoint())(0, 0).real());
    }
    const double total = p[0] + p[1];
    if (!(total > 0.0)) {
      throw DegenerateStateError("sampling reached a zero-probability branch");
    }
    const std::uint8_t pick = rng.uniform() * total < p[0] ? 0 : 1;
    bits[s] = pick;
    v = w[pick] / std::sqrt(p[pick]);
  }
  return bits;
}

double ConfigurationSampler::probability(std::span<const std::uint8_t> bits) const {
  return std::norm(evaluate_amplitude(state_, bits)) / norm_squared_;
}

BitString sample_configuration(const MatrixProductState& m, Rng& rng) {
  return ConfigurationSampler(m).sample(rng);
}

}  // namespace zmpo
