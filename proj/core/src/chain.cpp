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

#include "chain.hpp"

#include <string>
#include <utility>

#include "zmpo/error.hpp"
#include "zmpo/linalg.hpp"

namespace zmpo::chain {
namespace {

Shape with_left(const Shape& s, std::size_t left) {
  Shape out = s;
  out.front() = left;
  return out;
}

Shape with_right(const Shape& s, std::size_t right) {
  Shape out = s;
  out.back() = right;
  return out;
}

}  // namespace

DenseTensor absorb_left(const Matrix& m, const DenseTensor& site) {
  Matrix prod = m * site.as_matrix(1);
  return DenseTensor::from_matrix(prod, with_left(site.shape(), m.rows()));
}

DenseTensor absorb_right(const DenseTensor& site, const Matrix& m) {
  Matrix prod = site.as_matrix(site.rank() - 1) * m;
  return DenseTensor::from_matrix(prod, with_right(site.shape(), m.cols()));
}

void left_orthonormalize(std::vector<DenseTensor>& sites, std::size_t site) {
  DenseTensor& a = sites[site];
  Matrix q, r;
  qr(Matrix(a.as_matrix(a.rank() - 1)), q, r);
  sites[site] = DenseTensor::from_matrix(q, with_right(a.shape(), q.cols()));
  sites[site + 1] = absorb_left(r, sites[site + 1]);
}

void right_orthonormalize(std::vector<DenseTensor>& sites, std::size_t site) {
  DenseTensor& a = sites[site];
  Matrix q, r;
  qr(Matrix(a.as_matrix(1).adjoint()), q, r);
  Matrix l = r.adjoint();
  Matrix qh = q.adjoint();
  sites[site] = DenseTensor::from_matrix(qh, with_left(a.shape(), qh.rows()));
  sites[site - 1] = absorb_right(sites[site - 1], l);
}

void canonicalize(std::vector<DenseTensor>& sites, std::size_t center) {
  if (center >= sites.size()) {
    throw RangeError("centre " + std::to_string(center) + " outside chain of " +
                     std::to_string(sites.size()) + " sites");
  }
  for (std::size_t s = 0; s < center; ++s) left_orthonormalize(sites, s);
  for (std::size_t s = sites.size() - 1; s > center; --s) {
    right_orthonormalize(sites, s);
  }
}

SweepReport truncate_left_to_right(std::vector<DenseTensor>& sites, double tau) {
  SweepReport report;
  if (sites.size() < 2) return report;
  for (std::size_t s = 0; s + 1 < sites.size(); ++s) {
    DenseTensor& a = sites[s];
    MatrixSvd f = svd(Matrix(a.as_matrix(a.rank() - 1)));
    double discarded = 0.0;
    const std::size_t keep = truncation_rank(f.s, tau, &discarded);
    const auto r = static_cast<Eigen::Index>(keep);
    Matrix sv = f.vh.topRows(r);
    for (Eigen::Index i = 0; i < r; ++i) sv.row(i) *= f.s[static_cast<std::size_t>(i)];
    sites[s] = DenseTensor::from_matrix(f.u.leftCols(r), with_right(a.shape(), keep));
    sites[s + 1] = absorb_left(sv, sites[s + 1]);
    report.spectra.push_back(std::move(f.s));
    report.discarded.push_back(discarded);
  }
  return report;
}

SweepReport truncate_right_to_left(std::vector<DenseTensor>& sites, double tau) {
  SweepReport report;
  if (sites.size() < 2) return report;
  report.spectra.resize(sites.size() - 1);
  report.discarded.resize(sites.size() - 1);
  for (std::size_t s = sites.size() - 1; s > 0; --s) {
    DenseTensor& a = sites[s];
    MatrixSvd f = svd(Matrix(a.as_matrix(1)));
    double discarded = 0.0;
    const std::size_t keep = truncation_rank(f.s, tau, &discarded);
    const auto r = static_cast<Eigen::Index>(keep);
    Matrix us = f.u.leftCols(r);
    for (Eigen::Index i = 0; i < r; ++i) us.col(i) *= f.s[static_cast<std::size_t>(i)];
    sites[s] = DenseTensor::from_matrix(f.vh.topRows(r), with_left(a.shape(), keep));
    sites[s - 1] = absorb_right(sites[s - 1], us);
    report.spectra[s - 1] = std::move(f.s);
    report.discarded[s - 1] = discarded;
  }
  return report;
}

SweepReport compress(std::vector<DenseTensor>& sites, double tau) {
  canonicalize(sites, 0);
  return truncate_left_to_right(sites, tau);
}

std::vector<std::size_t> bond_dimensions(const std::vector<DenseTensor>& sites) {
  std::vector<std::size_t> bonds;
  for (std::size_t s = 0; s + 1 < sites.size(); ++s) {
    bonds.push_back(sites[s].shape().back());
  }
  return bonds;
}

void check_bonds(const std::vector<DenseTensor>& sites) {
  if (sites.empty()) throw ShapeError("chain has no sites");
  if (sites.front().shape().front() != 1 || sites.back().shape().back() != 1) {
    throw ShapeError("boundary bonds must have extent 1");
  }
  for (std::size_t s = 0; s + 1 < sites.size(); ++s) {
    if (sites[s].shape().back() != sites[s + 1].shape().front()) {
      throw ShapeError("bond mismatch between sites " + std::to_string(s) +
                       " and " + std::to_string(s + 1));
    }
  }
}

}  // namespace zmpo::chain
