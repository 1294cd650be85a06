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


#include "zmpo/fit.hpp"

#include <cmath>
#include <vector>

#include "zmpo/error.hpp"

namespace zmpo {
namespace {

std::vector<double> logs(std::span<const double> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ParameterError("logarithmic fit needs positive finite data");
    }
    out.push_back(std::log(x));
  }
  return out;
}

}  // namespace

LineFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("fit: x and y differ in length");
  if (x.size() < 2) throw ParameterError("fit: need at least two points");
  const double m = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw ParameterError("fit: x values are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += r * r;
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

LineFit log_log_fit(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> lx = logs(x);
  const std::vector<double> ly = logs(y);
  return linear_fit(lx, ly);
}

double power_law_prefactor(std::span<const double> x, std::span<const double> y,
                           double exponent) {
  if (x.size() != y.size()) throw ParameterError("fit: x and y differ in length");
  if (x.empty()) throw ParameterError("fit: need at least one point");
  const std::vector<double> lx = logs(x);
  const std::vector<double> ly = logs(y);
  double sum = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) sum += ly[i] - exponent * lx[i];
  return std::exp(sum / static_cast<double>(lx.size()));
}

ExponentialFit exponential_fit(std::span<const double> values) {
  const std::vector<double> ly = logs(values);
  std::vector<double> k(values.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<double>(i);
  const LineFit f = linear_fit(k, ly);
  return {std::exp(f.intercept), -f.slope, f.r_squared};
}

}  // namespace zmpo
