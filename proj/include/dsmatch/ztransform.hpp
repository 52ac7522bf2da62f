/**
 * This file is part of dsmatch
 *
 * Copyright 2026 dsmatch authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DSMATCH_ZTRANSFORM_HPP
#define DSMATCH_ZTRANSFORM_HPP

#include <array>
#include <cmath>

#include "dsmatch/dataset.hpp"
#include "dsmatch/error.hpp"

namespace dsmatch {

/// Nonlinear confounder transformation of the simulation design: ten fixed
/// maps of X in R^10 followed by a population affine rescaling to mean 1,
/// variance 1 per coordinate. The rescaling constants are population moments
/// under X_j ~ iid Uniform[1-sqrt(3), 1+sqrt(3)], evaluated in closed form,
/// so they are scenario constants shared by every run.
namespace ztrans {

constexpr double kLo = 1.0 - 1.7320508075688772935;  // 1 - sqrt(3)
constexpr double kHi = 1.0 + 1.7320508075688772935;  // 1 + sqrt(3)
constexpr double kWidth = 2.0 * 1.7320508075688772935;

/// The ten raw maps, before rescaling. Input row x has 10 entries.
inline std::array<double, 10> raw_row(const double* x) {
  return {std::exp(x[0] / 2.0),
          std::exp(x[1] / 3.0),
          std::log((x[2] + 1.0) * (x[2] + 1.0)),
          std::log((x[3] + 1.0) * (x[3] + 1.0)),
          x[4] > 0.5 ? 1.0 : 0.0,
          x[5] > 0.75 ? 1.0 : 0.0,
          std::sin(x[6] - x[7]),
          std::cos(x[6] + x[7]),
          std::sin(x[8]),
          std::cos(x[9])};
}

struct Moments {
  std::array<double, 10> mean;
  std::array<double, 10> sd;
};

/// Population mean and sd of each raw map under the uniform design.
inline const Moments& population_moments() {
  static const Moments m = [] {
    const double a = kLo, b = kHi, w = kWidth;
    auto exp_moment = [&](double c) { return (std::exp(c * b) - std::exp(c * a)) / (c * w); };
    // trig moments of X and 2X over [a,b]
    const double c1 = (std::sin(b) - std::sin(a)) / w;
    const double s1 = (std::cos(a) - std::cos(b)) / w;
    const double c2 = (std::sin(2 * b) - std::sin(2 * a)) / (2 * w);
    const double s2 = (std::cos(2 * a) - std::cos(2 * b)) / (2 * w);

    Moments out{};
    auto set = [&](int j, double mean, double second_moment) {
      out.mean[j] = mean;
      out.sd[j] = std::sqrt(second_moment - mean * mean);
    };
    set(0, exp_moment(0.5), exp_moment(1.0));
    set(1, exp_moment(1.0 / 3.0), exp_moment(2.0 / 3.0));
    {
      // 2 log(X+1); antiderivatives: u(ln u - 1) and u(ln^2 u - 2 ln u + 2)
      auto F1 = [](double u) { return u * (std::log(u) - 1.0); };
      auto F2 = [](double u) {
        const double l = std::log(u);
        return u * (l * l - 2.0 * l + 2.0);
      };
      const double mean = 2.0 * (F1(b + 1.0) - F1(a + 1.0)) / w;
      const double second = 4.0 * (F2(b + 1.0) - F2(a + 1.0)) / w;
      set(2, mean, second);
      set(3, mean, second);
    }
    {
      const double p5 = (b - 0.5) / w;
      set(4, p5, p5);  // indicator: second moment equals mean
      const double p6 = (b - 0.75) / w;
      set(5, p6, p6);
    }
    // sin(X7 - X8): mean 0 by symmetry of iid arguments
    set(6, 0.0, (1.0 - c2 * c2 - s2 * s2) / 2.0);
    // cos(X7 + X8)
    set(7, c1 * c1 - s1 * s1, (1.0 + c2 * c2 - s2 * s2) / 2.0);
    // sin(X9), cos(X10)
    set(8, s1, (1.0 - c2) / 2.0);
    set(9, c1, (1.0 + c2) / 2.0);
    return out;
  }();
  return m;
}

}  // namespace ztrans

/// Applies the ten transformations and the fixed population rescaling so each
/// output column has population mean 1 and variance 1.
inline Matrix z_transform(const Matrix& X) {
  if (X.cols() != 10) throw NumericError("z_transform: input must have 10 columns");
  const auto& mom = ztrans::population_moments();
  Matrix Z(X.rows(), 10);
  std::array<double, 10> row;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (int j = 0; j < 10; ++j) row[static_cast<std::size_t>(j)] = X(i, j);
    auto z = ztrans::raw_row(row.data());
    for (int j = 0; j < 10; ++j)
      Z(i, j) = 1.0 + (z[static_cast<std::size_t>(j)] - mom.mean[static_cast<std::size_t>(j)]) /
                          mom.sd[static_cast<std::size_t>(j)];
  }
  return Z;
}

/// Raw (unscaled) transforms; exposed for tests.
inline Matrix z_transform_raw(const Matrix& X) {
  if (X.cols() != 10) throw NumericError("z_transform: input must have 10 columns");
  Matrix Z(X.rows(), 10);
  std::array<double, 10> row;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (int j = 0; j < 10; ++j) row[static_cast<std::size_t>(j)] = X(i, j);
    auto z = ztrans::raw_row(row.data());
    for (int j = 0; j < 10; ++j) Z(i, j) = z[static_cast<std::size_t>(j)];
  }
  return Z;
}

}  // namespace dsmatch

#endif  // DSMATCH_ZTRANSFORM_HPP
