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

#ifndef DSMATCH_LINEAR_HPP
#define DSMATCH_LINEAR_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "dsmatch/dataset.hpp"
#include "dsmatch/error.hpp"

namespace dsmatch {

constexpr double kRankTolerance = 1e-10;

struct LinearFit {
  Vector beta;
  double sigma = 0.0;  // residual sd, denominator: effective rows - rank
};

namespace detail {

/// Column equilibration: scales each column to unit infinity-norm so the rank
/// tolerance is meaningful across wildly different covariate scales (e.g.
/// squared earnings). Returns per-column scale factors (1 for zero columns).
inline Vector equilibrate(Matrix& D) {
  Vector scale(D.cols());
  for (Eigen::Index j = 0; j < D.cols(); ++j) {
    double s = D.col(j).cwiseAbs().maxCoeff();
    scale[j] = (s > 0.0) ? s : 1.0;
    D.col(j) /= scale[j];
  }
  return scale;
}

inline std::string collinear_column_list(const Eigen::ColPivHouseholderQR<Matrix>& qr) {
  const auto& perm = qr.colsPermutation().indices();
  std::string out;
  for (Eigen::Index k = qr.rank(); k < perm.size(); ++k) {
    if (!out.empty()) out += ", ";
    out += std::to_string(perm[k]);
  }
  return out;
}

}  // namespace detail

/// Weighted least squares of Y on design over rows with mask != 0, minimizing
/// sum_i w_i mask_i (Y_i - x_i' beta)^2. Throws on an empty mask or a rank
/// deficient (weighted, masked) design.
inline LinearFit fit_linear(const Matrix& design, const Vector& Y, const IntVector& mask,
                            const Vector& weights) {
  const Eigen::Index n = design.rows();
  if (Y.size() != n || mask.size() != n || weights.size() != n)
    throw NumericError("fit_linear: dimension mismatch");
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < n; ++i)
    if (mask[i] != 0 && weights[i] > 0.0) rows.push_back(i);
  if (rows.empty()) throw NumericError("fit_linear: mask selects no rows with positive weight");

  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  Matrix Dw(m, design.cols());
  Vector yw(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const double sw = std::sqrt(weights[rows[static_cast<std::size_t>(r)]]);
    Dw.row(r) = sw * design.row(rows[static_cast<std::size_t>(r)]);
    yw[r] = sw * Y[rows[static_cast<std::size_t>(r)]];
  }
  Vector scale = detail::equilibrate(Dw);

  Eigen::ColPivHouseholderQR<Matrix> qr(Dw);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < design.cols())
    throw NumericError("fit_linear: rank-deficient design (collinear columns: " +
                       detail::collinear_column_list(qr) + ")");
  Vector beta_scaled = qr.solve(yw);

  LinearFit fit;
  fit.beta = beta_scaled.cwiseQuotient(scale);
  const double rss = (yw - Dw * beta_scaled).squaredNorm();
  const double dof = static_cast<double>(m - design.cols());
  fit.sigma = dof > 0.0 ? std::sqrt(rss / dof) : 0.0;
  return fit;
}

inline LinearFit fit_linear(const Matrix& design, const Vector& Y, const IntVector& mask) {
  return fit_linear(design, Y, mask, Vector::Ones(design.rows()));
}

}  // namespace dsmatch

#endif  // DSMATCH_LINEAR_HPP
