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

#ifndef DSMATCH_LOGISTIC_HPP
#define DSMATCH_LOGISTIC_HPP

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "dsmatch/dataset.hpp"
#include "dsmatch/error.hpp"
#include "dsmatch/linear.hpp"

namespace dsmatch {

struct LogisticFit {
  Vector alpha;
  bool converged = false;
  int iterations = 0;
};

inline double expit(double t) {
  return t >= 0.0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

namespace detail {

inline double logistic_deviance(const Matrix& D, const IntVector& A, const Vector& w,
                                const Vector& beta) {
  Vector eta = D * beta;
  double dev = 0.0;
  for (Eigen::Index i = 0; i < D.rows(); ++i) {
    double p = std::clamp(expit(eta[i]), 1e-12, 1.0 - 1e-12);
    dev -= 2.0 * w[i] * (A[i] == 1 ? std::log(p) : std::log(1.0 - p));
  }
  return dev;
}

}  // namespace detail

/// Weighted logistic regression of A on the design by iteratively reweighted
/// least squares with step halving. Solves sum_i w_i x_i {A_i - expit(x_i'a)} = 0.
/// Stops when the max coefficient change (on the equilibrated column scale)
/// drops below 1e-8; at most 100 iterations. On non-convergence (e.g. perfect
/// separation) the last iterate is returned with converged = false: the score
/// column it induces is still a deterministic function of X, which is all
/// matching requires.
inline LogisticFit fit_logistic(const Matrix& design, const IntVector& A, const Vector& weights,
                                const Vector* warm_start = nullptr) {
  const Eigen::Index n = design.rows();
  const Eigen::Index p = design.cols();
  if (A.size() != n || weights.size() != n) throw NumericError("fit_logistic: dimension mismatch");
  if (!(weights.sum() > 0.0)) throw NumericError("fit_logistic: weights sum to zero");

  Matrix D = design;
  Vector scale = detail::equilibrate(D);

  // rank check on the weighted support
  {
    Matrix Dw(n, p);
    for (Eigen::Index i = 0; i < n; ++i) Dw.row(i) = std::sqrt(weights[i]) * D.row(i);
    Eigen::ColPivHouseholderQR<Matrix> qr(Dw);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < p)
      throw NumericError("fit_logistic: rank-deficient design (collinear columns: " +
                         detail::collinear_column_list(qr) + ")");
  }

  Vector beta = Vector::Zero(p);
  if (warm_start != nullptr && warm_start->size() == p) beta = warm_start->cwiseProduct(scale);

  constexpr int kMaxIter = 100;
  constexpr double kTol = 1e-8;
  double deviance = detail::logistic_deviance(D, A, weights, beta);

  LogisticFit fit;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    fit.iterations = iter;
    Vector eta = D * beta;
    Vector z(n), sw(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double pi = std::clamp(expit(eta[i]), 1e-10, 1.0 - 1e-10);
      double wi = weights[i] * pi * (1.0 - pi);
      sw[i] = std::sqrt(wi);
      z[i] = eta[i] + (static_cast<double>(A[i]) - pi) / (pi * (1.0 - pi));
    }
    Matrix Dw = sw.asDiagonal() * D;
    Vector zw = sw.cwiseProduct(z);
    Eigen::ColPivHouseholderQR<Matrix> qr(Dw);
    qr.setThreshold(kRankTolerance);
    Vector beta_new = qr.solve(zw);
    if (!beta_new.allFinite()) break;

    Vector step = beta_new - beta;
    double new_dev = detail::logistic_deviance(D, A, weights, beta_new);
    double t = 1.0;
    int halvings = 0;
    while (new_dev > deviance + 1e-12 && halvings < 30) {
      t /= 2.0;
      ++halvings;
      beta_new = beta + t * step;
      new_dev = detail::logistic_deviance(D, A, weights, beta_new);
    }
    double max_change = (beta_new - beta).cwiseAbs().maxCoeff();
    beta = beta_new;
    deviance = new_dev;
    if (max_change < kTol) {
      fit.converged = true;
      break;
    }
  }
  fit.alpha = beta.cwiseQuotient(scale);
  return fit;
}

inline LogisticFit fit_logistic(const Matrix& design, const IntVector& A) {
  return fit_logistic(design, A, Vector::Ones(design.rows()));
}

/// Fitted probabilities expit(design * alpha).
inline Vector logistic_probabilities(const Matrix& design, const Vector& alpha) {
  Vector eta = design * alpha;
  Vector p(eta.size());
  for (Eigen::Index i = 0; i < eta.size(); ++i) p[i] = expit(eta[i]);
  return p;
}

}  // namespace dsmatch

#endif  // DSMATCH_LOGISTIC_HPP
