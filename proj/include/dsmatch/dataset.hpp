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

#ifndef DSMATCH_DATASET_HPP
#define DSMATCH_DATASET_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dsmatch/error.hpp"

namespace dsmatch {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

/// One analysis sample. Row order defines unit identity: match indices,
/// weights and reports all refer to row i of the ingested data.
/// Immutable after construction; safe to share across threads.
struct Dataset {
  Matrix X;    // covariates, n x p
  IntVector A; // treatment, entries in {0,1}
  Vector Y;    // observed outcome
  std::vector<std::string> covariate_names; // empty or size p

  int n() const { return static_cast<int>(Y.size()); }
  int p() const { return static_cast<int>(X.cols()); }

  int n_treated() const { return A.sum(); }
  int n_control() const { return n() - n_treated(); }

  /// Checks the type invariants; throws DataError on violation.
  void validate() const {
    const auto rows = X.rows();
    if (A.size() != rows || Y.size() != rows)
      throw DataError("dataset: X, A, Y must share the leading dimension");
    if (rows == 0) throw DataError("dataset: empty sample");
    for (Eigen::Index i = 0; i < A.size(); ++i) {
      if (A[i] != 0 && A[i] != 1)
        throw DataError("dataset: treatment must be 0 or 1 (unit " + std::to_string(i) + ")");
    }
    if (!X.allFinite() || !Y.allFinite())
      throw DataError("dataset: non-finite covariate or outcome entries");
    int nt = n_treated();
    if (nt == 0) throw DataError("dataset: no treated units");
    if (nt == n()) throw DataError("dataset: no control units");
  }

  std::vector<int> arm_indices(int a) const {
    std::vector<int> idx;
    for (int i = 0; i < n(); ++i)
      if (A[i] == a) idx.push_back(i);
    return idx;
  }
};

/// Affine map recorded by standardize_columns, invertible to 1e-12.
struct StandardizationParams {
  Vector means;
  Vector sds;

  Matrix apply(const Matrix& V) const {
    Matrix out = V;
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out.col(j) = (out.col(j).array() - means[j]) / sds[j];
    return out;
  }

  Matrix invert(const Matrix& V) const {
    Matrix out = V;
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out.col(j) = out.col(j).array() * sds[j] + means[j];
    return out;
  }
};

inline double column_mean(const Vector& v) { return v.mean(); }

/// Sample variance with denominator n-1.
inline double column_variance(const Vector& v) {
  const double m = v.mean();
  return (v.array() - m).square().sum() / static_cast<double>(v.size() - 1);
}

/// Center and scale every column to sample mean 0, sample variance 1
/// (denominator n-1). Throws NumericError on a zero-variance column.
inline std::pair<Matrix, StandardizationParams> standardize_columns(const Matrix& V) {
  if (V.rows() < 2) throw NumericError("standardize: need at least two rows");
  StandardizationParams params;
  params.means.resize(V.cols());
  params.sds.resize(V.cols());
  Matrix out(V.rows(), V.cols());
  for (Eigen::Index j = 0; j < V.cols(); ++j) {
    const double m = V.col(j).mean();
    const double var = (V.col(j).array() - m).square().sum() / static_cast<double>(V.rows() - 1);
    if (!(var > 0.0))
      throw NumericError("standardize: column " + std::to_string(j) + " has zero variance");
    const double sd = std::sqrt(var);
    params.means[j] = m;
    params.sds[j] = sd;
    out.col(j) = (V.col(j).array() - m) / sd;
  }
  return {std::move(out), std::move(params)};
}

}  // namespace dsmatch

#endif  // DSMATCH_DATASET_HPP
