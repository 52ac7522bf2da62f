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

#ifndef DSMATCH_DESIGN_HPP
#define DSMATCH_DESIGN_HPP

#include <string>
#include <vector>

#include "dsmatch/dataset.hpp"
#include "dsmatch/error.hpp"
#include "dsmatch/ztransform.hpp"

namespace dsmatch {

/// True when every entry of the column is exactly 0 or 1, i.e. a pre-coded
/// indicator that gets no squared term.
inline bool is_binary_column(const Vector& col) {
  for (Eigen::Index i = 0; i < col.size(); ++i)
    if (col[i] != 0.0 && col[i] != 1.0) return false;
  return true;
}

/// Design matrix for a named feature map; an intercept column is always
/// prepended.
///   raw                                  [1, X]
///   paper-Z                              [1, Z(X)] with the fixed population
///                                        rescaling of the simulation design
///   first-order-plus-squares-of-numeric  [1, X, squares of non-binary cols]
inline Matrix build_design(const Dataset& dataset, const std::string& feature_map) {
  const int n = dataset.n();
  const int p = dataset.p();
  if (feature_map == "raw") {
    Matrix D(n, p + 1);
    D.col(0).setOnes();
    D.rightCols(p) = dataset.X;
    return D;
  }
  if (feature_map == "paper-Z") {
    Matrix Z = z_transform(dataset.X);
    Matrix D(n, Z.cols() + 1);
    D.col(0).setOnes();
    D.rightCols(Z.cols()) = Z;
    return D;
  }
  if (feature_map == "first-order-plus-squares-of-numeric") {
    std::vector<int> numeric;
    for (int j = 0; j < p; ++j)
      if (!is_binary_column(dataset.X.col(j))) numeric.push_back(j);
    Matrix D(n, 1 + p + static_cast<int>(numeric.size()));
    D.col(0).setOnes();
    D.middleCols(1, p) = dataset.X;
    for (std::size_t k = 0; k < numeric.size(); ++k)
      D.col(1 + p + static_cast<int>(k)) = dataset.X.col(numeric[k]).array().square();
    return D;
  }
  throw ConfigError("unknown feature_map '" + feature_map + "'");
}

}  // namespace dsmatch

#endif  // DSMATCH_DESIGN_HPP
