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

#ifndef DSMATCH_ERROR_HPP
#define DSMATCH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dsmatch {

/// Bad configuration (unknown estimator tag, invalid xi, ...). CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input data (missing column, unparsable cell, empty arm, ...). CLI exit code 3.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (rank deficiency, empty mask, too few donors, ...). CLI exit code 4.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dsmatch

#endif  // DSMATCH_ERROR_HPP
