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

#ifndef DSMATCH_CSV_HPP
#define DSMATCH_CSV_HPP

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsmatch/config.hpp"
#include "dsmatch/dataset.hpp"
#include "dsmatch/error.hpp"

namespace dsmatch {

/// Parsed CSV: header names plus one double per cell, rows in file order.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw DataError("column '" + name + "' not found in CSV header");
    return static_cast<int>(it - columns.begin());
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

inline double parse_cell(const std::string& raw, std::size_t row, const std::string& column) {
  const std::string s = trim(raw);
  if (s.empty())
    throw DataError("missing value at row " + std::to_string(row) + ", column '" + column + "'");
  const char* begin = s.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + s.size())
    throw DataError("cannot parse '" + s + "' at row " + std::to_string(row) + ", column '" +
                    column + "'");
  return value;
}

}  // namespace detail

/// Reads a UTF-8, comma-separated stream with a header row. All cells must be
/// decimal numbers. Row numbers in error messages are 1-based data rows.
inline CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw DataError("CSV: empty input (header row required)");
  for (auto& name : detail::split_csv_line(line)) table.columns.push_back(detail::trim(name));
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    ++row;
    auto cells = detail::split_csv_line(line);
    if (cells.size() != table.columns.size())
      throw DataError("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                      " cells, expected " + std::to_string(table.columns.size()));
    std::vector<double> parsed(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j)
      parsed[j] = detail::parse_cell(cells[j], row, table.columns[j]);
    table.rows.push_back(std::move(parsed));
  }
  return table;
}

/// Builds a Dataset from CSV per the schema. Rows keep file order, so row i of
/// the file is unit i everywhere downstream.
inline Dataset load_dataset(std::istream& csv_source, const SchemaConfig& schema) {
  CsvTable table = read_csv(csv_source);
  const int a_col = table.column_index(schema.treatment_column);
  const int y_col = table.column_index(schema.outcome_column);
  std::vector<int> x_cols;
  for (const auto& name : schema.covariate_columns) x_cols.push_back(table.column_index(name));

  const int n = static_cast<int>(table.rows.size());
  if (n == 0) throw DataError("CSV has no data rows");
  Dataset ds;
  ds.X.resize(n, static_cast<int>(x_cols.size()));
  ds.A.resize(n);
  ds.Y.resize(n);
  ds.covariate_names = schema.covariate_columns;
  for (int i = 0; i < n; ++i) {
    const auto& row = table.rows[static_cast<std::size_t>(i)];
    double a = row[static_cast<std::size_t>(a_col)];
    if (a != 0.0 && a != 1.0)
      throw DataError("treatment column '" + schema.treatment_column + "' has value " +
                      std::to_string(a) + " at row " + std::to_string(i + 1) +
                      " (must be 0 or 1)");
    ds.A[i] = static_cast<int>(a);
    ds.Y[i] = row[static_cast<std::size_t>(y_col)];
    for (std::size_t j = 0; j < x_cols.size(); ++j)
      ds.X(i, static_cast<int>(j)) = row[static_cast<std::size_t>(x_cols[j])];
  }
  ds.validate();
  return ds;
}

inline Dataset load_dataset(const std::string& csv_text, const SchemaConfig& schema) {
  std::istringstream in(csv_text);
  return load_dataset(in, schema);
}

}  // namespace dsmatch

#endif  // DSMATCH_CSV_HPP
