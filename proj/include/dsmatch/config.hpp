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

#ifndef DSMATCH_CONFIG_HPP
#define DSMATCH_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsmatch/error.hpp"

namespace dsmatch {

enum class Estimand { ate, qte, att, qtt };

inline std::string estimand_name(Estimand e) {
  switch (e) {
    case Estimand::ate: return "ATE";
    case Estimand::qte: return "QTE";
    case Estimand::att: return "ATT";
    case Estimand::qtt: return "QTT";
  }
  return "?";
}

inline Estimand parse_estimand(const std::string& s) {
  if (s == "ATE") return Estimand::ate;
  if (s == "QTE") return Estimand::qte;
  if (s == "ATT") return Estimand::att;
  if (s == "QTT") return Estimand::qtt;
  throw ConfigError("unknown estimand '" + s + "' (expected ATE, QTE, ATT or QTT)");
}

inline bool is_quantile_estimand(Estimand e) {
  return e == Estimand::qte || e == Estimand::qtt;
}

inline bool is_treated_estimand(Estimand e) {
  return e == Estimand::att || e == Estimand::qtt;
}

enum class WeightScheme { multinomial, exponential };

inline std::string weight_scheme_name(WeightScheme s) {
  return s == WeightScheme::multinomial ? "multinomial" : "exponential";
}

inline WeightScheme parse_weight_scheme(const std::string& s) {
  if (s == "multinomial") return WeightScheme::multinomial;
  if (s == "exponential") return WeightScheme::exponential;
  throw ConfigError("unknown weight_scheme '" + s + "'");
}

struct BootstrapConfig {
  int replicates = 1000;
  WeightScheme weight_scheme = WeightScheme::exponential;
  std::uint64_t seed = 0;
  bool refit_sieve = true;  // refit sieve coefficients inside each replicate
};

/// One candidate score model. kind is implied by which list it sits in
/// (propensity_models or prognostic_models); prognostic specs are fit as a
/// matched pair, one linear model per arm with the same feature map.
struct ModelSpec {
  std::string feature_map;  // "raw", "paper-Z", "first-order-plus-squares-of-numeric"
};

struct SchemaConfig {
  std::string treatment_column;
  std::string outcome_column;
  std::vector<std::string> covariate_columns;
  Estimand estimand = Estimand::ate;
  std::vector<double> xi;  // quantile levels for QTE/QTT
  int M = 1;
  int sieve_degree = 2;
  BootstrapConfig bootstrap;
  std::vector<ModelSpec> propensity_models;
  std::vector<ModelSpec> prognostic_models;
  std::vector<std::string> methods = {"dsm"};

  void validate() const {
    if (treatment_column.empty()) throw ConfigError("treatment_column missing");
    if (outcome_column.empty()) throw ConfigError("outcome_column missing");
    if (covariate_columns.empty()) throw ConfigError("covariate_columns missing");
    if (M < 1) throw ConfigError("M must be >= 1");
    if (sieve_degree < 0) throw ConfigError("sieve_degree must be >= 0");
    if (bootstrap.replicates < 2) throw ConfigError("bootstrap replicates must be >= 2");
    if (is_quantile_estimand(estimand) && xi.empty())
      throw ConfigError("xi list required for QTE/QTT");
    for (double x : xi)
      if (!(x > 0.0 && x < 1.0)) throw ConfigError("xi values must lie strictly in (0,1)");
  }
};

inline BootstrapConfig parse_bootstrap_config(const nlohmann::json& j) {
  BootstrapConfig cfg;
  if (j.contains("replicates")) cfg.replicates = j.at("replicates").get<int>();
  if (j.contains("weight_scheme"))
    cfg.weight_scheme = parse_weight_scheme(j.at("weight_scheme").get<std::string>());
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("refit_sieve")) cfg.refit_sieve = j.at("refit_sieve").get<bool>();
  return cfg;
}

inline std::vector<ModelSpec> parse_model_specs(const nlohmann::json& j) {
  std::vector<ModelSpec> specs;
  for (const auto& item : j) {
    ModelSpec s;
    if (item.is_string())
      s.feature_map = item.get<std::string>();
    else
      s.feature_map = item.at("feature_map").get<std::string>();
    specs.push_back(s);
  }
  return specs;
}

inline SchemaConfig parse_schema_config(const nlohmann::json& j) {
  SchemaConfig cfg;
  try {
    cfg.treatment_column = j.at("treatment_column").get<std::string>();
    cfg.outcome_column = j.at("outcome_column").get<std::string>();
    cfg.covariate_columns = j.at("covariate_columns").get<std::vector<std::string>>();
    cfg.estimand = parse_estimand(j.at("estimand").get<std::string>());
    if (j.contains("xi")) cfg.xi = j.at("xi").get<std::vector<double>>();
    if (j.contains("M")) cfg.M = j.at("M").get<int>();
    if (j.contains("sieve_degree")) cfg.sieve_degree = j.at("sieve_degree").get<int>();
    if (j.contains("bootstrap")) cfg.bootstrap = parse_bootstrap_config(j.at("bootstrap"));
    if (j.contains("propensity_models"))
      cfg.propensity_models = parse_model_specs(j.at("propensity_models"));
    if (j.contains("prognostic_models"))
      cfg.prognostic_models = parse_model_specs(j.at("prognostic_models"));
    if (j.contains("methods")) cfg.methods = j.at("methods").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

inline nlohmann::json schema_config_to_json(const SchemaConfig& cfg) {
  nlohmann::json j;
  j["treatment_column"] = cfg.treatment_column;
  j["outcome_column"] = cfg.outcome_column;
  j["covariate_columns"] = cfg.covariate_columns;
  j["estimand"] = estimand_name(cfg.estimand);
  j["xi"] = cfg.xi;
  j["M"] = cfg.M;
  j["sieve_degree"] = cfg.sieve_degree;
  j["bootstrap"] = {{"replicates", cfg.bootstrap.replicates},
                    {"weight_scheme", weight_scheme_name(cfg.bootstrap.weight_scheme)},
                    {"seed", cfg.bootstrap.seed},
                    {"refit_sieve", cfg.bootstrap.refit_sieve}};
  nlohmann::json ps = nlohmann::json::array(), pg = nlohmann::json::array();
  for (const auto& m : cfg.propensity_models) ps.push_back({{"feature_map", m.feature_map}});
  for (const auto& m : cfg.prognostic_models) pg.push_back({{"feature_map", m.feature_map}});
  j["propensity_models"] = ps;
  j["prognostic_models"] = pg;
  j["methods"] = cfg.methods;
  return j;
}

}  // namespace dsmatch

#endif  // DSMATCH_CONFIG_HPP
