#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sepq/decomposition.hpp"
#include "sepq/full_separability.hpp"
#include "sepq/pq_separability.hpp"

namespace sepq::report {

struct InputDigest {
  int n = 0;
  double norm = 0.0;
  std::uint64_t popcount = 0;

  friend bool operator==(const InputDigest&, const InputDigest&) = default;
};

struct Tolerances {
  double tol_zero = kTolZero;
  double tol_pp = kTolPairProduct;
  double tol_rank = kTolRank;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

// Document printed by every CLI command.
struct Report {
  std::string command;
  nlohmann::json arguments = nlohmann::json::object();
  std::optional<InputDigest> input;
  Tolerances tolerances;
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json counters = nlohmann::json::object();
  std::optional<nlohmann::json> verify;
  std::int64_t timing_ns = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const InputDigest& d);
void from_json(const nlohmann::json& j, InputDigest& d);
void to_json(nlohmann::json& j, const Tolerances& t);
void from_json(const nlohmann::json& j, Tolerances& t);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

nlohmann::json amplitudes_json(std::span<const Amplitude> amplitudes);
nlohmann::json to_json(const FullSepReport& report);
nlohmann::json to_json(const PqReport& report);
nlohmann::json to_json(const FactorTree& tree);

InputDigest digest(const PureState& state, double tol_zero);

}  // namespace sepq::report
