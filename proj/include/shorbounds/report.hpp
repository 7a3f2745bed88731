#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shorbounds/error.hpp"
#include "shorbounds/simulator.hpp"

namespace shorbounds::report {

using numtheory::u64;
using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr double kDefaultEpsilon = 0.01;

struct AnalyzeOptions {
  u64 n = 0;
  double epsilon = kDefaultEpsilon;
  bool ceil_n = false;
};

struct VerifyOptions {
  /// Either explicit values or an inclusive range.
  std::vector<u64> values;
  std::optional<std::pair<u64, u64>> range;
  bool squarefree_only = false;
  u64 max_enumeration = 1'000'000;
  unsigned workers = 1;
};

struct SimulateOptions {
  u64 n = 0;
  u64 trials = 100'000;
  u64 seed = 0;
  simulator::OrderMode mode = simulator::OrderMode::exact;
  unsigned workers = 1;
};

enum class SweepFormat { json, csv };

struct SweepOptions {
  unsigned k = 2;
  unsigned tau_max = 8;
  SweepFormat format = SweepFormat::csv;
};

/// A rendered command result. `failed` drives the process exit status.
struct Document {
  std::string body;
  std::string note;  // human-readable diagnostics destined for stderr
  bool failed = false;
};

Json analyze(const AnalyzeOptions& opts);

struct VerifyOutcome {
  Json doc;
  u64 mismatches = 0;
  u64 errors = 0;
};
VerifyOutcome verify(const VerifyOptions& opts);

Json simulate(const SimulateOptions& opts);

Json sweep_json(const SweepOptions& opts);
std::string sweep_csv(const SweepOptions& opts);
/// e.g. "minimum 1/2 at tau=(1,1)".
std::string sweep_minimum_note(const SweepOptions& opts);

Json error_json(const std::string& command, ErrorCode code, const std::string& message);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize(const Json& doc);

/// Rounds to 12 significant digits for presentation.
double present(double value);

}  // namespace shorbounds::report
