#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cotrans/matroid.hpp"

namespace cotrans::cli {

enum class FieldMode { fp, rational };
enum class OutputFormat { text, json };
enum class CheckTarget { exchange, lgv, orthogonal, duality, all };

struct RunConfig {
  std::string command;  // bases | rank | represent | dualize | convert | verify
  std::string input;
  FieldMode field = FieldMode::fp;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::text;
  std::optional<Subset> subset;  // for `rank`
  CheckTarget check = CheckTarget::all;
  unsigned max_retries = 3;
  bool normalize = false;  // `represent` on a presentation
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Output is a pure function of (input bytes, config).
RunResult run(const RunConfig& config);

// "1,2,5" -> {1, 2, 5}; throws UsageError.
Subset parse_subset(const std::string& text);

}  // namespace cotrans::cli
