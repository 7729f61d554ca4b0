#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace partalg::cli {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 20000;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite). Budget overruns mark the check
/// skipped instead of failing it. Results come back in a fixed order.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

std::string to_string(CheckStatus status);
nlohmann::json to_json(const CheckResult& r);

}  // namespace partalg::cli
