#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nsg/analysis.hpp"

namespace nsg {

enum class CheckStatus { pass, fail, skipped, not_applicable };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;    // "C01"
  std::string name;  // "connectivity-witness"
  std::string statement;
  CheckStatus status = CheckStatus::pass;
  /// Why a check was skipped or not applicable; empty otherwise.
  std::string reason;
  nlohmann::json witness = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct VerifyConfig {
  AnalysisConfig analysis;
  /// Random conjugators per class representative, on top of the generators.
  std::size_t conjugator_samples = 2;
  /// Cap on overgroups of the radical realized as standalone groups.
  std::size_t max_overgroups = 48;
  /// Cap on normal subgroups inside the radical.
  std::size_t max_normal_subgroups = 64;
  /// Report wall-clock per check. Off by default so reports are reproducible.
  bool timings = false;
};

struct CheckInfo {
  const char* id;
  const char* name;
  const char* statement;
};

/// Registered checks in report order.
const std::vector<CheckInfo>& registered_checks();

/// Accepts "C07", "divisibility", and a few aliases. Throws PreconditionError
/// for anything else.
const CheckInfo& find_check(std::string_view id_or_name);

struct VerificationReport {
  nlohmann::json group;
  nlohmann::json params;
  std::vector<CheckResult> checks;
  std::size_t passed = 0, failed = 0, skipped = 0, not_applicable = 0;

  bool ok() const noexcept { return failed == 0; }
};

nlohmann::json to_json(const VerificationReport& report, bool timings = false);

VerificationReport verify_all(Analysis& a, const std::string& group_name, const VerifyConfig& config = {});
CheckResult verify_check(Analysis& a, std::string_view id, const VerifyConfig& config = {});

}  // namespace nsg
