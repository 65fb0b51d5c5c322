#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace spancat {

/// Outcome of one property check over a batch of generated cases.
struct CheckReport {
  static constexpr std::size_t kMaxDumps = 10;

  std::string check_name;
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::vector<nlohmann::json> failures;  // at most kMaxDumps kept
  std::string note;
  bool skipped = false;

  CheckReport() = default;
  CheckReport(std::string name, std::string_view inst, std::uint64_t s)
      : check_name(std::move(name)), instance(inst), seed(s) {}

  /// Counts one sample; `dump` is kept only on failure.
  void record(bool ok, const nlohmann::json& dump = nullptr);
  void record_failure(const nlohmann::json& dump) { record(false, dump); }
  void skip(std::string reason);
  /// Folds another report's counters and dumps into this one.
  void absorb(const CheckReport& other);

  std::size_t failure_count() const { return samples - passes; }
  bool passed() const { return skipped || passes == samples; }

  nlohmann::json to_json() const;
  std::string summary_line() const;
};

/// A named group of reports. Wall time is reported on the text path only
/// so that JSON output stays byte-identical across runs.
struct SuiteReport {
  std::string suite;
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;
  double wall_seconds = -1;  // text output only; negative when unmeasured

  bool passed() const;
  /// Checks are sorted by name before serialization.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace spancat
