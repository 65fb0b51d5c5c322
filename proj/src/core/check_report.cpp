#include "spancat/core/check_report.hpp"

#include <algorithm>
#include <sstream>

namespace spancat {

void CheckReport::record(bool ok, const nlohmann::json& dump) {
  ++samples;
  if (ok) {
    ++passes;
  } else if (failures.size() < kMaxDumps) {
    failures.push_back(dump);
  }
}

void CheckReport::skip(std::string reason) {
  skipped = true;
  note = std::move(reason);
}

void CheckReport::absorb(const CheckReport& other) {
  samples += other.samples;
  passes += other.passes;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxDumps) failures.push_back(f);
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j = {{"check_name", check_name}, {"instance", instance}, {"samples", samples},
                      {"passes", passes},         {"failures", failures}, {"seed", seed}};
  if (!note.empty()) j["note"] = note;
  if (skipped) j["skipped"] = true;
  return j;
}

std::string CheckReport::summary_line() const {
  std::ostringstream out;
  out << (passed() ? "PASS " : "FAIL ") << check_name << " [" << instance << "] " << passes << '/' << samples;
  if (skipped) out << " (skipped: " << note << ')';
  else if (!note.empty()) out << " (" << note << ')';
  return out.str();
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

nlohmann::json SuiteReport::to_json() const {
  std::vector<const CheckReport*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckReport* a, const CheckReport* b) { return a->check_name < b->check_name; });
  nlohmann::json arr = nlohmann::json::array();
  std::size_t n_pass = 0;
  for (const auto* c : sorted) {
    arr.push_back(c->to_json());
    if (c->passed()) ++n_pass;
  }
  return {{"suite", suite},
          {"instance", instance},
          {"seed", seed},
          {"checks", arr},
          {"totals", {{"checks", checks.size()}, {"passed", n_pass}, {"failed", checks.size() - n_pass}}}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " on " << instance << " (seed " << seed << ")\n";
  for (const auto& c : checks) out << "  " << c.summary_line() << '\n';
  out << (passed() ? "OK" : "FAILED");
  if (wall_seconds >= 0) out << " in " << wall_seconds << " s";
  out << '\n';
  return out.str();
}

}  // namespace spancat
