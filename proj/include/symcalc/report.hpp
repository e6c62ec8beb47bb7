#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace symcalc {

struct Counterexample {
  std::string input;  // the split, element or class that failed
  std::string expected;
  std::string got;
};

/// One record per claim and parameter. A report passes iff it carries no
/// counterexample.
struct VerificationReport {
  std::string claim;
  std::string params;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<Counterexample> counterexamples;
  std::int64_t elapsed_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return counterexamples.empty(); }
  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  void fail(std::string input, std::string expected, std::string got) {
    counterexamples.push_back({std::move(input), std::move(expected), std::move(got)});
  }
};

/// Counterexample lists longer than this are truncated in output (the
/// total count is always printed).
inline constexpr std::size_t kMaxPrintedCounterexamples = 20;

enum class ReportFormat { Text, Json };

struct ReportOptions {
  ReportFormat format = ReportFormat::Text;
  bool include_timing = true;
};

void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports, const ReportOptions& options);

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace symcalc
