#include "symcalc/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace symcalc {

namespace {

void write_text(std::ostream& os, const VerificationReport& r, const ReportOptions& options) {
  os << "[check]\n";
  os << "claim = " << r.claim << '\n';
  os << "params = " << r.params << '\n';
  os << "status = " << (r.passed() ? "pass" : "fail") << '\n';
  for (const auto& [k, v] : r.details) os << "detail." << k << " = " << v << '\n';
  os << "counterexamples = " << r.counterexamples.size() << '\n';
  const std::size_t shown = std::min(r.counterexamples.size(), kMaxPrintedCounterexamples);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = r.counterexamples[i];
    os << "  input=" << c.input << " expected=" << c.expected << " got=" << c.got << '\n';
  }
  os << "elapsed_ms = " << (options.include_timing ? r.elapsed_ms : 0) << '\n';
  os << "seed = " << r.seed << "\n\n";
}

nlohmann::ordered_json to_json(const VerificationReport& r, const ReportOptions& options) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["params"] = r.params;
  j["status"] = r.passed() ? "pass" : "fail";
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  j["counterexample_count"] = r.counterexamples.size();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  const std::size_t shown = std::min(r.counterexamples.size(), kMaxPrintedCounterexamples);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = r.counterexamples[i];
    list.push_back({{"input", c.input}, {"expected", c.expected}, {"got", c.got}});
  }
  j["counterexamples"] = list;
  j["elapsed_ms"] = options.include_timing ? r.elapsed_ms : 0;
  j["seed"] = r.seed;
  return j;
}

}  // namespace

void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports, const ReportOptions& options) {
  if (options.format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, options));
    os << arr.dump(2) << '\n';
    return;
  }
  for (const auto& r : reports) write_text(os, r, options);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
  os << "summary: " << reports.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
}

}  // namespace symcalc
