#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "symcalc/character_table.hpp"
#include "symcalc/parallel.hpp"
#include "symcalc/sn_characters.hpp"
#include "symcalc/so5.hpp"
#include "symcalc/verifications.hpp"
#include "symcalc/wn_characters.hpp"

namespace symcalc::cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed integer list '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

const std::vector<std::string> kClaims = {"lemma26", "lemma27",  "lemma29",  "lemma210", "prop211",
                                          "prop212", "lemma217", "so5",      "all"};

struct VerifyConfig {
  std::string claim;
  std::optional<int> m;
  int q = 3;
  std::string format = "text";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool no_timing = false;
  bool full = false;
  std::string output;
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void run_over(std::vector<VerificationReport>& out, const std::optional<int>& m, const std::vector<int>& defaults,
              const std::function<VerificationReport(int)>& check) {
  if (m) {
    out.push_back(check(*m));
    return;
  }
  for (int v : defaults) out.push_back(check(v));
}

std::vector<VerificationReport> run_claim(const std::string& claim, const VerifyConfig& c) {
  std::vector<VerificationReport> out;
  const bool all = claim == "all";
  if (all || claim == "lemma26") run_over(out, c.m, range(0, 5), check_lemma_2_6);
  if (all || claim == "lemma27") run_over(out, c.m, range(0, 5), check_lemma_2_7);
  if (all || claim == "lemma29") run_over(out, c.m, range(1, 5), check_lemma_2_9);
  if (all || claim == "lemma210") {
    run_over(out, c.m, {2, 4}, [](int m) {
      if (m % 2 != 0) throw std::invalid_argument("lemma210: m must be even, got " + std::to_string(m));
      return check_lemma_2_10(m / 2);
    });
  }
  if (all || claim == "prop211") run_over(out, c.m, range(1, 5), check_prop_2_11);
  if (all || claim == "prop212") {
    run_over(out, c.m, {2, 4}, [](int m) {
      if (m % 2 != 0) throw std::invalid_argument("prop212: m must be even, got " + std::to_string(m));
      return check_prop_2_12(m);
    });
  }
  if (all || claim == "lemma217") out.push_back(check_lemma_2_17());
  if (all || claim == "so5") {
    if (c.q > kernels::kMaxKernelPrime) {
      throw std::out_of_range("so5: q=" + std::to_string(c.q) + " above " + std::to_string(kernels::kMaxKernelPrime));
    }
    so5::So5Options o;
    o.q = c.q;
    o.seed = c.seed;
    o.full = c.full;
    out.push_back(so5::verify_so5(o));
  }
  for (auto& r : out) r.seed = c.seed;
  return out;
}

// Writes to --output when given, else to out.
int emit(const std::string& path, std::ostream& out, std::ostream& err, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  body(file);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character values of S_n and W_n from beta-sequence symbols, with exhaustive claim checks."};
  app.name("symcalc");
  app.require_subcommand(1);

  std::function<int()> action;

  auto* trace = app.add_subcommand("trace", "Evaluate one character value");
  trace->require_subcommand(1);

  std::string sn_beta, sn_cycles;
  auto* trace_sn = trace->add_subcommand("sn", "Value of [beta] at a class of S_n");
  trace_sn->add_option("--beta", sn_beta, "beta-sequence, e.g. 1,3")->required();
  trace_sn->add_option("--cycles", sn_cycles, "cycle lengths, e.g. 2,1,1")->required();
  trace_sn->callback([&] {
    action = [&] {
      const BetaSequence beta{parse_int_list(sn_beta)};
      const SnClass cls(parse_int_list(sn_cycles));
      out << mn_trace_sn(beta, cls) << '\n';
      return kExitOk;
    };
  });

  std::string wn_top, wn_bottom, wn_pos, wn_neg;
  auto* trace_wn = trace->add_subcommand("wn", "Value of the bi-symbol [top;bottom] at a class of W_n");
  trace_wn->add_option("--top", wn_top, "top row")->required();
  trace_wn->add_option("--bottom", wn_bottom, "bottom row")->required();
  trace_wn->add_option("--pos", wn_pos, "positive cycle lengths");
  trace_wn->add_option("--neg", wn_neg, "negative cycle lengths");
  trace_wn->callback([&] {
    action = [&] {
      const BiSymbol sym{{parse_int_list(wn_top)}, {parse_int_list(wn_bottom)}};
      const SignedCycleType cls(parse_int_list(wn_pos), parse_int_list(wn_neg));
      out << mn_trace_wn(sym, cls) << '\n';
      return kExitOk;
    };
  });

  VerifyConfig vc;
  int m_value = 0;
  auto* verify = app.add_subcommand("verify", "Run claim checks; exit 1 if any fails");
  verify->add_option("claim", vc.claim, "which check")->required()->check(CLI::IsMember(kClaims));
  auto* m_opt = verify->add_option("--m", m_value, "single parameter instead of the default range");
  verify->add_option("--q", vc.q, "field size for so5")->capture_default_str();
  verify->add_option("--format", vc.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--threads", vc.threads, "worker threads (default: SYMCALC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vc.seed, "seed for sampled checks")->capture_default_str();
  verify->add_flag("--no-timing", vc.no_timing, "report elapsed_ms as 0 for byte-stable output");
  verify->add_flag("--full", vc.full, "enumerate SO_5(F_q) even for q > 3");
  verify->add_option("--output", vc.output, "write the report to a file");
  verify->callback([&] {
    action = [&] {
      if (m_opt->count() > 0) {
        if (vc.claim == "all" || vc.claim == "lemma217" || vc.claim == "so5") {
          throw std::invalid_argument("--m does not apply to " + vc.claim);
        }
        vc.m = m_value;
      }
      if (vc.threads > 0) set_parallelism(vc.threads);
      const std::vector<VerificationReport> reports = run_claim(vc.claim, vc);
      ReportOptions ro;
      ro.format = vc.format == "json" ? ReportFormat::Json : ReportFormat::Text;
      ro.include_timing = !vc.no_timing;
      const int code = emit(vc.output, out, err, [&](std::ostream& os) { write_reports(os, reports, ro); });
      if (code != kExitOk) return code;
      for (const auto& r : reports) {
        if (!r.passed()) return kExitFailed;
      }
      return kExitOk;
    };
  });

  std::string table_group, table_format = "human", table_output;
  int table_n = 0;
  auto* table = app.add_subcommand("table", "Print a character table");
  table->add_option("group", table_group, "sn or wn")->required()->check(CLI::IsMember({"sn", "wn"}));
  table->add_option("--n", table_n, "rank")->required();
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"human", "csv"}))
      ->capture_default_str();
  table->add_option("--output", table_output, "write the table to a file");
  table->callback([&] {
    action = [&] {
      const CharacterTable t = table_group == "sn" ? character_table_sn(table_n) : character_table_wn(table_n);
      const TableFormat f = table_format == "csv" ? TableFormat::Csv : TableFormat::Human;
      return emit(table_output, out, err, [&](std::ostream& os) { write_table(os, t, f); });
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace symcalc::cli
