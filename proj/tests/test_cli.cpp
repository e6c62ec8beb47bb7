#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cli.hpp"

using symcalc::cli::parse_int_list;
using symcalc::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("integer lists are parsed strictly") {
  CHECK(parse_int_list("") == std::vector<int>{});
  CHECK(parse_int_list("3") == std::vector<int>{3});
  CHECK(parse_int_list("1,-2,30") == std::vector<int>{1, -2, 30});
  for (const char* bad : {",", "1,", ",1", "1,,2", " 1", "1 ", "a", "1.5", "+1", "99999999999"}) {
    CHECK_THROWS_AS(parse_int_list(bad), std::invalid_argument);
  }
}

TEST_CASE("trace sn") {
  CHECK(run({"trace", "sn", "--beta", "3", "--cycles", "3"}).out == "1\n");
  CHECK(run({"trace", "sn", "--beta", "1,3", "--cycles", "1,1,1"}).out == "2\n");
  CHECK(run({"trace", "sn", "--beta", "1,1", "--cycles", "2"}).out == "0\n");
  const Run mismatch = run({"trace", "sn", "--beta", "4", "--cycles", "2"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("weight") != std::string::npos);
  CHECK(run({"trace", "sn", "--beta", "1,x", "--cycles", "2"}).code == 2);
  CHECK(run({"trace", "sn", "--beta", "2", "--cycles", "0,2"}).code == 2);
  CHECK(run({"trace", "sn", "--beta", "2"}).code == 2);
}

TEST_CASE("trace wn") {
  CHECK(run({"trace", "wn", "--top", "0,1", "--bottom", "2", "--neg", "2"}).out == "-1\n");
  CHECK(run({"trace", "wn", "--top", "1", "--bottom", "0", "--neg", "1"}).out == "1\n");
  CHECK(run({"trace", "wn", "--top", "1", "--bottom", "", "--pos", "1"}).out == "1\n");
  CHECK(run({"trace", "wn", "--top", "1", "--bottom", "0", "--neg", "2"}).code == 2);
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "prop211", "--m", "3", "--no-timing"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("claim = prop211\nparams = m=3\nstatus = pass\n") != std::string::npos);
  CHECK(ok.out.find("summary: 1 passed, 0 failed") != std::string::npos);
  CHECK(run({"verify", "prop212", "--m", "3"}).code == 2);
  CHECK(run({"verify", "lemma210", "--m", "3"}).code == 2);
  CHECK(run({"verify", "lemma26", "--m", "99"}).code == 2);
  CHECK(run({"verify", "all", "--m", "2"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "so5", "--q", "4"}).code == 2);
  CHECK(run({"verify", "lemma29", "--threads", "0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify output is deterministic with --no-timing") {
  const std::vector<std::string> args = {"verify", "lemma26", "--no-timing", "--seed", "9"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed = 9\n") != std::string::npos);
  CHECK(a.out.find("summary: 6 passed, 0 failed") != std::string::npos);
}

TEST_CASE("verify json") {
  const Run r = run({"verify", "lemma217", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["claim"] == "lemma217");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["seed"] == 1);
}

TEST_CASE("verify so5 sampled at q = 5") {
  const Run r = run({"verify", "so5", "--q", "5", "--seed", "2", "--no-timing", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("detail.mode = sampled") != std::string::npos);
}

TEST_CASE("table") {
  const Run w1 = run({"table", "wn", "--n", "1"});
  CHECK(w1.code == 0);
  CHECK(w1.out.find("orthogonality: pass") != std::string::npos);
  const Run s4 = run({"table", "sn", "--n", "4", "--format", "csv"});
  CHECK(s4.code == 0);
  std::istringstream lines(s4.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 8);  // header, 5 characters, centralizers, footer
  CHECK(s4.out.find("# group=S_4 order=24 orthogonality=pass") != std::string::npos);
  CHECK(run({"table", "sn", "--n", "9"}).code == 2);
  CHECK(run({"table", "wn", "--n", "7"}).code == 2);
  CHECK(run({"table", "xn", "--n", "2"}).code == 2);
}

TEST_CASE("output files") {
  const auto dir = std::filesystem::temp_directory_path() / "symcalc_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "table.csv";
  const Run r = run({"table", "wn", "--n", "2", "--format", "csv", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("symbol,", 0) == 0);
  CHECK(run({"table", "wn", "--n", "2", "--output", (dir / "missing" / "x.txt").string()}).code == 2);
  std::filesystem::remove_all(dir);
}
