#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "support/generators.hpp"
#include "symcalc/character_table.hpp"
#include "symcalc/parallel.hpp"
#include "symcalc/sn_characters.hpp"

using namespace symcalc;

namespace {

Trace entry(const CharacterTable& t, const std::string& row, const std::string& col) {
  const auto r = std::find(t.row_labels.begin(), t.row_labels.end(), row);
  const auto c = std::find(t.column_labels.begin(), t.column_labels.end(), col);
  REQUIRE(r != t.row_labels.end());
  REQUIRE(c != t.column_labels.end());
  return t.entries[static_cast<std::size_t>(r - t.row_labels.begin())][static_cast<std::size_t>(c - t.column_labels.begin())];
}

}  // namespace

TEST_CASE("mn_trace_sn values") {
  CHECK(mn_trace_sn(BetaSequence{{3}}, SnClass({3})) == 1);
  CHECK(mn_trace_sn(BetaSequence{{1, 2, 3}}, SnClass({1, 2})) == -1);
  CHECK(mn_trace_sn(BetaSequence{{1, 3}}, SnClass({1, 1, 1})) == 2);
  CHECK(mn_trace_sn(BetaSequence{{1, 3}}, SnClass({3})) == -1);
  CHECK(mn_trace_sn(BetaSequence{{1, 3}}, SnClass({2, 1})) == 0);
  CHECK(mn_trace_sn(BetaSequence{{3, 1}}, SnClass({1, 1, 1})) == -2);
  CHECK(mn_trace_sn(BetaSequence{{0, 2, 4}}, SnClass({1, 1, 1})) == 2);
  CHECK(mn_trace_sn(BetaSequence{{}}, SnClass{}) == 1);
  CHECK(mn_trace_sn(BetaSequence{{0, 1, 2}}, SnClass{}) == 1);
  CHECK(mn_trace_sn(BetaSequence{{2, 3}}, SnClass({1, 1, 1, 1})) == 2);
  CHECK(mn_trace_sn(BetaSequence{{5}}, SnClass({4, 1})) == 1);
}

TEST_CASE("zero symbols vanish everywhere") {
  CHECK(mn_trace_sn(BetaSequence{{1, 1}}, SnClass({2})) == 0);
  CHECK(mn_trace_sn(BetaSequence{{1, 1}}, SnClass({1})) == 0);
  CHECK(mn_trace_sn(BetaSequence{{-1, 3}}, SnClass({1})) == 0);
  CHECK(oracle_trace_sn(BetaSequence{{2, 2}}, SnClass({1, 1})) == 0);
}

TEST_CASE("weight mismatch is rejected") {
  CHECK_THROWS_AS(mn_trace_sn(BetaSequence{{3}}, SnClass({2})), std::invalid_argument);
  CHECK_THROWS_AS(oracle_trace_sn(BetaSequence{{1, 3}}, SnClass({1})), std::invalid_argument);
  CHECK_THROWS_AS(mn_trace_sn_ordered(BetaSequence{{2}}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(mn_trace_sn_ordered(BetaSequence{{2}}, {2, 0}), std::invalid_argument);
}

TEST_CASE("oracle_trace_sn frozen values") {
  CHECK(oracle_trace_sn(BetaSequence{{4}}, SnClass({2, 1, 1})) == 1);
  CHECK(oracle_trace_sn(BetaSequence{{1, 3}}, SnClass({1, 1, 1})) == 2);
  CHECK(oracle_trace_sn(BetaSequence{{1, 3}}, SnClass({3})) == -1);
  CHECK(oracle_trace_sn(BetaSequence{{}}, SnClass{}) == 1);
  CHECK(oracle_trace_sn(BetaSequence{{1, 2, 3}}, SnClass({2, 1})) == -1);
}

TEST_CASE("young_perm_char counts cycle distributions") {
  CHECK(young_perm_char({2, 2}, SnClass({1, 1, 1, 1})) == 6);
  CHECK(young_perm_char({2, 2}, SnClass({2, 2})) == 2);
  CHECK(young_perm_char({2, 2}, SnClass({3, 1})) == 0);
  CHECK(young_perm_char({5}, SnClass({3, 2})) == 1);
  CHECK(young_perm_char({0, 3}, SnClass({2, 1})) == 1);
  CHECK(young_perm_char({1, 1, 1}, SnClass({1, 1, 1})) == 6);
  CHECK_THROWS_AS(young_perm_char({2, 1}, SnClass({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(young_perm_char({-1, 3}, SnClass({2})), std::invalid_argument);
}

TEST_CASE("centralizer orders") {
  CHECK(sn_centralizer_order(SnClass({1, 1, 1, 1})) == 24);
  CHECK(sn_centralizer_order(SnClass({2, 2})) == 8);
  CHECK(sn_centralizer_order(SnClass({3, 1})) == 3);
  CHECK(sn_centralizer_order(SnClass{}) == 1);
}

TEST_CASE("character tables of S_n") {
  const CharacterTable t1 = character_table_sn(1);
  CHECK(t1.entries == std::vector<std::vector<Trace>>{{1}});

  const CharacterTable t3 = character_table_sn(3);
  CHECK(t3.group == "S_3");
  CHECK(entry(t3, "1,3", "1.1.1") == 2);
  CHECK(entry(t3, "1,3", "2.1") == 0);
  CHECK(entry(t3, "1,3", "3") == -1);

  const CharacterTable t4 = character_table_sn(4);
  CHECK(t4.entries.size() == 5);
  CHECK(entry(t4, "2,3", "1.1.1.1") == 2);
  CHECK(t4.group_order == 24);

  CHECK_THROWS_AS(character_table_sn(9), std::out_of_range);
  CHECK_THROWS_AS(character_table_sn(-1), std::out_of_range);
  CHECK_NOTHROW(character_table_sn(8));
}

TEST_CASE("character table csv layout") {
  std::ostringstream os;
  write_table(os, character_table_sn(2), TableFormat::Csv);
  CHECK(os.str() ==
        "symbol,2,1.1\n"
        "2,1,1\n"
        "\"1,2\",-1,1\n"
        "centralizer,2,2\n"
        "# group=S_2 order=2 orthogonality=pass\n");
}

TEST_CASE("property: oracle equivalence for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& p : partitions_of(n)) {
      for (int extra = 0; extra <= 1; ++extra) {
        const BetaSequence beta = partition_to_beta(p, static_cast<int>(p.parts.size()) + extra);
        for (const SnClass& cls : sn_classes(n)) {
          CHECK_MESSAGE(mn_trace_sn(beta, cls) == oracle_trace_sn(beta, cls),
                        format_list(beta.entries) << " at " << cls.to_string());
        }
      }
    }
  }
}

TEST_CASE("property: removal order does not matter") {
  testgen::Rng rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = rng.uniform(1, 8);
    const BetaSequence beta = testgen::random_beta(rng, n, rng.uniform(0, 2));
    const SnClass cls = testgen::random_sn_class(rng, n);
    std::vector<int> order = cls.cycles;
    std::shuffle(order.begin(), order.end(), rng.engine());
    CHECK(mn_trace_sn_ordered(beta, order) == mn_trace_sn(beta, cls));
  }
}

TEST_CASE("property: shift invariance and antisymmetry") {
  testgen::Rng rng(22);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = rng.uniform(0, 8);
    const BetaSequence beta = testgen::random_beta(rng, n, 0);
    const SnClass cls = testgen::random_sn_class(rng, n);
    const Trace base = mn_trace_sn(beta, cls);
    for (int d = 1; d <= 3; ++d) CHECK(mn_trace_sn(BetaSequence{shift_beta(beta.entries, d)}, cls) == base);
    const std::vector<int> perm = testgen::random_permutation(rng, beta.length());
    CHECK(mn_trace_sn(BetaSequence{testgen::permuted(beta.entries, perm)}, cls) == testgen::inversion_sign(perm) * base);
  }
}

TEST_CASE("property: weighted row orthonormality for n <= 6") {
  for (int n = 0; n <= 6; ++n) CHECK_MESSAGE(character_table_sn(n).row_orthonormal(), "n=" << n);
  CharacterTable broken = character_table_sn(3);
  broken.entries[0][0] = 2;
  CHECK_FALSE(broken.row_orthonormal());
}

TEST_CASE("property: identity value is a positive dimension") {
  for (int n = 0; n <= 8; ++n) {
    const SnClass identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Partition& p : partitions_of(n)) CHECK(mn_trace_sn(canonical_beta(p), identity) >= 1);
  }
}

TEST_CASE("concurrent evaluation matches serial") {
  const std::vector<Partition> parts = partitions_of(7);
  const std::vector<SnClass> classes = sn_classes(7);
  std::vector<Trace> serial;
  for (const auto& p : parts) {
    for (const auto& c : classes) serial.push_back(oracle_trace_sn(canonical_beta(p), c));
  }
  set_parallelism(4);
  const auto parallel = parallel_map(serial.size(), [&](std::size_t i) {
    return mn_trace_sn(canonical_beta(parts[i / classes.size()]), classes[i % classes.size()]);
  });
  set_parallelism(0);
  CHECK(parallel == serial);
}
