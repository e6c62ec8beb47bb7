#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "support/generators.hpp"
#include "symcalc/hyperoctahedral.hpp"
#include "symcalc/sn_characters.hpp"
#include "symcalc/wn_characters.hpp"

using namespace symcalc;

namespace {

BiSymbol sym(std::vector<int> top, std::vector<int> bottom) { return {{std::move(top)}, {std::move(bottom)}}; }

std::vector<int> minus_at(std::vector<int> v, std::size_t i, int k) {
  v[i] -= k;
  return v;
}

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("mn_trace_wn values") {
  for (const SignedCycleType& cls : wn_classes(3)) CHECK(mn_trace_wn(sym({3}, {}), cls) == 1);
  CHECK(mn_trace_wn(sym({0, 1}, {2}), SignedCycleType({}, {2})) == -1);
  CHECK(mn_trace_wn(sym({1}, {0}), SignedCycleType({}, {1})) == 1);
  CHECK(mn_trace_wn(sym({0}, {1}), SignedCycleType({}, {1})) == -1);
  CHECK(mn_trace_wn(sym({1, 2}, {2}), SignedCycleType({1, 1, 1, 1}, {})) == 6);
  CHECK(mn_trace_wn(sym({1, 0}, {2}), SignedCycleType({}, {2})) == 1);
  CHECK(mn_trace_wn(sym({1, 1}, {2}), SignedCycleType({}, {2})) == 0);
  CHECK(mn_trace_wn(sym({}, {}), SignedCycleType{}) == 1);
}

TEST_CASE("the bi-symbol [0;n] is chi") {
  for (int n = 1; n <= 5; ++n) {
    for (const SignedCycleType& cls : wn_classes(n)) CHECK(mn_trace_wn(sym({0}, {n}), cls) == chi_value(cls));
  }
}

TEST_CASE("oracle_trace_wn frozen values") {
  CHECK(oracle_trace_wn(sym({1}, {0}), SignedCycleType({1}, {})) == 1);
  CHECK(oracle_trace_wn(sym({1}, {0}), SignedCycleType({}, {1})) == 1);
  CHECK(oracle_trace_wn(sym({0}, {1}), SignedCycleType({}, {1})) == -1);
  CHECK(oracle_trace_wn(sym({1, 2}, {2}), SignedCycleType({1, 1, 1, 1}, {})) == 6);
  CHECK(oracle_trace_wn(sym({0, 1}, {2}), SignedCycleType({}, {2})) == -1);
  CHECK_THROWS_AS(oracle_trace_wn(sym({5}, {}), SignedCycleType({5}, {})), std::out_of_range);
}

TEST_CASE("chi_value") {
  CHECK(chi_value(SignedCycleType({4}, {})) == 1);
  CHECK(chi_value(SignedCycleType({}, {1, 3})) == 1);
  CHECK(chi_value(SignedCycleType({1}, {1})) == -1);
}

TEST_CASE("weight mismatch is rejected") {
  CHECK_THROWS_AS(mn_trace_wn(sym({1}, {0}), SignedCycleType({}, {2})), std::invalid_argument);
  CHECK_THROWS_AS(oracle_trace_wn(sym({2}, {}), SignedCycleType({1}, {})), std::invalid_argument);
  CHECK(mn_trace_wn(sym({0, 0}, {5}), SignedCycleType({1}, {})) == 0);
}

TEST_CASE("trace_dn") {
  const BiSymbol s = sym({0, 1}, {2, 3});
  CHECK(trace_dn(s, SignedCycleType({1, 1, 1, 1}, {})) == mn_trace_wn(s, SignedCycleType({1, 1, 1, 1}, {})));
  CHECK(trace_dn(s, SignedCycleType({}, {1, 3})) == mn_trace_wn(s, SignedCycleType({}, {1, 3})));
  CHECK_THROWS_AS(trace_dn(sym({1}, {1}), SignedCycleType({1, 1}, {})), std::invalid_argument);
  CHECK_THROWS_AS(trace_dn(sym({1}, {0, 2}), SignedCycleType({1, 1}, {})), std::invalid_argument);
  CHECK_THROWS_AS(trace_dn(s, SignedCycleType({1}, {3})), std::invalid_argument);
}

TEST_CASE("centralizers and group model") {
  CHECK(wn_centralizer_order(SignedCycleType({1, 1}, {})) == 8);
  CHECK(wn_centralizer_order(SignedCycleType({}, {2})) == 4);
  CHECK(wn_centralizer_order(SignedCycleType({1}, {1})) == 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(enumerate_wn(n).size() == static_cast<std::size_t>(wn_order(n)));
    for (const SignedCycleType& cls : wn_classes(n)) {
      CHECK(class_representative(cls).signed_cycle_type() == cls);
    }
  }
  CHECK(wn_order(4) == 384);
}

TEST_CASE("property: class sizes from centralizers match the explicit group") {
  for (int n = 1; n <= 4; ++n) {
    const auto group = enumerate_wn(n);
    for (const SignedCycleType& cls : wn_classes(n)) {
      const auto size = std::count_if(group.begin(), group.end(),
                                      [&](const SignedPermutation& g) { return g.signed_cycle_type() == cls; });
      CHECK(size * wn_centralizer_order(cls) == wn_order(n));
    }
  }
}

TEST_CASE("character tables of W_n") {
  const CharacterTable t1 = character_table_wn(1);
  CHECK(t1.entries == std::vector<std::vector<Trace>>{{1, 1}, {1, -1}});
  const CharacterTable t2 = character_table_wn(2);
  CHECK(t2.entries.size() == 5);
  CHECK(t2.column_labels.size() == 5);
  const CharacterTable t4 = character_table_wn(4);
  CHECK(t4.column_labels.size() == 20);
  const auto symbols = wn_symbols(4);
  const auto classes = wn_classes(4);
  for (std::size_t r = 0; r < symbols.size(); ++r) {
    for (std::size_t c = 0; c < classes.size(); ++c) CHECK(t4.entries[r][c] == mn_trace_wn(symbols[r], classes[c]));
  }
  CHECK_THROWS_AS(character_table_wn(7), std::out_of_range);
}

TEST_CASE("property: oracle equivalence for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const BiSymbol& s : wn_symbols(n)) {
      for (const SignedCycleType& cls : wn_classes(n)) {
        CHECK_MESSAGE(mn_trace_wn(s, cls) == oracle_trace_wn(s, cls), format_bisymbol(s) << " at " << cls.to_string());
      }
    }
  }
}

TEST_CASE("property: single negative-cycle step matches the expansion") {
  // Remove one negative k-cycle by hand and compare with the full value.
  testgen::Rng rng(31);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int n = rng.uniform(1, 7);
    const SignedCycleType cls = testgen::random_signed_class(rng, n);
    if (cls.negative.empty()) continue;
    const std::vector<BiSymbol> symbols = wn_symbols(n);
    const BiSymbol s = symbols[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(symbols.size()) - 1))];
    const int k = cls.negative[static_cast<std::size_t>(rng.uniform(0, cls.negative_count() - 1))];
    std::vector<int> rest_neg = cls.negative;
    rest_neg.erase(std::find(rest_neg.begin(), rest_neg.end(), k));
    const SignedCycleType rest(cls.positive, rest_neg);
    Trace expansion = 0;
    for (std::size_t i = 0; i < s.top.entries.size(); ++i) {
      expansion += mn_trace_wn(BiSymbol{{minus_at(s.top.entries, i, k)}, s.bottom}, rest);
    }
    for (std::size_t j = 0; j < s.bottom.entries.size(); ++j) {
      expansion -= mn_trace_wn(BiSymbol{s.top, {minus_at(s.bottom.entries, j, k)}}, rest);
    }
    CHECK(expansion == mn_trace_wn(s, cls));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("property: removal order and simultaneous shift") {
  testgen::Rng rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = rng.uniform(0, 7);
    const std::vector<BiSymbol> symbols = wn_symbols(n);
    const BiSymbol s = symbols[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(symbols.size()) - 1))];
    const SignedCycleType cls = testgen::random_signed_class(rng, n);
    const Trace base = mn_trace_wn(s, cls);

    std::vector<SignedCycle> order;
    for (int k : cls.positive) order.push_back({k, false});
    for (int k : cls.negative) order.push_back({k, true});
    std::shuffle(order.begin(), order.end(), rng.engine());
    CHECK(mn_trace_wn_ordered(s, order) == base);

    const int d = rng.uniform(1, 3);
    const BiSymbol shifted{{shift_beta(s.top.entries, d)}, {shift_beta(s.bottom.entries, d)}};
    CHECK(mn_trace_wn(shifted, cls) == base);
  }
}

TEST_CASE("property: chi is multiplicative") {
  testgen::Rng rng(33);
  for (int iter = 0; iter < 200; ++iter) {
    const SignedCycleType a = testgen::random_signed_class(rng, rng.uniform(0, 6));
    const SignedCycleType b = testgen::random_signed_class(rng, rng.uniform(0, 6));
    const SignedCycleType ab(merged(a.positive, b.positive), merged(a.negative, b.negative));
    CHECK(chi_value(ab) == chi_value(a) * chi_value(b));
  }
}

TEST_CASE("property: weighted row orthonormality and positive dimensions") {
  for (int n = 0; n <= 6; ++n) {
    CHECK_MESSAGE(character_table_wn(n).row_orthonormal(), "n=" << n);
    const SignedCycleType identity(std::vector<int>(static_cast<std::size_t>(n), 1), {});
    for (const BiSymbol& s : wn_symbols(n)) CHECK(mn_trace_wn(s, identity) >= 1);
  }
}

TEST_CASE("induction from a Young subgroup of W_n") {
  // Ind from W_2 x W_2 of the trivial character, at the identity: index 6.
  const auto group = enumerate_wn(4);
  const YoungFactorFunction one = [](const SignedPermutation&, const SignedPermutation&) { return std::int64_t{1}; };
  CHECK(induce_from_young(group, 2, one, SignedPermutation::identity(4)) == 6);
  CHECK(induce_from_young(group, 4, one, SignedPermutation::identity(4)) == 1);
}
