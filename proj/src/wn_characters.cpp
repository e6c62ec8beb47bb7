#include "symcalc/wn_characters.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "symcalc/checked.hpp"
#include "symcalc/hyperoctahedral.hpp"
#include "symcalc/memo_cache.hpp"
#include "symcalc/sn_characters.hpp"

namespace symcalc {

namespace {

MemoCache<Trace>& wn_cache() {
  static MemoCache<Trace> cache;
  return cache;
}

// A row with repeated or negative entries makes the bi-symbol zero on
// every W_n. Returns true in that case.
bool zero_or_weight_checked(const BiSymbol& sym, int n) {
  if (normalize_bisymbol(sym.top, sym.bottom).is_zero()) return true;
  if (sym.weight() != n) {
    throw std::invalid_argument("weight mismatch: bi-symbol has weight " + std::to_string(sym.weight()) +
                                ", class has size " + std::to_string(n));
  }
  return false;
}

// Remaining cycles as a descending list; negative cycles come first among
// equal lengths. The largest cycle is always removed first.
std::vector<SignedCycle> removal_sequence(const SignedCycleType& cls) {
  std::vector<SignedCycle> seq;
  std::size_t p = 0, q = 0;
  while (p < cls.positive.size() || q < cls.negative.size()) {
    const bool take_neg = q < cls.negative.size() &&
                          (p == cls.positive.size() || cls.negative[q] >= cls.positive[p]);
    if (take_neg) {
      seq.push_back({cls.negative[q++], true});
    } else {
      seq.push_back({cls.positive[p++], false});
    }
  }
  return seq;
}

Trace eval_reduced(const std::vector<int>& top, const std::vector<int>& bottom,
                   const std::vector<SignedCycle>& cycles, std::size_t start);

Trace eval_any(const std::vector<int>& top, const std::vector<int>& bottom,
               const std::vector<SignedCycle>& cycles, std::size_t start) {
  const NormalizedBeta t = normalize_beta(top);
  if (t.is_zero()) return 0;
  const NormalizedBeta b = normalize_beta(bottom);
  if (b.is_zero()) return 0;
  return t.sign * b.sign * eval_reduced(reduce_beta(t.canonical), reduce_beta(b.canonical), cycles, start);
}

Trace eval_reduced(const std::vector<int>& top, const std::vector<int>& bottom,
                   const std::vector<SignedCycle>& cycles, std::size_t start) {
  if (start == cycles.size()) return top.empty() && bottom.empty() ? 1 : 0;

  MemoKey key = top;
  key.push_back(-1);
  key.insert(key.end(), bottom.begin(), bottom.end());
  key.push_back(-1);
  for (std::size_t i = start; i < cycles.size(); ++i) {
    key.push_back(cycles[i].negative ? -cycles[i].length - 1 : cycles[i].length);
  }
  if (auto hit = wn_cache().find(key)) return *hit;

  const auto [k, negative] = cycles[start];
  Trace sum = 0;
  std::vector<int> next = top;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] < k) continue;
    next[i] = top[i] - k;
    sum = checked_add(sum, eval_any(next, bottom, cycles, start + 1));
    next[i] = top[i];
  }
  next = bottom;
  for (std::size_t j = 0; j < bottom.size(); ++j) {
    if (bottom[j] < k) continue;
    next[j] = bottom[j] - k;
    const Trace term = eval_any(top, next, cycles, start + 1);
    sum = checked_add(sum, negative ? -term : term);
    next[j] = bottom[j];
  }
  return wn_cache().insert(std::move(key), sum);
}

Trace eval_ordered(const std::vector<int>& top, const std::vector<int>& bottom,
                   const std::vector<SignedCycle>& cycles, std::size_t start) {
  const NormalizedBeta t = normalize_beta(top);
  const NormalizedBeta b = normalize_beta(bottom);
  if (t.is_zero() || b.is_zero()) return 0;
  const int sign = t.sign * b.sign;
  if (start == cycles.size()) {
    return reduce_beta(t.canonical).empty() && reduce_beta(b.canonical).empty() ? sign : 0;
  }
  const auto [k, negative] = cycles[start];
  Trace sum = 0;
  std::vector<int> next = t.canonical;
  for (std::size_t i = 0; i < next.size(); ++i) {
    next[i] -= k;
    sum = checked_add(sum, eval_ordered(next, b.canonical, cycles, start + 1));
    next[i] += k;
  }
  next = b.canonical;
  for (std::size_t j = 0; j < next.size(); ++j) {
    next[j] -= k;
    const Trace term = eval_ordered(t.canonical, next, cycles, start + 1);
    sum = checked_add(sum, negative ? -term : term);
    next[j] += k;
  }
  return sign * sum;
}

std::int64_t centralizer_part(const std::vector<int>& lengths) {
  std::int64_t z = 1;
  for (std::size_t i = 0; i < lengths.size();) {
    std::size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
    for (std::size_t t = i; t < j; ++t) z = checked_mul(z, 2 * lengths[i]);
    for (std::int64_t f = 2; f <= static_cast<std::int64_t>(j - i); ++f) z = checked_mul(z, f);
    i = j;
  }
  return z;
}

}  // namespace

Trace mn_trace_wn(const BiSymbol& sym, const SignedCycleType& cls) {
  if (zero_or_weight_checked(sym, cls.weight())) return 0;
  return eval_any(sym.top.entries, sym.bottom.entries, removal_sequence(cls), 0);
}

Trace mn_trace_wn_ordered(const BiSymbol& sym, const std::vector<SignedCycle>& cycles_in_order) {
  int n = 0;
  for (const auto& c : cycles_in_order) {
    if (c.length < 1) throw std::invalid_argument("cycle lengths must be >= 1");
    n += c.length;
  }
  if (zero_or_weight_checked(sym, n)) return 0;
  return eval_ordered(sym.top.entries, sym.bottom.entries, cycles_in_order, 0);
}

int chi_value(const SignedCycleType& cls) { return cls.negative.size() % 2 == 0 ? 1 : -1; }

Trace oracle_trace_wn(const BiSymbol& sym, const SignedCycleType& cls) {
  const int n = cls.weight();
  if (n > kWnOracleBound) {
    throw std::out_of_range("oracle_trace_wn supports n <= " + std::to_string(kWnOracleBound));
  }
  if (zero_or_weight_checked(sym, n)) return 0;
  const NormalizedBiSymbol norm = normalize_bisymbol(sym.top, sym.bottom);
  const BetaSequence& top = norm.canonical.top;
  const BetaSequence& bottom = norm.canonical.bottom;
  const int r = static_cast<int>(top.weight());

  // Values of the two S-factors, keyed by projected cycle type.
  std::map<std::vector<int>, Trace> top_values, bottom_values;
  auto factor = [](std::map<std::vector<int>, Trace>& memo, const BetaSequence& beta, const SnClass& c) {
    auto it = memo.find(c.cycles);
    if (it == memo.end()) it = memo.emplace(c.cycles, oracle_trace_sn(beta, c)).first;
    return it->second;
  };
  const YoungFactorFunction psi = [&](const SignedPermutation& h1, const SignedPermutation& h2) -> std::int64_t {
    const int twist = h2.flip_count() % 2 == 0 ? 1 : -1;
    return factor(top_values, top, h1.projected_cycle_type()) *
           factor(bottom_values, bottom, h2.projected_cycle_type()) * twist;
  };
  static const std::vector<std::vector<SignedPermutation>> groups = [] {
    std::vector<std::vector<SignedPermutation>> g;
    for (int i = 0; i <= kWnOracleBound; ++i) g.push_back(enumerate_wn(i));
    return g;
  }();
  return norm.sign * induce_from_young(groups[static_cast<std::size_t>(n)], r, psi, class_representative(cls));
}

Trace trace_dn(const BiSymbol& sym, const SignedCycleType& cls) {
  if (!cls.in_type_d()) throw std::invalid_argument("class " + cls.to_string() + " does not lie in D_n");
  const NormalizedBiSymbol norm = normalize_bisymbol(sym.top, sym.bottom);
  if (!norm.is_zero() && reduce_beta(norm.canonical.top.entries) == reduce_beta(norm.canonical.bottom.entries)) {
    throw std::invalid_argument("rows of " + format_bisymbol(sym) + " coincide; restriction to D_n splits");
  }
  return mn_trace_wn(sym, cls);
}

std::int64_t wn_centralizer_order(const SignedCycleType& cls) {
  return checked_mul(centralizer_part(cls.positive), centralizer_part(cls.negative));
}

CharacterTable character_table_wn(int n, int bound) {
  if (n < 0 || n > bound) {
    throw std::out_of_range("W_n table size " + std::to_string(n) + " outside [0, " + std::to_string(bound) + "]");
  }
  CharacterTable t;
  t.group = "W_" + std::to_string(n);
  t.group_order = wn_order(n);
  const auto classes = wn_classes(n);
  for (const auto& c : classes) {
    t.column_labels.push_back(c.to_string());
    t.centralizer_orders.push_back(wn_centralizer_order(c));
  }
  for (const auto& sym : wn_symbols(n)) {
    t.row_labels.push_back(format_list(sym.top.entries) + "|" + format_list(sym.bottom.entries));
    std::vector<Trace> row;
    for (const auto& c : classes) row.push_back(mn_trace_wn(sym, c));
    t.entries.push_back(std::move(row));
  }
  return t;
}

}  // namespace symcalc
