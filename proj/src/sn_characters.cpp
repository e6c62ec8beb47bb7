#include "symcalc/sn_characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symcalc/checked.hpp"
#include "symcalc/memo_cache.hpp"

namespace symcalc {

namespace {

MemoCache<Trace>& sn_cache() {
  static MemoCache<Trace> cache;
  return cache;
}

// The zero symbol vanishes on every S_n, so its weight is not checked.
// Returns true for the zero symbol.
bool zero_or_weight_checked(const BetaSequence& beta, int n) {
  if (normalize_beta(beta.entries).is_zero()) return true;
  if (beta.weight() != n) {
    throw std::invalid_argument("weight mismatch: symbol has weight " + std::to_string(beta.weight()) +
                                ", class has size " + std::to_string(n));
  }
  return false;
}

Trace eval_reduced(const std::vector<int>& reduced, const std::vector<int>& cycles, std::size_t start);

Trace eval_any(const std::vector<int>& entries, const std::vector<int>& cycles, std::size_t start) {
  const NormalizedBeta nb = normalize_beta(entries);
  if (nb.is_zero()) return 0;
  return nb.sign * eval_reduced(reduce_beta(nb.canonical), cycles, start);
}

// `reduced` is canonical and shift-minimal; cycles[start..] remain.
Trace eval_reduced(const std::vector<int>& reduced, const std::vector<int>& cycles, std::size_t start) {
  if (start == cycles.size()) return reduced.empty() ? 1 : 0;

  MemoKey key = reduced;
  key.push_back(-1);
  key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(start), cycles.end());
  if (auto hit = sn_cache().find(key)) return *hit;

  const int k = cycles[start];
  Trace sum = 0;
  std::vector<int> next = reduced;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] < k) continue;  // negative entry: term vanishes
    next[i] = reduced[i] - k;
    sum = checked_add(sum, eval_any(next, cycles, start + 1));
    next[i] = reduced[i];
  }
  return sn_cache().insert(std::move(key), sum);
}

Trace eval_ordered(const std::vector<int>& entries, const std::vector<int>& cycles, std::size_t start) {
  const NormalizedBeta nb = normalize_beta(entries);
  if (nb.is_zero()) return 0;
  if (start == cycles.size()) return reduce_beta(nb.canonical).empty() ? nb.sign : 0;
  const int k = cycles[start];
  Trace sum = 0;
  std::vector<int> next = nb.canonical;
  for (std::size_t i = 0; i < next.size(); ++i) {
    next[i] -= k;
    sum = checked_add(sum, eval_ordered(next, cycles, start + 1));
    next[i] += k;
  }
  return nb.sign * sum;
}

std::int64_t distribute(const std::vector<int>& cycles, std::size_t idx, std::vector<int>& room) {
  if (idx == cycles.size()) return 1;  // all room is zero since sizes match
  std::int64_t count = 0;
  for (int& r : room) {
    if (r < cycles[idx]) continue;
    r -= cycles[idx];
    count += distribute(cycles, idx + 1, room);
    r += cycles[idx];
  }
  return count;
}

std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f = checked_mul(f, i);
  return f;
}

}  // namespace

Trace mn_trace_sn(const BetaSequence& beta, const SnClass& cls) {
  if (zero_or_weight_checked(beta, cls.weight())) return 0;
  // SnClass keeps cycles sorted descending: largest cycle is removed first.
  return eval_any(beta.entries, cls.cycles, 0);
}

Trace mn_trace_sn_ordered(const BetaSequence& beta, const std::vector<int>& cycles_in_order) {
  for (int k : cycles_in_order) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be >= 1");
  }
  if (zero_or_weight_checked(beta, std::accumulate(cycles_in_order.begin(), cycles_in_order.end(), 0))) return 0;
  return eval_ordered(beta.entries, cycles_in_order, 0);
}

std::int64_t young_perm_char(const std::vector<int>& blocks, const SnClass& cls) {
  int total = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative block size");
    total += b;
  }
  if (total != cls.weight()) throw std::invalid_argument("block sizes do not sum to the class size");
  std::vector<int> room = blocks;
  return distribute(cls.cycles, 0, room);
}

Trace oracle_trace_sn(const BetaSequence& beta, const SnClass& cls) {
  if (zero_or_weight_checked(beta, cls.weight())) return 0;
  const std::size_t a = beta.entries.size();
  std::vector<int> order(a);
  std::iota(order.begin(), order.end(), 0);
  Trace sum = 0;
  std::vector<int> blocks(a);
  do {
    bool valid = true;
    for (std::size_t i = 0; i < a && valid; ++i) {
      blocks[i] = beta.entries[static_cast<std::size_t>(order[i])] - static_cast<int>(i);
      valid = blocks[i] >= 0;
    }
    if (!valid) continue;
    sum = checked_add(sum, sorting_sign(order) * young_perm_char(blocks, cls));
  } while (std::next_permutation(order.begin(), order.end()));
  return sum;
}

std::int64_t sn_centralizer_order(const SnClass& cls) {
  std::int64_t z = 1;
  const auto& c = cls.cycles;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int t = 0; t < mult; ++t) z = checked_mul(z, c[i]);
    z = checked_mul(z, factorial(mult));
    i = j;
  }
  return z;
}

CharacterTable character_table_sn(int n, int bound) {
  if (n < 0 || n > bound) {
    throw std::out_of_range("S_n table size " + std::to_string(n) + " outside [0, " + std::to_string(bound) + "]");
  }
  CharacterTable t;
  t.group = "S_" + std::to_string(n);
  t.group_order = factorial(n);
  const auto classes = sn_classes(n);
  for (const auto& c : classes) {
    t.column_labels.push_back(c.to_string());
    t.centralizer_orders.push_back(sn_centralizer_order(c));
  }
  for (const auto& p : partitions_of(n)) {
    const BetaSequence beta = canonical_beta(p);
    t.row_labels.push_back(format_list(beta.entries));
    std::vector<Trace> row;
    for (const auto& c : classes) row.push_back(mn_trace_sn(beta, c));
    t.entries.push_back(std::move(row));
  }
  return t;
}

std::size_t sn_memo_size() { return sn_cache().size(); }

}  // namespace symcalc
