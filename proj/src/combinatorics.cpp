#include "symcalc/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symcalc {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::int64_t BetaSequence::weight() const {
  const std::int64_t a = length();
  std::int64_t sum = 0;
  for (int e : entries) sum += e;
  return sum - a * (a - 1) / 2;
}

SignedCycleType::SignedCycleType(std::vector<int> pos, std::vector<int> neg)
    : positive(std::move(pos)), negative(std::move(neg)) {
  for (const auto* v : {&positive, &negative}) {
    for (int k : *v) {
      if (k < 1) throw std::invalid_argument("cycle lengths must be >= 1");
    }
  }
  std::sort(positive.begin(), positive.end(), std::greater<>());
  std::sort(negative.begin(), negative.end(), std::greater<>());
}

int SignedCycleType::weight() const {
  return std::accumulate(positive.begin(), positive.end(), 0) +
         std::accumulate(negative.begin(), negative.end(), 0);
}

std::string SignedCycleType::to_string() const {
  return "pos:" + format_list(positive, '.') + ";neg:" + format_list(negative, '.');
}

SnClass::SnClass(std::vector<int> c) : cycles(std::move(c)) {
  for (int k : cycles) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be >= 1");
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
}

int SnClass::weight() const { return std::accumulate(cycles.begin(), cycles.end(), 0); }

std::string SnClass::to_string() const { return format_list(cycles, '.'); }

int sorting_sign(const std::vector<int>& v) {
  // inversion parity; symbols are short
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

NormalizedBeta normalize_beta(const std::vector<int>& entries) {
  NormalizedBeta out;
  for (int e : entries) {
    if (e < 0) return out;
  }
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  out.sign = sorting_sign(entries);
  out.canonical = std::move(sorted);
  return out;
}

std::vector<int> shift_beta(const std::vector<int>& entries, int d) {
  if (d < 0) throw std::invalid_argument("shift amount must be non-negative");
  std::vector<int> out;
  out.reserve(entries.size() + static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out.push_back(i);
  for (int e : entries) out.push_back(e + d);
  return out;
}

std::vector<int> reduce_beta(const std::vector<int>& canonical) {
  std::size_t k = 0;
  while (k < canonical.size() && canonical[k] == static_cast<int>(k)) ++k;
  std::vector<int> out;
  out.reserve(canonical.size() - k);
  for (std::size_t i = k; i < canonical.size(); ++i) out.push_back(canonical[i] - static_cast<int>(k));
  return out;
}

BetaSequence partition_to_beta(const Partition& p, int a) {
  const int parts = static_cast<int>(p.parts.size());
  if (a < parts) throw std::invalid_argument("beta length smaller than number of parts");
  BetaSequence beta;
  beta.entries.reserve(static_cast<std::size_t>(a));
  const int pad = a - parts;
  for (int i = 0; i < a; ++i) {
    const int part = i < pad ? 0 : p.parts[static_cast<std::size_t>(i - pad)];
    beta.entries.push_back(part + i);
  }
  return beta;
}

Partition beta_to_partition(const BetaSequence& beta) {
  Partition p;
  for (int i = 0; i < beta.length(); ++i) {
    const int part = beta.entries[static_cast<std::size_t>(i)] - i;
    if (part < 0) throw std::invalid_argument("beta-sequence is not canonical");
    if (part > 0) p.parts.push_back(part);
  }
  return p;
}

NormalizedBiSymbol normalize_bisymbol(const BetaSequence& top, const BetaSequence& bottom) {
  NormalizedBiSymbol out;
  const NormalizedBeta t = normalize_beta(top.entries);
  if (t.is_zero()) return out;
  const NormalizedBeta b = normalize_beta(bottom.entries);
  if (b.is_zero()) return out;
  out.sign = t.sign * b.sign;
  out.canonical.top.entries = t.canonical;
  out.canonical.bottom.entries = b.canonical;
  return out;
}

int cycle_type_weight(const SignedCycleType& t) { return t.weight(); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& desc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{{desc.rbegin(), desc.rend()}});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    desc.push_back(part);
    partitions_rec(remaining - part, part, desc, out);
    desc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> desc;
  partitions_rec(n, n, desc, out);
  return out;
}

std::vector<SnClass> sn_classes(int n) {
  std::vector<SnClass> out;
  for (const auto& p : partitions_of(n)) out.emplace_back(p.parts);
  return out;
}

std::vector<SignedCycleType> wn_classes(int n) {
  std::vector<SignedCycleType> out;
  for (int k = n; k >= 0; --k) {
    for (const auto& pos : partitions_of(k)) {
      for (const auto& neg : partitions_of(n - k)) out.emplace_back(pos.parts, neg.parts);
    }
  }
  return out;
}

BetaSequence canonical_beta(const Partition& p) {
  return partition_to_beta(p, static_cast<int>(p.parts.size()));
}

std::vector<BiSymbol> wn_symbols(int n) {
  std::vector<BiSymbol> out;
  for (int k = n; k >= 0; --k) {
    for (const auto& top : partitions_of(k)) {
      for (const auto& bottom : partitions_of(n - k)) {
        out.push_back(BiSymbol{canonical_beta(top), canonical_beta(bottom)});
      }
    }
  }
  return out;
}

std::string format_list(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_bisymbol(const BiSymbol& s) {
  return "[" + format_list(s.top.entries) + ";" + format_list(s.bottom.entries) + "]";
}

}  // namespace symcalc
