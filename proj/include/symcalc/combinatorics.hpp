#pragma once

// Integer-sequence encodings of (virtual) characters of S_n and W_n.
//
// A beta-sequence [l_1, ..., l_a] stands for a virtual character of S_n with
// n = sum(l_i) - a(a-1)/2. Repeated or negative entries give the zero
// character; otherwise the entries may be sorted at the cost of the sign of
// the sorting permutation. Prepending 0 and adding 1 to every entry does not
// change the character, so every nonzero symbol has a unique shift-minimal
// representative which is used as the canonical form throughout.

#include <cstdint>
#include <string>
#include <vector>

namespace symcalc {

using Trace = std::int64_t;

/// Weakly increasing sequence of positive parts (canonical form).
struct Partition {
  std::vector<int> parts;

  int size() const;
  bool operator==(const Partition&) const = default;
};

struct BetaSequence {
  std::vector<int> entries;

  int length() const { return static_cast<int>(entries.size()); }
  /// sum(entries) - a(a-1)/2; may be negative for arbitrary inputs.
  std::int64_t weight() const;
  bool operator==(const BetaSequence&) const = default;
};

/// Result of applying the zero and sign rules. sign == 0 encodes Zero.
struct NormalizedBeta {
  int sign = 0;
  std::vector<int> canonical;

  bool is_zero() const { return sign == 0; }
  bool operator==(const NormalizedBeta&) const = default;
};

struct BiSymbol {
  BetaSequence top;     // lambda-row
  BetaSequence bottom;  // mu-row

  std::int64_t weight() const { return top.weight() + bottom.weight(); }
  /// Size r of the W_r factor carrying the top row.
  std::int64_t r() const { return top.weight(); }
  std::int64_t r_tilde() const { return bottom.weight(); }
  bool operator==(const BiSymbol&) const = default;
};

struct NormalizedBiSymbol {
  int sign = 0;
  BiSymbol canonical;

  bool is_zero() const { return sign == 0; }
};

/// Conjugacy class label of W_n. Both multisets are kept sorted descending.
struct SignedCycleType {
  std::vector<int> positive;
  std::vector<int> negative;

  SignedCycleType() = default;
  SignedCycleType(std::vector<int> pos, std::vector<int> neg);

  int weight() const;
  int negative_count() const { return static_cast<int>(negative.size()); }
  bool in_type_d() const { return negative.size() % 2 == 0; }
  /// "pos:k1.k2;neg:k3.k4"
  std::string to_string() const;
  bool operator==(const SignedCycleType&) const = default;
};

/// Cycle type of an element of S_n, sorted descending.
struct SnClass {
  std::vector<int> cycles;

  SnClass() = default;
  explicit SnClass(std::vector<int> c);

  int weight() const;
  /// "k1.k2.k3"
  std::string to_string() const;
  bool operator==(const SnClass&) const = default;
};

NormalizedBeta normalize_beta(const std::vector<int>& entries);

/// Applies l -> [0, l_1 + 1, ..., l_a + 1] d times.
std::vector<int> shift_beta(const std::vector<int>& entries, int d);

/// Inverse of shift_beta on canonical sequences: strips removable 0,1,...
/// prefixes. Precondition: strictly increasing and non-negative.
std::vector<int> reduce_beta(const std::vector<int>& canonical);

/// Throws std::invalid_argument if a is smaller than the number of parts.
BetaSequence partition_to_beta(const Partition& p, int a);
/// Precondition: strictly increasing, non-negative entries.
Partition beta_to_partition(const BetaSequence& beta);

NormalizedBiSymbol normalize_bisymbol(const BetaSequence& top, const BetaSequence& bottom);

int cycle_type_weight(const SignedCycleType& t);

/// Sign (+1/-1) of the permutation sorting distinct values ascending.
int sorting_sign(const std::vector<int>& distinct_values);

/// All partitions of n, in reverse lexicographic order of their
/// descending presentation: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Cycle types of S_n in the same order as partitions_of.
std::vector<SnClass> sn_classes(int n);

/// All (positive, negative) partition pairs of total size n.
std::vector<SignedCycleType> wn_classes(int n);

/// Canonical shift-minimal beta-sequence of a partition.
BetaSequence canonical_beta(const Partition& p);

/// Canonical bi-symbols of weight n, one per bipartition, ordered by the
/// size of the top partition descending then partitions_of order.
std::vector<BiSymbol> wn_symbols(int n);

/// Comma-separated rendering, e.g. "1,3"; empty sequence renders as "".
std::string format_list(const std::vector<int>& v, char sep = ',');
std::string format_bisymbol(const BiSymbol& s);

}  // namespace symcalc
