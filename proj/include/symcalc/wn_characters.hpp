#pragma once

// Virtual characters of the hyperoctahedral group W_n labelled by bi-symbols.
//
// Cycle removal: a negative k-cycle contributes
//   sum_i [l_i - k ; mu] - sum_j [l ; mu_j - k],
// a positive k-cycle the same with a plus sign on the mu-row. Cycles are
// removed one at a time in any order; the empty class evaluates to the sign
// of the normalized bi-symbol when both rows have weight zero.

#include <vector>

#include "symcalc/character_table.hpp"
#include "symcalc/combinatorics.hpp"

namespace symcalc {

inline constexpr int kWnTableBound = 6;
inline constexpr int kWnOracleBound = 4;

struct SignedCycle {
  int length = 1;
  bool negative = false;
};

Trace mn_trace_wn(const BiSymbol& sym, const SignedCycleType& cls);

/// Unmemoized evaluation removing cycles in exactly the given order.
Trace mn_trace_wn_ordered(const BiSymbol& sym, const std::vector<SignedCycle>& cycles_in_order);

/// Induction from W_r x W_{n-r} over an explicit enumeration of W_n, with
/// S-factor values taken from oracle_trace_sn. n <= kWnOracleBound.
Trace oracle_trace_wn(const BiSymbol& sym, const SignedCycleType& cls);

/// (-1)^{number of negative cycles}
int chi_value(const SignedCycleType& cls);

/// Value of the restriction to D_n. Throws std::invalid_argument when cls
/// has an odd number of negative cycles or both rows describe the same
/// partition (the restriction then splits).
Trace trace_dn(const BiSymbol& sym, const SignedCycleType& cls);

/// prod over positive and over negative lengths of (2k)^{m_k} m_k!
std::int64_t wn_centralizer_order(const SignedCycleType& cls);

CharacterTable character_table_wn(int n, int bound = kWnTableBound);

}  // namespace symcalc
