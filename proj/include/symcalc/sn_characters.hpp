#pragma once

// Characters of the symmetric group evaluated directly on beta-sequences.
//
// mn_trace_sn strips one k-cycle at a time, replacing the symbol by the
// signed sum of the symbols obtained by subtracting k from a single entry.
// oracle_trace_sn expands the same virtual character as an alternating sum
// of Young-subgroup permutation characters and counts fixed points
// combinatorially; the two routes share nothing but normalize_beta.

#include <cstdint>
#include <vector>

#include "symcalc/character_table.hpp"
#include "symcalc/combinatorics.hpp"

namespace symcalc {

/// Default bound for character_table_sn.
inline constexpr int kSnTableBound = 8;

/// 0 for the zero symbol. Otherwise throws std::invalid_argument when
/// weight(beta) differs from |cls|.
Trace mn_trace_sn(const BetaSequence& beta, const SnClass& cls);

/// Same recursion, removing cycles exactly in the given order and without
/// memoization. Used to test that the value does not depend on the order.
Trace mn_trace_sn_ordered(const BetaSequence& beta, const std::vector<int>& cycles_in_order);

Trace oracle_trace_sn(const BetaSequence& beta, const SnClass& cls);

/// Number of ways to distribute the cycles of cls into blocks so that each
/// block receives total length equal to its size. Zero-size blocks allowed.
std::int64_t young_perm_char(const std::vector<int>& blocks, const SnClass& cls);

/// z = prod_k k^{m_k} m_k!
std::int64_t sn_centralizer_order(const SnClass& cls);

CharacterTable character_table_sn(int n, int bound = kSnTableBound);

/// Entries of the memo cache backing mn_trace_sn (diagnostics).
std::size_t sn_memo_size();

}  // namespace symcalc
