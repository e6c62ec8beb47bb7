#pragma once

// Exhaustive checks of the closed-form traces at the distinguished elements
// w_m (negative cycles 2, 4, ..., 2m) and w'_m (negative cycles 1, 3, ...,
// 2m-1), the multiplicity sums built from them, and the W_4 evenness claims.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "symcalc/combinatorics.hpp"
#include "symcalc/report.hpp"

namespace symcalc {

using Rational = boost::rational<std::int64_t>;

/// Largest m accepted by the B/C and D checks.
inline constexpr int kMaxSplitM = 8;

/// lambda: the m+1 elements of {0..2m} not in mu, increasing; mu: m elements.
struct SplitBC {
  int m = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  BiSymbol symbol() const { return {{lambda}, {mu}}; }
};

/// m elements each; together they are {0..2m-1}.
struct SplitD {
  int m = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  BiSymbol symbol() const { return {{lambda}, {mu}}; }
  /// #{k : mu_k >= m}
  int n_count() const;
};

std::string to_string(const SplitBC& s);
std::string to_string(const SplitD& s);

/// All C(2m+1, m) splits, mu in lexicographic order.
std::vector<SplitBC> splits_bc(int m);
/// All C(2m, m) splits, mu in lexicographic order.
std::vector<SplitD> splits_d(int m);

SignedCycleType w_m(int m);
SignedCycleType w_prime_m(int m);

/// No two entries of the same row sum to 2m.
bool star_bc(const SplitBC& s);
/// No two entries of the same row sum to 2m-1.
bool star_d(const SplitD& s);

int even_count(const std::vector<int>& v);

/// Trace of the split's bi-symbol at w_m predicted by the closed form.
Trace predicted_trace_bc(const SplitBC& s);
Trace predicted_trace_d(const SplitD& s);

VerificationReport check_lemma_2_6(int m);
VerificationReport check_lemma_2_7(int m);
VerificationReport check_lemma_2_9(int m);
VerificationReport check_lemma_2_10(int m_prime);

/// sum_J (-1)^{f(J)} tr(w, E_J) before division by 2^m.
struct MultiplicitySum {
  std::int64_t signed_sum = 0;
  std::int64_t scale = 1;  // 2^m
  int nonzero_terms = 0;
  int star_splits = 0;
  /// Per-split signed summands, in splits_bc / splits_d order.
  std::vector<Trace> summands;
};

MultiplicitySum multiplicity_sum_bc(int m);
/// m must be even and >= 2; throws std::invalid_argument otherwise.
MultiplicitySum multiplicity_sum_d(int m);

Rational multiplicity_bc(int m);
Rational multiplicity_d(int m);

VerificationReport check_prop_2_11(int m);
VerificationReport check_prop_2_12(int m);

/// A linear character of W_2 x W_2: on each factor sgn(pi(h))^a * chi(h)^b.
struct YoungLinearCharacter {
  bool sign_first = false;
  bool chi_first = false;
  bool sign_second = false;
  bool chi_second = false;

  std::string to_string() const;
};

/// All 16 linear characters of W_2 x W_2.
std::vector<YoungLinearCharacter> w2xw2_linear_characters();

/// tr(w, Ind_{W_2 x W_2}^{W_4}(eps)) for each class of wn_classes(4).
std::vector<Trace> induced_w2xw2_values(const YoungLinearCharacter& eps);

/// 6 if pi(w) = 1, 2 if pi(w) has order 2, 0 otherwise.
Trace s4_pair_pattern(const SignedCycleType& cls);

VerificationReport check_lemma_2_17();

}  // namespace symcalc
