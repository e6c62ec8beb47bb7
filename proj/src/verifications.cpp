#include "symcalc/verifications.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symcalc/checked.hpp"
#include "symcalc/hyperoctahedral.hpp"
#include "symcalc/parallel.hpp"
#include "symcalc/sn_characters.hpp"
#include "symcalc/wn_characters.hpp"

namespace symcalc {

namespace {

// Size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int x = 0, i = 0; x < n; ++x) {
    if (i < static_cast<int>(subset.size()) && subset[static_cast<std::size_t>(i)] == x) {
      ++i;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool row_avoids_sum(const std::vector<int>& row, int target) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) {
      if (row[i] + row[j] == target) return false;
    }
  }
  return true;
}

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2 + 2) % 2 == 0; }

void require_m(int m, int lo, const char* what) {
  if (m < lo || m > kMaxSplitM) {
    throw std::out_of_range(std::string(what) + ": m=" + std::to_string(m) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxSplitM) + "]");
  }
}

std::string m_param(int m) { return "m=" + std::to_string(m); }

}  // namespace

int SplitD::n_count() const {
  return static_cast<int>(std::count_if(mu.begin(), mu.end(), [this](int x) { return x >= m; }));
}

std::string to_string(const SplitBC& s) { return "[" + format_list(s.lambda) + ";" + format_list(s.mu) + "]"; }
std::string to_string(const SplitD& s) { return "[" + format_list(s.lambda) + ";" + format_list(s.mu) + "]"; }

std::vector<SplitBC> splits_bc(int m) {
  std::vector<SplitBC> out;
  for (auto& mu : combinations(2 * m + 1, m)) {
    out.push_back(SplitBC{m, complement(2 * m + 1, mu), std::move(mu)});
  }
  return out;
}

std::vector<SplitD> splits_d(int m) {
  std::vector<SplitD> out;
  for (auto& mu : combinations(2 * m, m)) {
    out.push_back(SplitD{m, complement(2 * m, mu), std::move(mu)});
  }
  return out;
}

SignedCycleType w_m(int m) {
  if (m < 0) throw std::invalid_argument("w_m requires m >= 0");
  std::vector<int> neg;
  for (int k = 1; k <= m; ++k) neg.push_back(2 * k);
  return SignedCycleType({}, std::move(neg));
}

SignedCycleType w_prime_m(int m) {
  if (m < 1) throw std::invalid_argument("w'_m requires m >= 1");
  std::vector<int> neg;
  for (int k = 1; k <= m; ++k) neg.push_back(2 * k - 1);
  return SignedCycleType({}, std::move(neg));
}

bool star_bc(const SplitBC& s) { return row_avoids_sum(s.lambda, 2 * s.m) && row_avoids_sum(s.mu, 2 * s.m); }

bool star_d(const SplitD& s) { return row_avoids_sum(s.lambda, 2 * s.m - 1) && row_avoids_sum(s.mu, 2 * s.m - 1); }

int even_count(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x % 2 == 0; }));
}

Trace predicted_trace_bc(const SplitBC& s) {
  return star_bc(s) ? parity_sign((s.m * s.m + s.m) / 2) : 0;
}

Trace predicted_trace_d(const SplitD& s) {
  return star_d(s) ? parity_sign(s.n_count() + s.m * (s.m - 1) / 2) : 0;
}

VerificationReport check_lemma_2_6(int m) {
  require_m(m, 0, "lemma26");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma26";
  r.params = m_param(m);
  const auto splits = splits_bc(m);
  const SignedCycleType w = w_m(m);
  const auto got = parallel_map(splits.size(), [&](std::size_t i) { return mn_trace_wn(splits[i].symbol(), w); });
  int star = 0;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    star += star_bc(splits[i]);
    const Trace expected = predicted_trace_bc(splits[i]);
    if (got[i] != expected) r.fail(to_string(splits[i]), std::to_string(expected), std::to_string(got[i]));
  }
  r.detail("splits", std::to_string(splits.size()));
  r.detail("star_splits", std::to_string(star));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport check_lemma_2_7(int m) {
  require_m(m, 0, "lemma27");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma27";
  r.params = m_param(m);
  int star = 0;
  const int target = (m * m + m) / 2;
  for (const auto& s : splits_bc(m)) {
    if (!star_bc(s)) continue;
    ++star;
    const int evens = even_count(s.mu);
    if (!same_parity(evens, target)) {
      r.fail(to_string(s), "even_mu=" + std::to_string(target) + " mod 2", "even_mu=" + std::to_string(evens));
    }
  }
  r.detail("star_splits", std::to_string(star));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport check_lemma_2_9(int m) {
  require_m(m, 1, "lemma29");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma29";
  r.params = m_param(m);
  const auto splits = splits_d(m);
  const SignedCycleType w = w_prime_m(m);
  const auto got = parallel_map(splits.size(), [&](std::size_t i) { return mn_trace_wn(splits[i].symbol(), w); });
  int star = 0;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    star += star_d(splits[i]);
    const Trace expected = predicted_trace_d(splits[i]);
    if (got[i] != expected) r.fail(to_string(splits[i]), std::to_string(expected), std::to_string(got[i]));
  }
  r.detail("splits", std::to_string(splits.size()));
  r.detail("star_splits", std::to_string(star));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport check_lemma_2_10(int m_prime) {
  if (m_prime < 1 || 2 * m_prime > kMaxSplitM) {
    throw std::out_of_range("lemma210: m'=" + std::to_string(m_prime) + " outside [1, " +
                            std::to_string(kMaxSplitM / 2) + "]");
  }
  Stopwatch clock;
  const int m = 2 * m_prime;
  VerificationReport r;
  r.claim = "lemma210";
  r.params = m_param(m) + " m'=" + std::to_string(m_prime);
  int star = 0;
  for (const auto& s : splits_d(m)) {
    if (!star_d(s)) continue;
    ++star;
    const int n = s.n_count();
    const int evens = even_count(s.mu);
    if (!same_parity(n - evens, m_prime)) {
      r.fail(to_string(s) + " (a)", "N-even=" + std::to_string(m_prime) + " mod 2",
             "N-even=" + std::to_string(n - evens));
    }
    if (!same_parity(evens, n + m * (m - 1) / 2)) {
      r.fail(to_string(s) + " (b)", "even=" + std::to_string(n + m * (m - 1) / 2) + " mod 2",
             "even=" + std::to_string(evens));
    }
  }
  r.detail("star_splits", std::to_string(star));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

MultiplicitySum multiplicity_sum_bc(int m) {
  require_m(m, 1, "multiplicity_bc");
  const auto splits = splits_bc(m);
  const SignedCycleType w = w_m(m);
  MultiplicitySum out;
  out.scale = std::int64_t{1} << m;
  out.summands = parallel_map(splits.size(), [&](std::size_t i) {
    return parity_sign(even_count(splits[i].mu)) * mn_trace_wn(splits[i].symbol(), w);
  });
  for (std::size_t i = 0; i < splits.size(); ++i) {
    out.signed_sum = checked_add(out.signed_sum, out.summands[i]);
    out.nonzero_terms += out.summands[i] != 0;
    out.star_splits += star_bc(splits[i]);
  }
  return out;
}

MultiplicitySum multiplicity_sum_d(int m) {
  require_m(m, 2, "multiplicity_d");
  if (m % 2 != 0) throw std::invalid_argument("multiplicity_d: m=" + std::to_string(m) + " must be even");
  const auto splits = splits_d(m);
  const SignedCycleType w = w_prime_m(m);
  MultiplicitySum out;
  out.scale = std::int64_t{1} << m;
  out.summands = parallel_map(splits.size(), [&](std::size_t i) {
    return parity_sign(even_count(splits[i].mu)) * trace_dn(splits[i].symbol(), w);
  });
  for (std::size_t i = 0; i < splits.size(); ++i) {
    out.signed_sum = checked_add(out.signed_sum, out.summands[i]);
    out.nonzero_terms += out.summands[i] != 0;
    out.star_splits += star_d(splits[i]);
  }
  return out;
}

Rational multiplicity_bc(int m) {
  const auto s = multiplicity_sum_bc(m);
  return Rational(s.signed_sum, s.scale);
}

Rational multiplicity_d(int m) {
  const auto s = multiplicity_sum_d(m);
  return Rational(s.signed_sum, s.scale);
}

namespace {

std::string rational_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

template <typename Split>
void check_multiplicity(VerificationReport& r, const MultiplicitySum& sum, const std::vector<Split>& splits,
                        bool (*star)(const Split&)) {
  const Rational value(sum.signed_sum, sum.scale);
  r.detail("multiplicity", rational_string(value));
  r.detail("signed_sum", std::to_string(sum.signed_sum));
  r.detail("scale", std::to_string(sum.scale));
  r.detail("star_splits", std::to_string(sum.star_splits));
  if (value != Rational(1)) r.fail("multiplicity", "1", rational_string(value));
  if (sum.signed_sum % sum.scale != 0) {
    r.fail("divisibility", "signed_sum divisible by " + std::to_string(sum.scale), std::to_string(sum.signed_sum));
  }
  if (sum.star_splits != sum.scale) {
    r.fail("star_split_count", std::to_string(sum.scale), std::to_string(sum.star_splits));
  }
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (!star(splits[i]) && sum.summands[i] != 0) r.fail(to_string(splits[i]), "0", std::to_string(sum.summands[i]));
  }
}

}  // namespace

VerificationReport check_prop_2_11(int m) {
  require_m(m, 1, "prop211");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "prop211";
  r.params = m_param(m);
  check_multiplicity(r, multiplicity_sum_bc(m), splits_bc(m), &star_bc);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport check_prop_2_12(int m) {
  require_m(m, 2, "prop212");
  if (m % 2 != 0) throw std::invalid_argument("prop212: m=" + std::to_string(m) + " must be even");
  Stopwatch clock;
  VerificationReport r;
  r.claim = "prop212";
  r.params = m_param(m);
  const auto sum = multiplicity_sum_d(m);
  const auto splits = splits_d(m);
  check_multiplicity(r, sum, splits, &star_d);
  // J and I-J give the same restricted character and the same sign.
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const auto partner = std::find_if(splits.begin(), splits.end(),
                                      [&](const SplitD& s) { return s.mu == splits[i].lambda; });
    const auto j = static_cast<std::size_t>(partner - splits.begin());
    if (sum.summands[i] != sum.summands[j]) {
      r.fail(to_string(splits[i]) + " vs complement", std::to_string(sum.summands[i]), std::to_string(sum.summands[j]));
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::string YoungLinearCharacter::to_string() const {
  auto factor = [](bool sgn, bool chi) {
    if (sgn && chi) return std::string("sgn*chi");
    if (sgn) return std::string("sgn");
    if (chi) return std::string("chi");
    return std::string("1");
  };
  return factor(sign_first, chi_first) + "x" + factor(sign_second, chi_second);
}

std::vector<YoungLinearCharacter> w2xw2_linear_characters() {
  std::vector<YoungLinearCharacter> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    out.push_back({(mask & 1u) != 0, (mask & 2u) != 0, (mask & 4u) != 0, (mask & 8u) != 0});
  }
  return out;
}

namespace {

int permutation_sign(const SignedPermutation& h) {
  const SnClass c = h.projected_cycle_type();
  return (h.degree() - static_cast<int>(c.cycles.size())) % 2 == 0 ? 1 : -1;
}

int linear_factor(const SignedPermutation& h, bool sgn, bool chi) {
  int v = 1;
  if (sgn) v *= permutation_sign(h);
  if (chi && h.flip_count() % 2 != 0) v = -v;
  return v;
}

}  // namespace

std::vector<Trace> induced_w2xw2_values(const YoungLinearCharacter& eps) {
  static const std::vector<SignedPermutation> w4 = enumerate_wn(4);
  const YoungFactorFunction psi = [&](const SignedPermutation& h1, const SignedPermutation& h2) -> std::int64_t {
    return linear_factor(h1, eps.sign_first, eps.chi_first) * linear_factor(h2, eps.sign_second, eps.chi_second);
  };
  std::vector<Trace> out;
  for (const auto& cls : wn_classes(4)) out.push_back(induce_from_young(w4, 2, psi, class_representative(cls)));
  return out;
}

Trace s4_pair_pattern(const SignedCycleType& cls) {
  std::vector<int> all = cls.positive;
  all.insert(all.end(), cls.negative.begin(), cls.negative.end());
  int order = 1;
  for (int k : all) order = std::lcm(order, k);
  if (order == 1) return 6;
  if (order == 2) return 2;
  return 0;
}

VerificationReport check_lemma_2_17() {
  Stopwatch clock;
  VerificationReport r;
  r.claim = "lemma217";
  r.params = "n=4";
  const auto classes = wn_classes(4);
  const auto characters = w2xw2_linear_characters();
  for (const auto& eps : characters) {
    const auto values = induced_w2xw2_values(eps);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (values[c] % 2 != 0) {
        r.fail("ind(" + eps.to_string() + ") at " + classes[c].to_string(), "even", std::to_string(values[c]));
      }
    }
  }
  // Trivial character: value depends only on the image in S_4.
  const auto trivial = induced_w2xw2_values({});
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Trace pattern = s4_pair_pattern(classes[c]);
    if (trivial[c] != pattern) {
      r.fail("ind(1) at " + classes[c].to_string(), std::to_string(pattern), std::to_string(trivial[c]));
    }
    std::vector<int> all = classes[c].positive;
    all.insert(all.end(), classes[c].negative.begin(), classes[c].negative.end());
    const Trace s4 = young_perm_char({2, 2}, SnClass(all));
    if (trivial[c] != s4) {
      r.fail("ind_{S2xS2}^{S4}(1) at " + classes[c].to_string(), std::to_string(s4), std::to_string(trivial[c]));
    }
  }
  // (ii): the character [1,2 ; 2] is induced from sgn x chi.
  const BiSymbol e{{{1, 2}}, {{2}}};
  const auto sgn_chi = induced_w2xw2_values({true, false, false, true});
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Trace v = mn_trace_wn(e, classes[c]);
    if (v % 2 != 0) r.fail("[1,2;2] at " + classes[c].to_string(), "even", std::to_string(v));
    if (v != sgn_chi[c]) {
      r.fail("[1,2;2] vs ind(sgn x chi) at " + classes[c].to_string(), std::to_string(sgn_chi[c]), std::to_string(v));
    }
  }
  r.detail("linear_characters", std::to_string(characters.size()));
  r.detail("classes", std::to_string(classes.size()));
  r.detail("dim_E", std::to_string(mn_trace_wn(e, SignedCycleType({1, 1, 1, 1}, {}))));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace symcalc
