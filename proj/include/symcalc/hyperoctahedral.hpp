#pragma once

// Explicit model of W_n as signed permutations of {0, ..., n-1}. Only used
// by oracles and small exhaustive checks, so nothing here is optimized.

#include <cstdint>
#include <functional>
#include <vector>

#include "symcalc/combinatorics.hpp"

namespace symcalc {

/// Letter i goes to image[i], primed when flip[i] is set.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<std::uint8_t> flip;

  static SignedPermutation identity(int n);
  int degree() const { return static_cast<int>(image.size()); }

  /// (*this)(other(i))
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  SignedCycleType signed_cycle_type() const;
  /// Cycle type of the image under W_n -> S_n.
  SnClass projected_cycle_type() const;
  /// Number of letters sent to primed letters.
  int flip_count() const;
  bool in_type_d() const { return flip_count() % 2 == 0; }

  /// Restriction to letters [first, first + count), which must be stable.
  SignedPermutation restrict_to(int first, int count) const;
  bool stabilizes(int first, int count) const;

  bool operator==(const SignedPermutation&) const = default;
};

/// A signed permutation of the given class: consecutive letter blocks, one
/// per cycle, with a single flip closing each negative cycle.
SignedPermutation class_representative(const SignedCycleType& cls);

/// Every element of W_n; n is limited to 6 (46080 elements).
std::vector<SignedPermutation> enumerate_wn(int n);

std::int64_t wn_order(int n);

/// Class function on W_r x W_{n-r}, given the two restricted factors.
using YoungFactorFunction = std::function<std::int64_t(const SignedPermutation&, const SignedPermutation&)>;

/// Induced character Ind_{W_r x W_{n-r}}^{W_n}(psi) at g, via
/// |H|^{-1} sum_{x in W_n} psi(x g x^{-1}) over an explicit enumeration.
std::int64_t induce_from_young(const std::vector<SignedPermutation>& group, int r,
                               const YoungFactorFunction& psi, const SignedPermutation& g);

}  // namespace symcalc
