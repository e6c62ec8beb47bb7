#include "symcalc/hyperoctahedral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symcalc/checked.hpp"

namespace symcalc {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  p.flip.assign(static_cast<std::size_t>(n), 0);
  return p;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  SignedPermutation out;
  const std::size_t n = image.size();
  out.image.resize(n);
  out.flip.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mid = static_cast<std::size_t>(other.image[i]);
    out.image[i] = image[mid];
    out.flip[i] = flip[mid] ^ other.flip[i];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  const std::size_t n = image.size();
  out.image.resize(n);
  out.flip.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(image[i]);
    out.image[j] = static_cast<int>(i);
    out.flip[j] = flip[i];
  }
  return out;
}

SignedCycleType SignedPermutation::signed_cycle_type() const {
  std::vector<int> pos, neg;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    int flips = 0;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(image[i])) {
      seen[i] = true;
      ++len;
      flips += flip[i];
    }
    (flips % 2 ? neg : pos).push_back(len);
  }
  return SignedCycleType(std::move(pos), std::move(neg));
}

SnClass SignedPermutation::projected_cycle_type() const {
  const SignedCycleType t = signed_cycle_type();
  std::vector<int> all = t.positive;
  all.insert(all.end(), t.negative.begin(), t.negative.end());
  return SnClass(std::move(all));
}

int SignedPermutation::flip_count() const { return std::accumulate(flip.begin(), flip.end(), 0); }

bool SignedPermutation::stabilizes(int first, int count) const {
  for (int i = first; i < first + count; ++i) {
    const int j = image[static_cast<std::size_t>(i)];
    if (j < first || j >= first + count) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::restrict_to(int first, int count) const {
  if (!stabilizes(first, count)) throw std::invalid_argument("letter block is not stable");
  SignedPermutation out;
  for (int i = first; i < first + count; ++i) {
    out.image.push_back(image[static_cast<std::size_t>(i)] - first);
    out.flip.push_back(flip[static_cast<std::size_t>(i)]);
  }
  return out;
}

SignedPermutation class_representative(const SignedCycleType& cls) {
  SignedPermutation p = SignedPermutation::identity(cls.weight());
  int start = 0;
  auto place = [&](int len, bool negative) {
    for (int i = 0; i < len; ++i) {
      p.image[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    }
    if (negative) p.flip[static_cast<std::size_t>(start + len - 1)] = 1;
    start += len;
  };
  for (int k : cls.positive) place(k, false);
  for (int k : cls.negative) place(k, true);
  return p;
}

std::int64_t wn_order(int n) {
  std::int64_t o = 1;
  for (int i = 1; i <= n; ++i) o = checked_mul(o, 2 * i);
  return o;
}

std::vector<SignedPermutation> enumerate_wn(int n) {
  if (n < 0 || n > 6) throw std::out_of_range("explicit W_n enumeration supports 0 <= n <= 6");
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(wn_order(n)));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPermutation p;
      p.image = perm;
      p.flip.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p.flip[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::int64_t induce_from_young(const std::vector<SignedPermutation>& group, int r,
                               const YoungFactorFunction& psi, const SignedPermutation& g) {
  const int n = g.degree();
  std::int64_t subgroup_order = 0;
  std::int64_t total = 0;
  for (const auto& x : group) {
    if (x.stabilizes(0, r)) ++subgroup_order;
    const SignedPermutation h = x.compose(g).compose(x.inverse());
    if (!h.stabilizes(0, r)) continue;
    total = checked_add(total, psi(h.restrict_to(0, r), h.restrict_to(r, n - r)));
  }
  if (subgroup_order == 0 || total % subgroup_order != 0) {
    throw std::logic_error("induced character sum not divisible by subgroup order");
  }
  return total / subgroup_order;
}

}  // namespace symcalc
