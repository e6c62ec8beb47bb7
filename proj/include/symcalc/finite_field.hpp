#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcalc {

/// F_q for an odd prime q. Elements are represented by 0..q-1.
class PrimeField {
 public:
  explicit PrimeField(int q) : q_(q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("field size must be an odd prime, got " + std::to_string(q));
    for (int d = 3; d * d <= q; d += 2) {
      if (q % d == 0) throw std::invalid_argument("field size must be an odd prime, got " + std::to_string(q));
    }
    inverse_.assign(static_cast<std::size_t>(q), 0);
    square_.assign(static_cast<std::size_t>(q), false);
    for (int a = 1; a < q; ++a) {
      square_[static_cast<std::size_t>(a * a % q)] = true;
      for (int b = 1; b < q; ++b) {
        if (a * b % q == 1) inverse_[static_cast<std::size_t>(a)] = b;
      }
    }
  }

  int q() const { return q_; }
  int reduce(std::int64_t v) const { return static_cast<int>(((v % q_) + q_) % q_); }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return a * b % q_; }
  int neg(int a) const { return (q_ - a) % q_; }
  /// Precondition: a != 0.
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// Nonzero square.
  bool is_square(int a) const { return square_[static_cast<std::size_t>(a)]; }
  int minus_one() const { return q_ - 1; }

 private:
  int q_;
  std::vector<int> inverse_;
  std::vector<bool> square_;
};

}  // namespace symcalc
