#pragma once

// SO_5 over a small prime field: line classification, exhaustive group
// enumeration, the class C and the virtual character Phi induced from the
// stabilizers of non-degenerate 4-subspaces.
//
// Membership in C is decided by ranks: g is in C iff
//   rank(g - 1) = 4, rank(g + 1) = 3, rank((g + 1)^2) = 2, rank((g + 1)^3) = 1,
// i.e. g = su with s of eigenvalues (1, -1, -1, -1, -1) and u acting on the
// (-1)-eigenspace of s with Jordan blocks (3, 1). Then ker(g + 1) is a
// degenerate plane whose q anisotropic lines share one type, which is delta.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcalc/finite_field.hpp"
#include "symcalc/kernels/line_scan.hpp"
#include "symcalc/report.hpp"

namespace symcalc::so5 {

using Vector5 = std::array<int, 5>;
/// Row-major, entries in [0, q). Acts on column vectors.
using Matrix5 = std::array<std::uint8_t, 25>;

enum class LineType { Plus, Minus, Isotropic };

/// +1, -1, 0
int sign_of(LineType t);

/// Representative with first nonzero coordinate equal to 1.
struct ProjLine {
  Vector5 rep{};
  bool operator==(const ProjLine&) const = default;
};

struct ClassCLabel {
  int epsilon = 1;
  int delta = 1;
  bool operator==(const ClassCLabel&) const = default;
  std::string to_string() const;
};

class QuadraticSpace5 {
 public:
  /// Identity Gram matrix.
  explicit QuadraticSpace5(int q);
  /// Throws std::invalid_argument unless gram is symmetric and invertible.
  QuadraticSpace5(int q, const Matrix5& gram);

  const PrimeField& field() const { return field_; }
  int q() const { return field_.q(); }
  const Matrix5& gram() const { return gram_; }

  int form(const Vector5& x, const Vector5& y) const;
  bool is_special_orthogonal(const Matrix5& g) const;
  /// G^{-1} g^T G; precondition: g orthogonal.
  Matrix5 inverse(const Matrix5& g) const;

 private:
  PrimeField field_;
  Matrix5 gram_{};
  Matrix5 gram_inverse_{};
};

Matrix5 identity5();
Matrix5 multiply(const PrimeField& f, const Matrix5& a, const Matrix5& b);
Vector5 apply(const PrimeField& f, const Matrix5& g, const Vector5& x);
/// Rank of a rows x cols matrix over F_q.
int rank(const PrimeField& f, std::vector<int> a, int rows, int cols);
int determinant(const PrimeField& f, std::vector<int> a, int n);

struct MatrixHash {
  std::size_t operator()(const Matrix5& g) const noexcept;
};

/// All (q^5 - 1)/(q - 1) lines, lexicographic in their representatives.
std::vector<ProjLine> all_lines(int q);
LineType line_type(const QuadraticSpace5& space, const ProjLine& line);

/// c with g x = c x for x spanning the line, mapped to +1 / -1 when c is
/// 1 / q-1 (other residues only occur on isotropic lines); nullopt if the
/// line is not stable.
std::optional<int> fixed_line_scalar(const QuadraticSpace5& space, const Matrix5& g, const ProjLine& line);

struct LineCensus {
  std::int64_t total = 0;
  std::int64_t isotropic = 0;
  std::int64_t plus = 0;
  std::int64_t minus = 0;
};
LineCensus line_census(const QuadraticSpace5& space);

/// q^4 (q^2 - 1)(q^4 - 1)
std::uint64_t so5_order(int q);

/// r_{v0} r_v for every anisotropic line v != v0, plus the cyclic
/// coordinate permutation when it preserves the form.
std::vector<Matrix5> generators(const QuadraticSpace5& space);

/// Breadth-first closure from generators(). Throws std::length_error when
/// the group order exceeds max_elements.
std::vector<Matrix5> enumerate_group(const QuadraticSpace5& space, std::size_t max_elements = 100000);

struct RankProfile {
  int g_minus_1 = 0;
  int g_plus_1 = 0;
  int g_plus_1_sq = 0;
  int g_plus_1_cube = 0;
};
RankProfile rank_profile(const QuadraticSpace5& space, const Matrix5& g);

bool passes_class_c_rank_test(const RankProfile& p);
/// Ranks of elements whose unipotent part has Jordan type (2,2,1):
/// (4, 3, 1). Kept for the diagnostic in verify_so5.
bool passes_221_rank_test(const RankProfile& p);

/// nullopt if g is not in C. Throws std::logic_error if ker(g + 1) has no
/// anisotropic line or two of different types.
std::optional<ClassCLabel> in_class_C(const QuadraticSpace5& space, const Matrix5& g);

/// 2 delta q on C^{eps,delta}, 0 elsewhere.
int phi(const QuadraticSpace5& space, const Matrix5& g);

/// Line-count evaluation of Phi using the vectorized fixed-line scan:
/// 2 #{L of type +1 : g|_L = -1} - 2 #{L of type -1 : g|_L = -1}.
class LineCounter {
 public:
  explicit LineCounter(const QuadraticSpace5& space, kernels::LineScanFn scan = kernels::select_line_scan());

  int trace_Phi(const Matrix5& g) const;
  /// Per-line scalars from the kernel (0 = not stable), in all_lines order.
  std::vector<std::int32_t> scalars(const Matrix5& g) const;

  const std::vector<ProjLine>& lines() const { return lines_; }
  const kernels::LineBatch& batch() const { return batch_; }

 private:
  int q_;
  kernels::LineScanFn scan_;
  std::vector<ProjLine> lines_;
  std::vector<int> weights_;
  kernels::LineBatch batch_;
};

int trace_Phi(const QuadraticSpace5& space, const Matrix5& g);

/// Ind_H^G(psi)(g) = sum over a left transversal {x} with x^{-1} g x in H of
/// psi(x^{-1} g x), for several characters psi of the same subgroup H.
class InducedCharacters {
 public:
  using Membership = std::function<bool(const Matrix5&)>;
  using Character = std::function<int(const Matrix5&)>;

  /// Throws std::logic_error if |H| does not divide |G|.
  InducedCharacters(const QuadraticSpace5& space, const std::vector<Matrix5>& group, Membership contains,
                    std::vector<Character> psis);

  /// One value per character, in constructor order.
  std::vector<std::int64_t> values(const Matrix5& g) const;
  std::int64_t subgroup_order() const { return subgroup_order_; }
  std::size_t index() const { return transversal_.size(); }

 private:
  QuadraticSpace5 space_;
  Membership contains_;
  std::vector<Character> psis_;
  std::int64_t subgroup_order_ = 0;
  std::vector<Matrix5> transversal_;
  std::vector<Matrix5> transversal_inverse_;
};

/// Phi = Ind_{O+}(1) - Ind_{O+}(det) - Ind_{O-}(1) + Ind_{O-}(det), where O+
/// and O- stabilize the perpendicular of an anisotropic line whose
/// perpendicular is split resp. non-split.
class PhiCosetModel {
 public:
  PhiCosetModel(const QuadraticSpace5& space, const std::vector<Matrix5>& group);

  std::int64_t trace(const Matrix5& g) const;
  /// Type of the lines whose perpendicular 4-space is split.
  LineType split_perp_type() const { return split_type_; }
  std::size_t index_plus() const { return plus_.index(); }
  std::size_t index_minus() const { return minus_.index(); }

 private:
  LineType split_type_;
  InducedCharacters plus_;
  InducedCharacters minus_;
};

/// True when the perpendicular of the anisotropic line is a split 4-space
/// (contains (q^2 - 1)(q + 1) nonzero isotropic vectors).
bool perpendicular_is_split(const QuadraticSpace5& space, const ProjLine& line);

struct So5Options {
  int q = 3;
  std::uint64_t seed = 1;
  /// Random conjugation spot checks.
  int conjugation_samples = 200;
  /// Allow full enumeration above q = 3.
  bool full = false;
  /// Random elements checked when not enumerating.
  int random_samples = 2000;
};

/// Full check at q = 3 (or any q with options.full); otherwise a seeded
/// random sample of group elements.
VerificationReport verify_so5(const So5Options& options);

}  // namespace symcalc::so5
