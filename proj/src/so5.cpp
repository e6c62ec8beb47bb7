#include "symcalc/so5.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "symcalc/parallel.hpp"

namespace symcalc::so5 {

namespace {

constexpr std::size_t at(int i, int j) { return static_cast<std::size_t>(5 * i + j); }

std::vector<int> to_ints(const Matrix5& m) { return {m.begin(), m.end()}; }

Matrix5 add_scalar(const PrimeField& f, const Matrix5& g, int c) {
  Matrix5 out = g;
  for (int i = 0; i < 5; ++i) out[at(i, i)] = static_cast<std::uint8_t>(f.add(g[at(i, i)], f.reduce(c)));
  return out;
}

std::string format_matrix(const Matrix5& g) {
  std::string out = "[";
  for (int i = 0; i < 5; ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < 5; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(g[at(i, j)]);
    }
  }
  return out + "]";
}

std::string format_vector(const Vector5& v) {
  std::string out = "(";
  for (int i = 0; i < 5; ++i) out += (i > 0 ? "," : "") + std::to_string(v[static_cast<std::size_t>(i)]);
  return out + ")";
}

// Inverse of an n x n matrix by Gauss-Jordan; throws if singular.
std::vector<int> inverse_matrix(const PrimeField& f, std::vector<int> a, int n) {
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  std::vector<int> inv(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) inv[idx(i, i)] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[idx(piv, col)] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a[idx(col, j)], a[idx(piv, j)]);
      std::swap(inv[idx(col, j)], inv[idx(piv, j)]);
    }
    const int s = f.inv(a[idx(col, col)]);
    for (int j = 0; j < n; ++j) {
      a[idx(col, j)] = f.mul(a[idx(col, j)], s);
      inv[idx(col, j)] = f.mul(inv[idx(col, j)], s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[idx(r, col)] == 0) continue;
      const int t = a[idx(r, col)];
      for (int j = 0; j < n; ++j) {
        a[idx(r, j)] = f.sub(a[idx(r, j)], f.mul(t, a[idx(col, j)]));
        inv[idx(r, j)] = f.sub(inv[idx(r, j)], f.mul(t, inv[idx(col, j)]));
      }
    }
  }
  return inv;
}

Matrix5 to_matrix(const std::vector<int>& a) {
  Matrix5 m{};
  for (std::size_t i = 0; i < 25; ++i) m[i] = static_cast<std::uint8_t>(a[i]);
  return m;
}

Matrix5 reflection(const QuadraticSpace5& space, const Vector5& v) {
  const PrimeField& f = space.field();
  const int s = f.mul(2, f.inv(space.form(v, v)));
  Vector5 gv{};
  for (int j = 0; j < 5; ++j) {
    int acc = 0;
    for (int k = 0; k < 5; ++k) acc += space.gram()[at(j, k)] * v[static_cast<std::size_t>(k)];
    gv[static_cast<std::size_t>(j)] = f.reduce(acc);
  }
  Matrix5 r{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int e = f.mul(s, f.mul(v[static_cast<std::size_t>(i)], gv[static_cast<std::size_t>(j)]));
      r[at(i, j)] = static_cast<std::uint8_t>(f.sub(i == j ? 1 : 0, e));
    }
  }
  return r;
}

// Basis of the perpendicular of a nonzero vector.
std::array<Vector5, 4> perpendicular_basis(const QuadraticSpace5& space, const Vector5& l) {
  const PrimeField& f = space.field();
  Vector5 a{};
  for (int j = 0; j < 5; ++j) {
    int acc = 0;
    for (int k = 0; k < 5; ++k) acc += space.gram()[at(j, k)] * l[static_cast<std::size_t>(k)];
    a[static_cast<std::size_t>(j)] = f.reduce(acc);
  }
  int p = 0;
  while (a[static_cast<std::size_t>(p)] == 0) ++p;
  const int ip = f.inv(a[static_cast<std::size_t>(p)]);
  std::array<Vector5, 4> basis{};
  std::size_t b = 0;
  for (int j = 0; j < 5; ++j) {
    if (j == p) continue;
    Vector5 v{};
    v[static_cast<std::size_t>(j)] = 1;
    v[static_cast<std::size_t>(p)] = f.neg(f.mul(a[static_cast<std::size_t>(j)], ip));
    basis[b++] = v;
  }
  return basis;
}

std::array<std::int32_t, 25> widen(const Matrix5& g) {
  std::array<std::int32_t, 25> out{};
  for (std::size_t i = 0; i < 25; ++i) out[i] = g[i];
  return out;
}

}  // namespace

int sign_of(LineType t) {
  switch (t) {
    case LineType::Plus: return 1;
    case LineType::Minus: return -1;
    case LineType::Isotropic: return 0;
  }
  return 0;
}

std::string ClassCLabel::to_string() const {
  return "C(" + std::to_string(epsilon) + "," + std::to_string(delta) + ")";
}

QuadraticSpace5::QuadraticSpace5(int q) : QuadraticSpace5(q, identity5()) {}

QuadraticSpace5::QuadraticSpace5(int q, const Matrix5& gram) : field_(q) {
  for (std::size_t i = 0; i < 25; ++i) gram_[i] = static_cast<std::uint8_t>(field_.reduce(gram[i]));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < i; ++j) {
      if (gram_[at(i, j)] != gram_[at(j, i)]) throw std::invalid_argument("Gram matrix is not symmetric");
    }
  }
  if (determinant(field_, to_ints(gram_), 5) == 0) throw std::invalid_argument("Gram matrix is degenerate");
  gram_inverse_ = to_matrix(inverse_matrix(field_, to_ints(gram_), 5));
}

int QuadraticSpace5::form(const Vector5& x, const Vector5& y) const {
  std::int64_t acc = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      acc += static_cast<std::int64_t>(x[static_cast<std::size_t>(i)]) * gram_[at(i, j)] * y[static_cast<std::size_t>(j)];
    }
  }
  return field_.reduce(acc);
}

bool QuadraticSpace5::is_special_orthogonal(const Matrix5& g) const {
  // g^T G g == G
  const Matrix5 gg = multiply(field_, gram_, g);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      int acc = 0;
      for (int k = 0; k < 5; ++k) acc += g[at(k, i)] * gg[at(k, j)];
      if (acc % q() != gram_[at(i, j)]) return false;
    }
  }
  return determinant(field_, to_ints(g), 5) == 1;
}

Matrix5 QuadraticSpace5::inverse(const Matrix5& g) const {
  Matrix5 gt{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) gt[at(i, j)] = g[at(j, i)];
  }
  return multiply(field_, multiply(field_, gram_inverse_, gt), gram_);
}

Matrix5 identity5() {
  Matrix5 m{};
  for (int i = 0; i < 5; ++i) m[at(i, i)] = 1;
  return m;
}

Matrix5 multiply(const PrimeField& f, const Matrix5& a, const Matrix5& b) {
  Matrix5 out{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      int acc = 0;
      for (int k = 0; k < 5; ++k) acc += a[at(i, k)] * b[at(k, j)];
      out[at(i, j)] = static_cast<std::uint8_t>(acc % f.q());
    }
  }
  return out;
}

Vector5 apply(const PrimeField& f, const Matrix5& g, const Vector5& x) {
  Vector5 out{};
  for (int i = 0; i < 5; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 5; ++j) acc += g[at(i, j)] * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = f.reduce(acc);
  }
  return out;
}

int rank(const PrimeField& f, std::vector<int> a, int rows, int cols) {
  const auto idx = [cols](int i, int j) { return static_cast<std::size_t>(i * cols + j); };
  for (int& v : a) v = f.reduce(v);
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = r;
    while (piv < rows && a[idx(piv, col)] == 0) ++piv;
    if (piv == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(a[idx(r, j)], a[idx(piv, j)]);
    const int s = f.inv(a[idx(r, col)]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[idx(i, col)] == 0) continue;
      const int t = f.mul(a[idx(i, col)], s);
      for (int j = col; j < cols; ++j) a[idx(i, j)] = f.sub(a[idx(i, j)], f.mul(t, a[idx(r, j)]));
    }
    ++r;
  }
  return r;
}

int determinant(const PrimeField& f, std::vector<int> a, int n) {
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  for (int& v : a) v = f.reduce(v);
  int det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[idx(piv, col)] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a[idx(col, j)], a[idx(piv, j)]);
      det = f.neg(det);
    }
    det = f.mul(det, a[idx(col, col)]);
    const int s = f.inv(a[idx(col, col)]);
    for (int i = col + 1; i < n; ++i) {
      if (a[idx(i, col)] == 0) continue;
      const int t = f.mul(a[idx(i, col)], s);
      for (int j = col; j < n; ++j) a[idx(i, j)] = f.sub(a[idx(i, j)], f.mul(t, a[idx(col, j)]));
    }
  }
  return det;
}

std::size_t MatrixHash::operator()(const Matrix5& g) const noexcept {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(g.data()), g.size()));
}

std::vector<ProjLine> all_lines(int q) {
  std::vector<ProjLine> out;
  for (int lead = 0; lead < 5; ++lead) {
    const int free = 4 - lead;
    int total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (int code = 0; code < total; ++code) {
      ProjLine l;
      l.rep[static_cast<std::size_t>(lead)] = 1;
      int c = code;
      for (int j = 4; j > lead; --j) {
        l.rep[static_cast<std::size_t>(j)] = c % q;
        c /= q;
      }
      out.push_back(l);
    }
  }
  return out;
}

LineType line_type(const QuadraticSpace5& space, const ProjLine& line) {
  const int v = space.form(line.rep, line.rep);
  if (v == 0) return LineType::Isotropic;
  return space.field().is_square(v) ? LineType::Plus : LineType::Minus;
}

std::optional<int> fixed_line_scalar(const QuadraticSpace5& space, const Matrix5& g, const ProjLine& line) {
  const PrimeField& f = space.field();
  const Vector5 y = apply(f, g, line.rep);
  int lead = 0;
  while (line.rep[static_cast<std::size_t>(lead)] == 0) ++lead;
  const int c = y[static_cast<std::size_t>(lead)];
  if (c == 0) return std::nullopt;
  for (int i = 0; i < 5; ++i) {
    if (y[static_cast<std::size_t>(i)] != f.mul(c, line.rep[static_cast<std::size_t>(i)])) return std::nullopt;
  }
  return c == f.minus_one() ? -1 : c;
}

LineCensus line_census(const QuadraticSpace5& space) {
  LineCensus c;
  for (const ProjLine& l : all_lines(space.q())) {
    ++c.total;
    switch (line_type(space, l)) {
      case LineType::Plus: ++c.plus; break;
      case LineType::Minus: ++c.minus; break;
      case LineType::Isotropic: ++c.isotropic; break;
    }
  }
  return c;
}

std::uint64_t so5_order(int q) {
  const std::uint64_t u = static_cast<std::uint64_t>(q);
  const std::uint64_t q2 = u * u;
  return q2 * q2 * (q2 - 1) * (q2 * q2 - 1);
}

std::vector<Matrix5> generators(const QuadraticSpace5& space) {
  std::vector<Matrix5> out;
  Matrix5 cycle{};
  for (int i = 0; i < 5; ++i) cycle[at((i + 1) % 5, i)] = 1;
  if (space.is_special_orthogonal(cycle)) out.push_back(cycle);

  std::optional<Matrix5> r0;
  for (const ProjLine& l : all_lines(space.q())) {
    if (line_type(space, l) == LineType::Isotropic) continue;
    const Matrix5 r = reflection(space, l.rep);
    if (!r0) {
      r0 = r;
      continue;
    }
    out.push_back(multiply(space.field(), *r0, r));
  }
  return out;
}

std::vector<Matrix5> enumerate_group(const QuadraticSpace5& space, std::size_t max_elements) {
  const std::uint64_t expected = so5_order(space.q());
  if (expected > max_elements) {
    throw std::length_error("SO_5(F_" + std::to_string(space.q()) + ") has " + std::to_string(expected) +
                            " elements, above the limit of " + std::to_string(max_elements));
  }
  const PrimeField& f = space.field();
  const std::vector<Matrix5> candidates = generators(space);

  // Add generators one at a time, only when not already in the closure, and
  // redo the closure; a handful of generators suffice in practice.
  std::vector<Matrix5> used;
  std::vector<Matrix5> elements;
  std::unordered_set<Matrix5, MatrixHash> seen;
  const auto close = [&] {
    elements.assign(1, identity5());
    seen.clear();
    seen.insert(identity5());
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const Matrix5& s : used) {
        Matrix5 h = multiply(f, elements[head], s);
        if (seen.insert(h).second) elements.push_back(h);
      }
    }
  };
  close();
  for (const Matrix5& s : candidates) {
    if (elements.size() == expected) break;
    if (seen.contains(s)) continue;
    used.push_back(s);
    close();
  }
  if (elements.size() != expected) {
    throw std::logic_error("group closure has " + std::to_string(elements.size()) + " elements, expected " +
                           std::to_string(expected));
  }
  return elements;
}

RankProfile rank_profile(const QuadraticSpace5& space, const Matrix5& g) {
  const PrimeField& f = space.field();
  const Matrix5 a = add_scalar(f, g, 1);
  const Matrix5 a2 = multiply(f, a, a);
  RankProfile p;
  p.g_minus_1 = rank(f, to_ints(add_scalar(f, g, -1)), 5, 5);
  p.g_plus_1 = rank(f, to_ints(a), 5, 5);
  p.g_plus_1_sq = rank(f, to_ints(a2), 5, 5);
  p.g_plus_1_cube = rank(f, to_ints(multiply(f, a2, a)), 5, 5);
  return p;
}

bool passes_class_c_rank_test(const RankProfile& p) {
  return p.g_minus_1 == 4 && p.g_plus_1 == 3 && p.g_plus_1_sq == 2 && p.g_plus_1_cube == 1;
}

bool passes_221_rank_test(const RankProfile& p) {
  return p.g_minus_1 == 4 && p.g_plus_1 == 3 && p.g_plus_1_sq == 1;
}

std::optional<ClassCLabel> in_class_C(const QuadraticSpace5& space, const Matrix5& g) {
  if (!passes_class_c_rank_test(rank_profile(space, g))) return std::nullopt;
  std::optional<int> eps;
  std::optional<int> delta;
  for (const ProjLine& l : all_lines(space.q())) {
    const std::optional<int> c = fixed_line_scalar(space, g, l);
    if (!c) continue;
    const LineType t = line_type(space, l);
    if (*c == 1) {
      eps = sign_of(t);
    } else if (*c == -1 && t != LineType::Isotropic) {
      if (delta && *delta != sign_of(t)) {
        throw std::logic_error("anisotropic lines of both types in ker(g+1) for g = " + format_matrix(g));
      }
      delta = sign_of(t);
    }
  }
  if (!eps || *eps == 0) throw std::logic_error("ker(g-1) is not an anisotropic line for g = " + format_matrix(g));
  if (!delta) throw std::logic_error("ker(g+1) has no anisotropic line for g = " + format_matrix(g));
  ClassCLabel label;
  label.epsilon = *eps;
  label.delta = *delta;
  return label;
}

int phi(const QuadraticSpace5& space, const Matrix5& g) {
  const std::optional<ClassCLabel> label = in_class_C(space, g);
  return label ? 2 * label->delta * space.q() : 0;
}

LineCounter::LineCounter(const QuadraticSpace5& space, kernels::LineScanFn scan)
    : q_(space.q()), scan_(scan), lines_(all_lines(space.q())) {
  if (space.q() > kernels::kMaxKernelPrime) scan_ = &kernels::line_scan_scalar;
  batch_.count = lines_.size();
  batch_.padded = (lines_.size() + kernels::kLineBatch - 1) / kernels::kLineBatch * kernels::kLineBatch;
  for (int j = 0; j < 5; ++j) {
    batch_.coord[static_cast<std::size_t>(j)].assign(batch_.padded, 0);
    batch_.pivot[static_cast<std::size_t>(j)].assign(batch_.padded, 0);
  }
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    const Vector5& v = lines_[l].rep;
    int lead = 0;
    while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
    for (int j = 0; j < 5; ++j) batch_.coord[static_cast<std::size_t>(j)][l] = v[static_cast<std::size_t>(j)];
    batch_.pivot[static_cast<std::size_t>(lead)][l] = 1;
    weights_.push_back(sign_of(line_type(space, lines_[l])));
  }
}

std::vector<std::int32_t> LineCounter::scalars(const Matrix5& g) const {
  std::vector<std::int32_t> out(batch_.padded);
  scan_(widen(g), batch_, q_, out);
  out.resize(batch_.count);
  return out;
}

int LineCounter::trace_Phi(const Matrix5& g) const {
  const std::vector<std::int32_t> c = scalars(g);
  const int minus = q_ - 1;
  int total = 0;
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (c[l] == minus) total += 2 * weights_[l];
  }
  return total;
}

int trace_Phi(const QuadraticSpace5& space, const Matrix5& g) {
  int total = 0;
  for (const ProjLine& l : all_lines(space.q())) {
    if (fixed_line_scalar(space, g, l) == -1) total += 2 * sign_of(line_type(space, l));
  }
  return total;
}

InducedCharacters::InducedCharacters(const QuadraticSpace5& space, const std::vector<Matrix5>& group,
                                     Membership contains, std::vector<Character> psis)
    : space_(space), contains_(std::move(contains)), psis_(std::move(psis)) {
  const PrimeField& f = space.field();
  for (const Matrix5& h : group) {
    if (contains_(h)) ++subgroup_order_;
  }
  if (subgroup_order_ == 0 || group.size() % static_cast<std::size_t>(subgroup_order_) != 0) {
    throw std::logic_error("subgroup order " + std::to_string(subgroup_order_) + " does not divide " +
                           std::to_string(group.size()));
  }
  const std::size_t index = group.size() / static_cast<std::size_t>(subgroup_order_);
  for (const Matrix5& x : group) {
    if (transversal_.size() == index) break;
    const bool covered = std::any_of(transversal_inverse_.begin(), transversal_inverse_.end(),
                                     [&](const Matrix5& ri) { return contains_(multiply(f, ri, x)); });
    if (covered) continue;
    transversal_.push_back(x);
    transversal_inverse_.push_back(space.inverse(x));
  }
  if (transversal_.size() != index) throw std::logic_error("incomplete coset transversal");
}

std::vector<std::int64_t> InducedCharacters::values(const Matrix5& g) const {
  const PrimeField& f = space_.field();
  std::vector<std::int64_t> out(psis_.size(), 0);
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    const Matrix5 h = multiply(f, multiply(f, transversal_inverse_[i], g), transversal_[i]);
    if (!contains_(h)) continue;
    for (std::size_t k = 0; k < psis_.size(); ++k) out[k] += psis_[k](h);
  }
  return out;
}

bool perpendicular_is_split(const QuadraticSpace5& space, const ProjLine& line) {
  const PrimeField& f = space.field();
  const int q = space.q();
  if (line_type(space, line) == LineType::Isotropic) throw std::invalid_argument("isotropic line");
  const std::array<Vector5, 4> basis = perpendicular_basis(space, line.rep);
  std::int64_t isotropic = 0;
  for (int code = 1; code < q * q * q * q; ++code) {
    Vector5 x{};
    int c = code;
    for (const Vector5& b : basis) {
      const int a = c % q;
      c /= q;
      for (std::size_t i = 0; i < 5; ++i) x[i] = f.add(x[i], f.mul(a, b[i]));
    }
    if (space.form(x, x) == 0) ++isotropic;
  }
  const std::int64_t q64 = q;
  if (isotropic == (q64 * q64 - 1) * (q64 + 1)) return true;
  if (isotropic == (q64 * q64 + 1) * (q64 - 1)) return false;
  throw std::logic_error("perpendicular of " + format_vector(line.rep) + " has " + std::to_string(isotropic) +
                         " isotropic vectors");
}

namespace {

// Stabilizer of l0^perp with the trivial character and det of the action
// on l0^perp, computed in the basis (l0, b1..b4).
InducedCharacters make_stabilizer(const QuadraticSpace5& space, const std::vector<Matrix5>& group,
                                  const ProjLine& l0) {
  const PrimeField& f = space.field();
  const std::array<Vector5, 4> basis = perpendicular_basis(space, l0.rep);
  std::vector<int> p(25);
  for (int i = 0; i < 5; ++i) {
    p[at(i, 0)] = l0.rep[static_cast<std::size_t>(i)];
    for (int j = 0; j < 4; ++j) p[at(i, j + 1)] = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  const Matrix5 pm = to_matrix(p);
  const Matrix5 pinv = to_matrix(inverse_matrix(f, p, 5));
  auto contains = [space, basis, l0](const Matrix5& g) {
    for (const Vector5& b : basis) {
      if (space.form(apply(space.field(), g, b), l0.rep) != 0) return false;
    }
    return true;
  };
  auto trivial = [](const Matrix5&) { return 1; };
  auto det = [field = space.field(), pm, pinv](const Matrix5& g) {
    const PrimeField& fld = field;
    const Matrix5 m = multiply(fld, multiply(fld, pinv, g), pm);
    std::vector<int> block(16);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) block[static_cast<std::size_t>(4 * i + j)] = m[at(i + 1, j + 1)];
    }
    const int d = determinant(fld, block, 4);
    if (d == 1) return 1;
    if (d == fld.minus_one()) return -1;
    throw std::logic_error("stabilizer element with det " + std::to_string(d) + " on the 4-space");
  };
  return InducedCharacters(space, group, contains, {trivial, det});
}

ProjLine first_line_with_perp(const QuadraticSpace5& space, bool split) {
  for (const ProjLine& l : all_lines(space.q())) {
    if (line_type(space, l) != LineType::Isotropic && perpendicular_is_split(space, l) == split) return l;
  }
  throw std::logic_error("no anisotropic line with the requested perpendicular");
}

}  // namespace

PhiCosetModel::PhiCosetModel(const QuadraticSpace5& space, const std::vector<Matrix5>& group)
    : split_type_(line_type(space, first_line_with_perp(space, true))),
      plus_(make_stabilizer(space, group, first_line_with_perp(space, true))),
      minus_(make_stabilizer(space, group, first_line_with_perp(space, false))) {}

std::int64_t PhiCosetModel::trace(const Matrix5& g) const {
  const std::vector<std::int64_t> p = plus_.values(g);
  const std::vector<std::int64_t> m = minus_.values(g);
  return p[0] - p[1] - m[0] + m[1];
}

namespace {

struct ElementResult {
  int label = -1;  // 2 * (epsilon < 0) + (delta < 0), or -1 off C
  int phi = 0;
  int trace = 0;
  std::int64_t coset = 0;
  bool literal = false;
  int literal_anisotropic = 0;  // anisotropic lines in ker(g+1)
  std::string error;
};

int label_index(const ClassCLabel& l) { return 2 * (l.epsilon < 0 ? 1 : 0) + (l.delta < 0 ? 1 : 0); }

ClassCLabel label_of(int index) {
  ClassCLabel l;
  l.epsilon = index / 2 == 0 ? 1 : -1;
  l.delta = index % 2 == 0 ? 1 : -1;
  return l;
}

ElementResult evaluate(const QuadraticSpace5& space, const LineCounter& counter, const PhiCosetModel* coset,
                       const Matrix5& g) {
  ElementResult r;
  try {
    const std::optional<ClassCLabel> label = in_class_C(space, g);
    if (label) {
      r.label = label_index(*label);
      r.phi = 2 * label->delta * space.q();
    }
  } catch (const std::logic_error& e) {
    r.error = e.what();
  }
  r.trace = counter.trace_Phi(g);
  if (coset != nullptr) r.coset = coset->trace(g);
  if (passes_221_rank_test(rank_profile(space, g))) {
    r.literal = true;
    const std::vector<std::int32_t> c = counter.scalars(g);
    for (std::size_t l = 0; l < c.size(); ++l) {
      if (c[l] == space.q() - 1 && line_type(space, counter.lines()[l]) != LineType::Isotropic) {
        ++r.literal_anisotropic;
      }
    }
  }
  return r;
}

Matrix5 random_element(const QuadraticSpace5& space, const std::vector<Matrix5>& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Matrix5 g = identity5();
  for (int i = 0; i < 40; ++i) g = multiply(space.field(), g, gens[pick(rng)]);
  return g;
}

std::string histogram(const std::map<int, std::int64_t>& h) {
  std::string out;
  for (const auto& [k, v] : h) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

VerificationReport verify_so5(const So5Options& options) {
  Stopwatch clock;
  VerificationReport report;
  report.claim = "so5";
  report.params = "q=" + std::to_string(options.q);
  report.seed = options.seed;

  const QuadraticSpace5 space(options.q);
  const int q = options.q;
  const std::int64_t q64 = q;

  const LineCensus census = line_census(space);
  report.detail("lines", std::to_string(census.total));
  report.detail("lines.isotropic", std::to_string(census.isotropic));
  report.detail("lines.type_plus", std::to_string(census.plus));
  report.detail("lines.type_minus", std::to_string(census.minus));
  const std::int64_t expected_lines = (q64 * q64 * q64 * q64 * q64 - 1) / (q64 - 1);
  if (census.total != expected_lines || census.plus + census.minus + census.isotropic != census.total) {
    report.fail("line census", std::to_string(expected_lines), std::to_string(census.total));
  }
  if (census.isotropic != (q64 + 1) * (q64 * q64 + 1)) {
    report.fail("isotropic lines", std::to_string((q64 + 1) * (q64 * q64 + 1)), std::to_string(census.isotropic));
  }

  // Which line type has split perpendicular; the line-count formula assumes
  // it is type +1.
  std::optional<bool> plus_split;
  std::optional<bool> minus_split;
  for (const ProjLine& l : all_lines(q)) {
    const LineType t = line_type(space, l);
    if (t == LineType::Isotropic) continue;
    const bool split = perpendicular_is_split(space, l);
    std::optional<bool>& slot = t == LineType::Plus ? plus_split : minus_split;
    if (slot && *slot != split) report.fail("perpendicular type of " + format_vector(l.rep), "uniform", "mixed");
    slot = split;
  }
  report.detail("split_perpendicular_type", plus_split.value_or(false) ? "+1" : "-1");
  if (!plus_split.value_or(false) || minus_split.value_or(true)) {
    report.fail("lines of type +1 have split perpendicular", "true", "false");
  }

  const LineCounter counter(space);
  report.detail("kernel", std::string(kernels::selected_line_scan_name()));
  const bool exhaustive = q == 3 || options.full;
  report.detail("mode", exhaustive ? "exhaustive" : "sampled");

  std::mt19937_64 rng(options.seed);
  std::vector<Matrix5> group;
  std::vector<Matrix5> sample;
  if (exhaustive) {
    group = enumerate_group(space, static_cast<std::size_t>(so5_order(q)));
  } else {
    const std::vector<Matrix5> gens = generators(space);
    for (int i = 0; i < options.random_samples; ++i) sample.push_back(random_element(space, gens, rng));
  }
  const std::vector<Matrix5>& elements = exhaustive ? group : sample;
  report.detail("elements", std::to_string(elements.size()));
  if (exhaustive) report.detail("group_order", std::to_string(so5_order(q)));

  std::optional<PhiCosetModel> coset;
  if (exhaustive) {
    coset.emplace(space, group);
    report.detail("coset.index_plus", std::to_string(coset->index_plus()));
    report.detail("coset.index_minus", std::to_string(coset->index_minus()));
  }

  const std::vector<ElementResult> results = parallel_map(elements.size(), [&](std::size_t i) {
    return evaluate(space, counter, coset ? &*coset : nullptr, elements[i]);
  });

  std::array<std::int64_t, 4> label_count{};
  std::array<std::optional<std::int64_t>, 4> label_trace{};
  std::array<std::optional<std::size_t>, 4> label_rep{};
  std::map<int, std::int64_t> literal_traces;
  std::int64_t literal_count = 0;
  std::int64_t literal_anisotropic = 0;
  std::int64_t trace_sum = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ElementResult& r = results[i];
    const std::string name = format_matrix(elements[i]);
    if (!r.error.empty()) {
      report.fail(name, "class C label", r.error);
      continue;
    }
    trace_sum += r.trace;
    if (r.trace != r.phi) report.fail(name, "phi=" + std::to_string(r.phi), "trace_Phi=" + std::to_string(r.trace));
    if ((r.trace != 0) != (r.label >= 0)) {
      report.fail(name, "trace_Phi nonzero exactly on C", "trace_Phi=" + std::to_string(r.trace));
    }
    if (coset && r.coset != r.trace) {
      report.fail(name, "coset model " + std::to_string(r.coset), "trace_Phi=" + std::to_string(r.trace));
    }
    if (r.label >= 0) {
      const auto k = static_cast<std::size_t>(r.label);
      ++label_count[k];
      if (!label_rep[k]) label_rep[k] = i;
      if (label_trace[k] && *label_trace[k] != r.trace) {
        report.fail(name, "constant trace on " + label_of(r.label).to_string(), std::to_string(r.trace));
      }
      label_trace[k] = r.trace;
    }
    if (r.literal) {
      ++literal_count;
      ++literal_traces[r.trace];
      literal_anisotropic += r.literal_anisotropic;
    }
  }

  for (int k = 0; k < 4; ++k) {
    const std::string key = "class." + label_of(k).to_string();
    const auto uk = static_cast<std::size_t>(k);
    report.detail(key + ".count", std::to_string(label_count[uk]));
    report.detail(key + ".trace", label_trace[uk] ? std::to_string(*label_trace[uk]) : "-");
    if (exhaustive && label_count[uk] == 0) report.fail(key, "nonempty", "empty");
  }
  report.detail("rank_test_221.count", std::to_string(literal_count));
  report.detail("rank_test_221.trace_histogram", histogram(literal_traces));
  report.detail("rank_test_221.anisotropic_lines_in_ker_g_plus_1", std::to_string(literal_anisotropic));

  if (exhaustive) {
    report.detail("sum_trace_Phi", std::to_string(trace_sum));
    if (trace_sum != 0) report.fail("<Phi,1>", "0", std::to_string(trace_sum));

    // Each label is one conjugacy class: the orbit of a representative
    // fills the whole label.
    for (int k = 0; k < 4; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (!label_rep[uk]) continue;
      const Matrix5& g = group[*label_rep[uk]];
      std::unordered_set<Matrix5, MatrixHash> orbit;
      for (const Matrix5& x : group) {
        orbit.insert(multiply(space.field(), multiply(space.field(), x, g), space.inverse(x)));
      }
      const std::string key = "class." + label_of(k).to_string();
      report.detail(key + ".orbit", std::to_string(orbit.size()));
      if (static_cast<std::int64_t>(orbit.size()) != label_count[uk]) {
        report.fail(key, "single class of size " + std::to_string(label_count[uk]), std::to_string(orbit.size()));
      }
    }
  }

  // Conjugation spot checks.
  const std::vector<Matrix5> gens = generators(space);
  int conj_checked = 0;
  for (int s = 0; s < options.conjugation_samples && !elements.empty(); ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    const std::size_t gi = pick(rng);
    const Matrix5 x = exhaustive ? group[pick(rng)] : random_element(space, gens, rng);
    const Matrix5 h = multiply(space.field(), multiply(space.field(), x, elements[gi]), space.inverse(x));
    const ElementResult& before = results[gi];
    if (!before.error.empty()) continue;
    const ElementResult after = evaluate(space, counter, nullptr, h);
    ++conj_checked;
    if (after.label != before.label || after.trace != before.trace || after.phi != before.phi) {
      report.fail("conjugate of " + format_matrix(elements[gi]), "label " + std::to_string(before.label),
                  "label " + std::to_string(after.label));
    }
  }
  report.detail("conjugation_checks", std::to_string(conj_checked));

  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace symcalc::so5
