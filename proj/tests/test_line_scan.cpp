#include <doctest.h>

#include <random>

#include "symcalc/kernels/line_scan.hpp"
#include "symcalc/so5.hpp"

using namespace symcalc;
using namespace symcalc::so5;

namespace {

std::array<std::int32_t, 25> random_matrix(std::mt19937_64& rng, int q) {
  std::uniform_int_distribution<int> d(0, q - 1);
  std::array<std::int32_t, 25> g{};
  for (auto& x : g) x = d(rng);
  return g;
}

Matrix5 narrow(const std::array<std::int32_t, 25>& g) {
  Matrix5 m{};
  for (std::size_t i = 0; i < 25; ++i) m[i] = static_cast<std::uint8_t>(g[i]);
  return m;
}

// Scalar c with g x = c x as a residue, or 0.
std::vector<std::int32_t> expected_scalars(const QuadraticSpace5& space, const LineCounter& counter, const Matrix5& g) {
  std::vector<std::int32_t> out;
  for (const ProjLine& l : counter.lines()) {
    const Vector5 y = apply(space.field(), g, l.rep);
    int lead = 0;
    while (l.rep[static_cast<std::size_t>(lead)] == 0) ++lead;
    const int c = y[static_cast<std::size_t>(lead)];
    bool ok = c != 0;
    for (std::size_t i = 0; i < 5 && ok; ++i) ok = y[i] == space.field().mul(c, l.rep[i]);
    out.push_back(ok ? c : 0);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernel matches a direct evaluation") {
  std::mt19937_64 rng(41);
  for (int q : {3, 5, 7}) {
    const QuadraticSpace5 space(q);
    const LineCounter counter(space, &kernels::line_scan_scalar);
    for (int iter = 0; iter < 20; ++iter) {
      const Matrix5 g = narrow(random_matrix(rng, q));
      CHECK(counter.scalars(g) == expected_scalars(space, counter, g));
    }
    // Scalar matrices fix every line.
    Matrix5 two{};
    for (int i = 0; i < 5; ++i) two[static_cast<std::size_t>(6 * i)] = 2;
    for (std::int32_t c : counter.scalars(two)) CHECK(c == 2);
  }
}

TEST_CASE("batch layout") {
  const LineCounter counter(QuadraticSpace5(3));
  const kernels::LineBatch& b = counter.batch();
  CHECK(b.count == 121);
  CHECK(b.padded % kernels::kLineBatch == 0);
  CHECK(b.padded >= b.count);
  for (std::size_t l = b.count; l < b.padded; ++l) {
    for (int j = 0; j < 5; ++j) CHECK(b.pivot[static_cast<std::size_t>(j)][l] == 0);
  }
}

TEST_CASE("dispatch") {
  const auto name = kernels::selected_line_scan_name();
  CHECK((name == "scalar" || name == "avx2"));
  if (!kernels::cpu_has_avx2()) CHECK(name == "scalar");
}

#ifdef SYMCALC_HAVE_AVX2_KERNEL
TEST_CASE("avx2 kernel matches the scalar kernel") {
  if (!kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(42);
  for (int q : {3, 5, 7, 11, 13}) {
    const QuadraticSpace5 space(q);
    const LineCounter counter(space);
    const kernels::LineBatch& b = counter.batch();
    for (int iter = 0; iter < 40; ++iter) {
      const auto g = random_matrix(rng, q);
      std::vector<std::int32_t> scalar(b.padded), vec(b.padded);
      kernels::line_scan_scalar(g, b, q, scalar);
      kernels::line_scan_avx2(g, b, q, vec);
      REQUIRE(scalar == vec);
    }
    // Extreme entries: all q-1, and the identity.
    std::array<std::int32_t, 25> top{};
    top.fill(q - 1);
    std::array<std::int32_t, 25> id{};
    for (int i = 0; i < 5; ++i) id[static_cast<std::size_t>(6 * i)] = 1;
    for (const auto& g : {top, id}) {
      std::vector<std::int32_t> scalar(b.padded), vec(b.padded);
      kernels::line_scan_scalar(g, b, q, scalar);
      kernels::line_scan_avx2(g, b, q, vec);
      CHECK(scalar == vec);
    }
  }
}

TEST_CASE("avx2 kernel on group elements") {
  if (!kernels::cpu_has_avx2()) return;
  const QuadraticSpace5 space(3);
  const std::vector<Matrix5> group = enumerate_group(space);
  const LineCounter counter(space, &kernels::line_scan_avx2);
  const LineCounter reference(space, &kernels::line_scan_scalar);
  for (std::size_t i = 0; i < group.size(); i += 7) REQUIRE(counter.scalars(group[i]) == reference.scalars(group[i]));
}
#endif
