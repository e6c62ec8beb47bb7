#pragma once

// Fixed-line scan: for a 5x5 matrix g over F_q and a batch of normalized
// line representatives x (first nonzero coordinate 1), compute the scalar c
// with g x = c x, or 0 when the line is not stable.
//
// Lines are stored structure-of-arrays; `pivot` holds a one-hot mask of the
// leading coordinate of each line, so c = sum_i (g x)_i * pivot_i. The batch
// length must be a multiple of kLineBatch; padding lines are all-zero with an
// all-zero pivot and always report 0.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace symcalc::kernels {

inline constexpr std::size_t kLineBatch = 8;
/// Largest q supported by the reduction used in the vector kernels.
inline constexpr int kMaxKernelPrime = 13;

struct LineBatch {
  std::size_t count = 0;  // real lines
  std::size_t padded = 0;
  std::array<std::vector<std::int32_t>, 5> coord;
  std::array<std::vector<std::int32_t>, 5> pivot;
};

/// g is row-major with entries in [0, q).
using LineScanFn = void (*)(const std::array<std::int32_t, 25>& g, const LineBatch& lines, int q,
                            std::span<std::int32_t> out);

void line_scan_scalar(const std::array<std::int32_t, 25>& g, const LineBatch& lines, int q,
                      std::span<std::int32_t> out);

#if defined(__x86_64__) || defined(__i386__)
#define SYMCALC_HAVE_AVX2_KERNEL 1
void line_scan_avx2(const std::array<std::int32_t, 25>& g, const LineBatch& lines, int q,
                    std::span<std::int32_t> out);
#endif

bool cpu_has_avx2();

/// Best kernel for this CPU. SYMCALC_KERNEL=scalar forces the reference path.
LineScanFn select_line_scan();
std::string_view selected_line_scan_name();

}  // namespace symcalc::kernels
