#include "symcalc/kernels/line_scan.hpp"

namespace symcalc::kernels {

void line_scan_scalar(const std::array<std::int32_t, 25>& g, const LineBatch& lines, int q,
                      std::span<std::int32_t> out) {
  for (std::size_t l = 0; l < lines.padded; ++l) {
    std::int32_t y[5];
    std::int32_t c = 0;
    for (int i = 0; i < 5; ++i) {
      std::int32_t acc = 0;
      for (int j = 0; j < 5; ++j) acc += g[static_cast<std::size_t>(5 * i + j)] * lines.coord[static_cast<std::size_t>(j)][l];
      y[i] = acc % q;
      c += y[i] * lines.pivot[static_cast<std::size_t>(i)][l];
    }
    bool fixed = c != 0;
    for (int i = 0; i < 5 && fixed; ++i) fixed = (y[i] - c * lines.coord[static_cast<std::size_t>(i)][l]) % q == 0;
    out[l] = fixed ? c : 0;
  }
}

}  // namespace symcalc::kernels
