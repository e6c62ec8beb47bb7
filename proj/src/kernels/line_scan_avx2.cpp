#include "symcalc/kernels/line_scan.hpp"

#include <immintrin.h>

namespace symcalc::kernels {

namespace {

// v mod q for 0 <= v < 65536 / q, via floor(v / q) = (v * ceil(2^16 / q)) >> 16.
inline __m256i mod_small(__m256i v, __m256i q, __m256i magic) {
  const __m256i quot = _mm256_srli_epi32(_mm256_mullo_epi32(v, magic), 16);
  return _mm256_sub_epi32(v, _mm256_mullo_epi32(quot, q));
}

}  // namespace

void line_scan_avx2(const std::array<std::int32_t, 25>& g, const LineBatch& lines, int q,
                    std::span<std::int32_t> out) {
  const __m256i vq = _mm256_set1_epi32(q);
  const __m256i vq2 = _mm256_set1_epi32(q * q);
  const __m256i magic = _mm256_set1_epi32((65536 + q - 1) / q);
  const __m256i zero = _mm256_setzero_si256();
  __m256i gb[25];
  for (int i = 0; i < 25; ++i) gb[i] = _mm256_set1_epi32(g[static_cast<std::size_t>(i)]);

  for (std::size_t l = 0; l < lines.padded; l += kLineBatch) {
    __m256i x[5];
    for (int j = 0; j < 5; ++j) {
      x[j] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lines.coord[static_cast<std::size_t>(j)].data() + l));
    }
    __m256i y[5];
    __m256i c = zero;
    for (int i = 0; i < 5; ++i) {
      __m256i acc = _mm256_mullo_epi32(gb[5 * i], x[0]);
      for (int j = 1; j < 5; ++j) acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(gb[5 * i + j], x[j]));
      y[i] = mod_small(acc, vq, magic);
      const __m256i p =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lines.pivot[static_cast<std::size_t>(i)].data() + l));
      c = _mm256_add_epi32(c, _mm256_mullo_epi32(y[i], p));
    }
    __m256i residue = zero;
    for (int i = 0; i < 5; ++i) {
      const __m256i d = _mm256_sub_epi32(_mm256_add_epi32(y[i], vq2), _mm256_mullo_epi32(c, x[i]));
      residue = _mm256_or_si256(residue, mod_small(d, vq, magic));
    }
    const __m256i stable = _mm256_andnot_si256(_mm256_cmpeq_epi32(c, zero), _mm256_cmpeq_epi32(residue, zero));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + l), _mm256_and_si256(stable, c));
  }
}

}  // namespace symcalc::kernels
