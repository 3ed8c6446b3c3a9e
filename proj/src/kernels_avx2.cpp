// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstring>

#include "lved/kernels.hpp"

namespace lved::kernels::avx2 {

namespace {

// Per-64-bit-lane popcount: nibble lookup with vpshufb, then a horizontal
// byte sum per lane via vpsadbw.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low4);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low4);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out) {
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(set));
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= masks.size(); i += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(_mm256_and_si256(m, s)));
    for (int j = 0; j < 4; ++j) out[i + j] = static_cast<std::uint8_t>(lanes[j]);
  }
  scalar::and_popcount(masks.subspan(i), set, out.subspan(i));
}

std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need) {
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(set));
  std::size_t i = 0;
  for (; i + 4 <= masks.size(); i += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    const __m256i cnt = popcount_epi64(_mm256_and_si256(m, s));
    std::int32_t packed;
    std::memcpy(&packed, need.data() + i, sizeof packed);
    const __m256i req = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
    const int below = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(req, cnt)));
    if (below != 0) return i + static_cast<std::size_t>(__builtin_ctz(below));
  }
  const std::size_t tail = scalar::first_below(masks.subspan(i), set, need.subspan(i));
  return tail == kNone ? kNone : i + tail;
}

}  // namespace lved::kernels::avx2
