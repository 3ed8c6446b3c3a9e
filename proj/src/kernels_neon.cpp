#include <arm_neon.h>

#include "lved/kernels.hpp"

namespace lved::kernels::neon {

namespace {

inline uint64x2_t popcount_u64(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

}  // namespace

void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out) {
  const uint64x2_t s = vdupq_n_u64(set);
  std::size_t i = 0;
  for (; i + 2 <= masks.size(); i += 2) {
    const uint64x2_t c = popcount_u64(vandq_u64(vld1q_u64(masks.data() + i), s));
    out[i] = static_cast<std::uint8_t>(vgetq_lane_u64(c, 0));
    out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(c, 1));
  }
  scalar::and_popcount(masks.subspan(i), set, out.subspan(i));
}

std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need) {
  const uint64x2_t s = vdupq_n_u64(set);
  std::size_t i = 0;
  for (; i + 2 <= masks.size(); i += 2) {
    const uint64x2_t c = popcount_u64(vandq_u64(vld1q_u64(masks.data() + i), s));
    const uint64_t req[2] = {need[i], need[i + 1]};
    const uint64x2_t below = vcltq_u64(c, vld1q_u64(req));
    if (vgetq_lane_u64(below, 0)) return i;
    if (vgetq_lane_u64(below, 1)) return i + 1;
  }
  const std::size_t tail = scalar::first_below(masks.subspan(i), set, need.subspan(i));
  return tail == kNone ? kNone : i + tail;
}

}  // namespace lved::kernels::neon
