#include "lved/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace lved::kernels {

namespace scalar {

void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(std::popcount(masks[i] & set));
  }
}

std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (std::popcount(masks[i] & set) < need[i]) return i;
  }
  return kNone;
}

}  // namespace scalar

namespace {

struct Table {
  void (*and_popcount)(std::span<const std::uint64_t>, std::uint64_t, std::span<std::uint8_t>);
  std::size_t (*first_below)(std::span<const std::uint64_t>, std::uint64_t,
                             std::span<const std::uint8_t>);
};

Table table_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2: return {&avx2::and_popcount, &avx2::first_below};
#endif
#if defined(__aarch64__)
    case Isa::kNeon: return {&neon::and_popcount, &neon::first_below};
#endif
    default: return {&scalar::and_popcount, &scalar::first_below};
  }
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "?";
}

Isa detected_isa() {
  if (supported(Isa::kAvx2)) return Isa::kAvx2;
  if (supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!supported(isa)) {
    throw std::runtime_error("kernel variant " + std::string(to_string(isa)) +
                             " is not available on this CPU");
  }
  active().store(isa, std::memory_order_relaxed);
}

void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out) {
  table_for(active_isa()).and_popcount(masks, set, out);
}

std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need) {
  return table_for(active_isa()).first_below(masks, set, need);
}

}  // namespace lved::kernels
