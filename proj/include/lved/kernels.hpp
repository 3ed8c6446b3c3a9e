#pragma once

// Bitmask neighbourhood kernels used by the exhaustive oracles. Each closed
// neighbourhood of a graph with at most 64 vertices is one 64-bit mask; a
// candidate set is another. The hot loop is popcount(mask[i] & set) over all
// masks, which vectorises cleanly.
//
// Every kernel has a portable scalar reference and, where the CPU allows it,
// an AVX2 (x86-64) or NEON (AArch64) variant. The variant is picked once at
// runtime; all variants are required to produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lved::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

/// Best ISA supported by the running CPU and compiled into this build.
Isa detected_isa();
/// ISA currently used by the dispatching entry points.
Isa active_isa();
/// Forces a variant (tests, benchmarks). Throws if the CPU lacks it.
void set_active_isa(Isa isa);

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// out[i] = popcount(masks[i] & set).
void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out);

/// First i with popcount(masks[i] & set) < need[i], or kNone.
std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need);

/// Fixed-variant entry points, exposed for equivalence testing.
namespace scalar {
void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out);
std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out);
std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void and_popcount(std::span<const std::uint64_t> masks, std::uint64_t set,
                  std::span<std::uint8_t> out);
std::size_t first_below(std::span<const std::uint64_t> masks, std::uint64_t set,
                        std::span<const std::uint8_t> need);
}  // namespace neon
#endif

}  // namespace lved::kernels
