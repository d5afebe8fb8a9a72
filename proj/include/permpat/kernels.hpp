#pragma once

// Data-parallel inner loops of the backtracking matcher.
//
// Each kernel has a scalar reference implementation and vector variants
// (AVX2 on x86-64, NEON on aarch64). The variant is picked once at startup
// from the running CPU; force_isa() overrides it for testing. All variants
// must return identical results for identical inputs.

#include <cstddef>
#include <cstdint>
#include <span>

namespace permpat::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa) noexcept;

/// Variants compiled into this binary and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
Isa best_isa() noexcept;
Isa active_isa() noexcept;
/// Selects a variant; returns false (and changes nothing) if unavailable.
bool force_isa(Isa isa) noexcept;

/// Open value interval (lo, hi). Values are unsigned so that hi can hold
/// the sentinel kNoUpperBound, which exceeds every representable text value.
struct ValueBounds {
    std::uint32_t lo;
    std::uint32_t hi;
};

inline constexpr std::uint32_t kNoUpperBound = 0x80000000u;

/// For placed text values p[j] and masks want_below[j] (all ones when the
/// new value must exceed p[j], zero when it must be smaller):
///   lo = max{p[j] : want_below[j]} (0 if none)
///   hi = min{p[j] : !want_below[j]} (kNoUpperBound if none)
/// A new distinct value v is order-consistent with every placed value iff
/// lo < v < hi. Values must lie in [1, 2^31).
ValueBounds order_bounds(std::span<const std::int32_t> placed,
                         std::span<const std::int32_t> want_below) noexcept;

/// First index i in [begin, end) with lo < values[i] < hi, or end.
std::size_t find_in_bounds(std::span<const std::int32_t> values, std::size_t begin,
                           std::size_t end, ValueBounds bounds) noexcept;

/// Explicit-variant forms for equivalence testing; isa must be available.
ValueBounds order_bounds(Isa isa, std::span<const std::int32_t> placed,
                         std::span<const std::int32_t> want_below) noexcept;
std::size_t find_in_bounds(Isa isa, std::span<const std::int32_t> values, std::size_t begin,
                           std::size_t end, ValueBounds bounds) noexcept;

}  // namespace permpat::kernels
