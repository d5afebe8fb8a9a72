// aarch64 variant; Advanced SIMD is architecturally guaranteed there.

#include "kernels_impl.hpp"

#include <arm_neon.h>

namespace permpat::kernels::neon {

ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept
{
    const uint32x4_t sentinel = vdupq_n_u32(kNoUpperBound);
    uint32x4_t lo = vdupq_n_u32(0);
    uint32x4_t hi = sentinel;
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        const uint32x4_t p = vreinterpretq_u32_s32(vld1q_s32(placed + j));
        const uint32x4_t w = vreinterpretq_u32_s32(vld1q_s32(want_below + j));
        lo = vmaxq_u32(lo, vandq_u32(w, p));
        hi = vminq_u32(hi, vbslq_u32(w, sentinel, p));
    }
    ValueBounds b{vmaxvq_u32(lo), vminvq_u32(hi)};
    for (; j < count; ++j) {
        const auto p = static_cast<std::uint32_t>(placed[j]);
        if (want_below[j])
            b.lo = p > b.lo ? p : b.lo;
        else
            b.hi = p < b.hi ? p : b.hi;
    }
    return b;
}

std::size_t find_in_bounds(const std::int32_t* values, std::size_t begin, std::size_t end,
                           ValueBounds bounds) noexcept
{
    if (bounds.hi <= bounds.lo + 1)
        return end;
    const std::uint32_t base = bounds.lo + 1;
    const std::uint32_t width = bounds.hi - bounds.lo - 1;
    const uint32x4_t vbase = vdupq_n_u32(base);
    const uint32x4_t vwidth = vdupq_n_u32(width);

    std::size_t i = begin;
    for (; i + 4 <= end; i += 4) {
        const uint32x4_t v = vreinterpretq_u32_s32(vld1q_s32(values + i));
        const uint32x4_t hit = vcltq_u32(vsubq_u32(v, vbase), vwidth);
        if (vmaxvq_u32(hit) != 0)
            break;
    }
    for (; i < end; ++i)
        if (static_cast<std::uint32_t>(values[i]) - base < width)
            return i;
    return end;
}

}  // namespace permpat::kernels::neon
