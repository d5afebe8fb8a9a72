// Compiled with -mavx2; reached only through the runtime dispatcher.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace permpat::kernels::avx2 {

namespace {

inline std::uint32_t hmax_epu32(__m256i v)
{
    __m128i m = _mm_max_epu32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    m = _mm_max_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
    m = _mm_max_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
    return static_cast<std::uint32_t>(_mm_cvtsi128_si32(m));
}

inline std::uint32_t hmin_epu32(__m256i v)
{
    __m128i m = _mm_min_epu32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    m = _mm_min_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
    m = _mm_min_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
    return static_cast<std::uint32_t>(_mm_cvtsi128_si32(m));
}

}  // namespace

ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept
{
    const __m256i sentinel = _mm256_set1_epi32(static_cast<int>(kNoUpperBound));
    __m256i lo = _mm256_setzero_si256();
    __m256i hi = sentinel;
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(placed + j));
        const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(want_below + j));
        lo = _mm256_max_epu32(lo, _mm256_and_si256(w, p));
        hi = _mm256_min_epu32(hi, _mm256_blendv_epi8(p, sentinel, w));
    }
    ValueBounds b{hmax_epu32(lo), hmin_epu32(hi)};
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

    // Unsigned d < width via signed compare after flipping the sign bit.
    const __m256i flip = _mm256_set1_epi32(static_cast<int>(0x80000000u));
    const __m256i vbase = _mm256_set1_epi32(static_cast<int>(base));
    const __m256i vwidth = _mm256_xor_si256(_mm256_set1_epi32(static_cast<int>(width)), flip);

    std::size_t i = begin;
    for (; i + 8 <= end; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i));
        const __m256i d = _mm256_xor_si256(_mm256_sub_epi32(v, vbase), flip);
        const __m256i hit = _mm256_cmpgt_epi32(vwidth, d);
        const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
        if (mask != 0)
            return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
    }
    for (; i < end; ++i)
        if (static_cast<std::uint32_t>(values[i]) - base < width)
            return i;
    return end;
}

}  // namespace permpat::kernels::avx2
