#include "permpat/kernels.hpp"

#include "kernels_impl.hpp"

#include <algorithm>
#include <atomic>

#if defined(PERMPAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
#define PERMPAT_CPU_PROBE_X86 1
#endif

namespace permpat::kernels {

namespace scalar {

ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept
{
    ValueBounds b{0, kNoUpperBound};
    for (std::size_t j = 0; j < count; ++j) {
        const auto p = static_cast<std::uint32_t>(placed[j]);
        if (want_below[j])
            b.lo = std::max(b.lo, p);
        else
            b.hi = std::min(b.hi, p);
    }
    return b;
}

std::size_t find_in_bounds(const std::int32_t* values, std::size_t begin, std::size_t end,
                           ValueBounds bounds) noexcept
{
    if (bounds.hi <= bounds.lo + 1)
        return end;
    // lo < v < hi  <=>  v - (lo + 1) < hi - lo - 1 in unsigned arithmetic.
    const std::uint32_t base = bounds.lo + 1;
    const std::uint32_t width = bounds.hi - bounds.lo - 1;
    for (std::size_t i = begin; i < end; ++i)
        if (static_cast<std::uint32_t>(values[i]) - base < width)
            return i;
    return end;
}

}  // namespace scalar

namespace {

bool cpu_supports(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(PERMPAT_CPU_PROBE_X86)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(PERMPAT_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

std::atomic<Isa>& active() noexcept
{
    static std::atomic<Isa> isa{best_isa()};
    return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept { return cpu_supports(isa); }

Isa best_isa() noexcept
{
    if (cpu_supports(Isa::Avx2))
        return Isa::Avx2;
    if (cpu_supports(Isa::Neon))
        return Isa::Neon;
    return Isa::Scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool force_isa(Isa isa) noexcept
{
    if (!cpu_supports(isa))
        return false;
    active().store(isa, std::memory_order_relaxed);
    return true;
}

ValueBounds order_bounds(Isa isa, std::span<const std::int32_t> placed,
                         std::span<const std::int32_t> want_below) noexcept
{
    const std::size_t count = std::min(placed.size(), want_below.size());
    switch (isa) {
#if defined(PERMPAT_HAVE_AVX2)
    case Isa::Avx2:
        return avx2::order_bounds(placed.data(), want_below.data(), count);
#endif
#if defined(PERMPAT_HAVE_NEON)
    case Isa::Neon:
        return neon::order_bounds(placed.data(), want_below.data(), count);
#endif
    default:
        return scalar::order_bounds(placed.data(), want_below.data(), count);
    }
}

std::size_t find_in_bounds(Isa isa, std::span<const std::int32_t> values, std::size_t begin,
                           std::size_t end, ValueBounds bounds) noexcept
{
    end = std::min(end, values.size());
    if (begin >= end)
        return end;
    switch (isa) {
#if defined(PERMPAT_HAVE_AVX2)
    case Isa::Avx2:
        return avx2::find_in_bounds(values.data(), begin, end, bounds);
#endif
#if defined(PERMPAT_HAVE_NEON)
    case Isa::Neon:
        return neon::find_in_bounds(values.data(), begin, end, bounds);
#endif
    default:
        return scalar::find_in_bounds(values.data(), begin, end, bounds);
    }
}

ValueBounds order_bounds(std::span<const std::int32_t> placed,
                         std::span<const std::int32_t> want_below) noexcept
{
    return order_bounds(active_isa(), placed, want_below);
}

std::size_t find_in_bounds(std::span<const std::int32_t> values, std::size_t begin,
                           std::size_t end, ValueBounds bounds) noexcept
{
    return find_in_bounds(active_isa(), values, begin, end, bounds);
}

}  // namespace permpat::kernels
