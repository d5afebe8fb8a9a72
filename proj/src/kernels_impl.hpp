#pragma once

// Per-variant kernel entry points. Only the dispatcher includes this.

#include "permpat/kernels.hpp"

namespace permpat::kernels {

namespace scalar {
ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept;
std::size_t find_in_bounds(const std::int32_t* values, std::size_t begin, std::size_t end,
                           ValueBounds bounds) noexcept;
}  // namespace scalar

#if defined(PERMPAT_HAVE_AVX2)
namespace avx2 {
ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept;
std::size_t find_in_bounds(const std::int32_t* values, std::size_t begin, std::size_t end,
                           ValueBounds bounds) noexcept;
}  // namespace avx2
#endif

#if defined(PERMPAT_HAVE_NEON)
namespace neon {
ValueBounds order_bounds(const std::int32_t* placed, const std::int32_t* want_below,
                         std::size_t count) noexcept;
std::size_t find_in_bounds(const std::int32_t* values, std::size_t begin, std::size_t end,
                           ValueBounds bounds) noexcept;
}  // namespace neon
#endif

}  // namespace permpat::kernels
