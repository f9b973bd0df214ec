#pragma once

#include <cstddef>

#include "lineclip/geom.hpp"

namespace lineclip::simd {

#if defined(LINECLIP_HAVE_AVX2)
// Process in[0, n) with n a multiple of 4.
void clip_proposed_avx2(const Segment* in, std::size_t n, const ClipWindow& w, ClipResult* out) noexcept;
void clip_liang_barsky_avx2(const Segment* in, std::size_t n, const ClipWindow& w, ClipResult* out) noexcept;
#endif

} // namespace lineclip::simd
