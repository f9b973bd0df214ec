// Built with -mavx2. Every lane performs the same IEEE operations in the same
// order as the scalar clippers, so results match bit for bit. Do not enable
// FMA contraction for this file.

#include "simd/kernels.hpp"

#include <immintrin.h>

static_assert(sizeof(lineclip::Segment) == 4 * sizeof(double));

namespace lineclip::simd {

namespace {

struct Lanes {
    __m256d x1, y1, x2, y2;
};

// Four consecutive segments (x1 y1 x2 y2 each) to one register per field.
inline Lanes load4(const Segment* s) noexcept
{
    const auto* base = reinterpret_cast<const double*>(s);
    const __m256d r0 = _mm256_loadu_pd(base + 0);
    const __m256d r1 = _mm256_loadu_pd(base + 4);
    const __m256d r2 = _mm256_loadu_pd(base + 8);
    const __m256d r3 = _mm256_loadu_pd(base + 12);
    const __m256d t0 = _mm256_unpacklo_pd(r0, r1);
    const __m256d t1 = _mm256_unpackhi_pd(r0, r1);
    const __m256d t2 = _mm256_unpacklo_pd(r2, r3);
    const __m256d t3 = _mm256_unpackhi_pd(r2, r3);
    return {_mm256_permute2f128_pd(t0, t2, 0x20), _mm256_permute2f128_pd(t1, t3, 0x20),
            _mm256_permute2f128_pd(t0, t2, 0x31), _mm256_permute2f128_pd(t1, t3, 0x31)};
}

inline void store4(const Lanes& l, __m256d reject, ClipResult* out) noexcept
{
    const __m256d t0 = _mm256_unpacklo_pd(l.x1, l.y1);
    const __m256d t1 = _mm256_unpackhi_pd(l.x1, l.y1);
    const __m256d t2 = _mm256_unpacklo_pd(l.x2, l.y2);
    const __m256d t3 = _mm256_unpackhi_pd(l.x2, l.y2);
    alignas(32) Segment segs[4];
    auto* dst = reinterpret_cast<double*>(segs);
    _mm256_store_pd(dst + 0, _mm256_permute2f128_pd(t0, t2, 0x20));
    _mm256_store_pd(dst + 4, _mm256_permute2f128_pd(t1, t3, 0x20));
    _mm256_store_pd(dst + 8, _mm256_permute2f128_pd(t0, t2, 0x31));
    _mm256_store_pd(dst + 12, _mm256_permute2f128_pd(t1, t3, 0x31));
    const int rejected = _mm256_movemask_pd(reject);
    for (int i = 0; i < 4; ++i)
        out[i] = (rejected >> i) & 1 ? ClipResult::rejected() : ClipResult::accepted(segs[i]);
}

inline __m256d lt(__m256d a, __m256d b) noexcept { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
inline __m256d gt(__m256d a, __m256d b) noexcept { return _mm256_cmp_pd(a, b, _CMP_GT_OQ); }
inline __m256d eq(__m256d a, __m256d b) noexcept { return _mm256_cmp_pd(a, b, _CMP_EQ_OQ); }
inline __m256d and_(__m256d a, __m256d b) noexcept { return _mm256_and_pd(a, b); }
inline __m256d or_(__m256d a, __m256d b) noexcept { return _mm256_or_pd(a, b); }
// mask ? b : a
inline __m256d select(__m256d mask, __m256d b, __m256d a) noexcept { return _mm256_blendv_pd(a, b, mask); }

// Divisor with zero lanes replaced by one; those lanes are never selected.
inline __m256d safe_divisor(__m256d d) noexcept
{
    return select(eq(d, _mm256_setzero_pd()), _mm256_set1_pd(1.0), d);
}

} // namespace

void clip_proposed_avx2(const Segment* in, std::size_t n, const ClipWindow& w, ClipResult* out) noexcept
{
    const __m256d xmin = _mm256_set1_pd(w.xmin()), xmax = _mm256_set1_pd(w.xmax());
    const __m256d ymin = _mm256_set1_pd(w.ymin()), ymax = _mm256_set1_pd(w.ymax());

    for (std::size_t i = 0; i < n; i += 4) {
        Lanes s = load4(in + i);

        __m256d reject = or_(and_(lt(s.x1, xmin), lt(s.x2, xmin)), and_(gt(s.x1, xmax), gt(s.x2, xmax)));
        reject = or_(reject, or_(and_(lt(s.y1, ymin), lt(s.y2, ymin)), and_(gt(s.y1, ymax), gt(s.y2, ymax))));
        if (_mm256_movemask_pd(reject) == 0xF) {
            store4(s, reject, out + i);
            continue;
        }

        const __m256d dx = _mm256_sub_pd(s.x2, s.x1);
        const __m256d dy = _mm256_sub_pd(s.y2, s.y1);
        const __m256d dy_dx = _mm256_div_pd(dy, safe_divisor(dx));
        const __m256d dx_dy = _mm256_div_pd(dx, safe_divisor(dy));
        const __m256d y_left = _mm256_add_pd(s.y1, _mm256_mul_pd(dy_dx, _mm256_sub_pd(xmin, s.x1)));
        const __m256d y_right = _mm256_add_pd(s.y1, _mm256_mul_pd(dy_dx, _mm256_sub_pd(xmax, s.x1)));
        const __m256d x_bottom = _mm256_add_pd(s.x1, _mm256_mul_pd(dx_dy, _mm256_sub_pd(ymin, s.y1)));
        const __m256d x_top = _mm256_add_pd(s.x1, _mm256_mul_pd(dx_dy, _mm256_sub_pd(ymax, s.y1)));

        auto clamp_endpoint = [&](__m256d& px, __m256d& py) {
            const __m256d left = lt(px, xmin);
            const __m256d right = gt(px, xmax);
            py = select(left, y_left, select(right, y_right, py));
            px = select(left, xmin, select(right, xmax, px));
            const __m256d below = lt(py, ymin);
            const __m256d above = gt(py, ymax);
            px = select(below, x_bottom, select(above, x_top, px));
            py = select(below, ymin, select(above, ymax, py));
        };
        clamp_endpoint(s.x1, s.y1);
        clamp_endpoint(s.x2, s.y2);

        reject = or_(reject, or_(and_(lt(s.x1, xmin), lt(s.x2, xmin)), and_(gt(s.x1, xmax), gt(s.x2, xmax))));
        store4(s, reject, out + i);
    }
}

void clip_liang_barsky_avx2(const Segment* in, std::size_t n, const ClipWindow& w, ClipResult* out) noexcept
{
    const __m256d xmin = _mm256_set1_pd(w.xmin()), xmax = _mm256_set1_pd(w.xmax());
    const __m256d ymin = _mm256_set1_pd(w.ymin()), ymax = _mm256_set1_pd(w.ymax());
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d sign = _mm256_set1_pd(-0.0);

    for (std::size_t i = 0; i < n; i += 4) {
        const Lanes s = load4(in + i);
        const __m256d dx = _mm256_sub_pd(s.x2, s.x1);
        const __m256d dy = _mm256_sub_pd(s.y2, s.y1);

        __m256d t_enter = zero;
        __m256d t_exit = one;
        __m256d reject = zero;

        auto edge = [&](__m256d p, __m256d q) {
            const __m256d parallel = eq(p, zero);
            reject = or_(reject, and_(parallel, lt(q, zero)));
            const __m256d r = _mm256_div_pd(q, safe_divisor(p));
            t_enter = select(and_(lt(p, zero), gt(r, t_enter)), r, t_enter);
            t_exit = select(and_(gt(p, zero), lt(r, t_exit)), r, t_exit);
        };
        edge(_mm256_xor_pd(dx, sign), _mm256_sub_pd(s.x1, xmin));
        edge(dx, _mm256_sub_pd(xmax, s.x1));
        edge(_mm256_xor_pd(dy, sign), _mm256_sub_pd(s.y1, ymin));
        edge(dy, _mm256_sub_pd(ymax, s.y1));
        reject = or_(reject, gt(t_enter, t_exit));

        const __m256d enter_untouched = eq(t_enter, zero);
        const __m256d exit_untouched = eq(t_exit, one);
        Lanes r;
        r.x1 = select(enter_untouched, s.x1, _mm256_add_pd(s.x1, _mm256_mul_pd(t_enter, dx)));
        r.y1 = select(enter_untouched, s.y1, _mm256_add_pd(s.y1, _mm256_mul_pd(t_enter, dy)));
        r.x2 = select(exit_untouched, s.x2, _mm256_add_pd(s.x1, _mm256_mul_pd(t_exit, dx)));
        r.y2 = select(exit_untouched, s.y2, _mm256_add_pd(s.y1, _mm256_mul_pd(t_exit, dy)));
        store4(r, reject, out + i);
    }
}

} // namespace lineclip::simd
