#include "lineclip/batch.hpp"

#include "simd/kernels.hpp"

namespace lineclip {

namespace {

template <ClipResult (*Fn)(const Segment&, const ClipWindow&) noexcept>
void scalar_loop(std::span<const Segment> in, const ClipWindow& w, ClipResult* out) noexcept
{
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = Fn(in[i], w);
}

void clip_scalar(AlgorithmId id, std::span<const Segment> in, const ClipWindow& w, ClipResult* out) noexcept
{
    switch (id) {
    case AlgorithmId::CohenSutherland: return scalar_loop<&clip_cohen_sutherland>(in, w, out);
    case AlgorithmId::LiangBarsky: return scalar_loop<&clip_liang_barsky>(in, w, out);
    case AlgorithmId::CyrusBeck: return scalar_loop<&clip_cyrus_beck>(in, w, out);
    case AlgorithmId::NichollLeeNicholl: return scalar_loop<&clip_nicholl_lee_nicholl>(in, w, out);
    case AlgorithmId::Skala: return scalar_loop<&clip_skala>(in, w, out);
    case AlgorithmId::KWC: return scalar_loop<&clip_kwc>(in, w, out);
    case AlgorithmId::Proposed: return scalar_loop<&clip_proposed>(in, w, out);
    }
}

bool cpu_has_avx2() noexcept
{
#if defined(LINECLIP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported;
#else
    return false;
#endif
}

} // namespace

std::string_view kernel_name(Kernel k) noexcept
{
    return k == Kernel::Avx2 ? "avx2" : "scalar";
}

std::optional<Kernel> parse_kernel(std::string_view name) noexcept
{
    if (name == "scalar")
        return Kernel::Scalar;
    if (name == "avx2")
        return Kernel::Avx2;
    return std::nullopt;
}

bool kernel_available(Kernel k) noexcept
{
    return k == Kernel::Scalar || cpu_has_avx2();
}

Kernel best_kernel() noexcept
{
    return cpu_has_avx2() ? Kernel::Avx2 : Kernel::Scalar;
}

bool has_vector_path(AlgorithmId id, Kernel k) noexcept
{
    if (k != Kernel::Avx2)
        return false;
    return id == AlgorithmId::Proposed || id == AlgorithmId::LiangBarsky;
}

void clip_batch(AlgorithmId id, std::span<const Segment> in, const ClipWindow& w,
                std::span<ClipResult> out, Kernel k) noexcept
{
#if defined(LINECLIP_HAVE_AVX2)
    if (k == Kernel::Avx2 && has_vector_path(id, k) && cpu_has_avx2()) {
        const std::size_t body = in.size() & ~std::size_t{3};
        if (id == AlgorithmId::Proposed)
            simd::clip_proposed_avx2(in.data(), body, w, out.data());
        else
            simd::clip_liang_barsky_avx2(in.data(), body, w, out.data());
        clip_scalar(id, in.subspan(body), w, out.data() + body);
        return;
    }
#else
    (void)k;
#endif
    clip_scalar(id, in, w, out.data());
}

} // namespace lineclip
