#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "lineclip/clippers.hpp"

namespace lineclip {

/// Batch kernels. Scalar is the reference; Avx2 processes four segments per
/// step and must reproduce the scalar results bit for bit.
enum class Kernel {
    Scalar,
    Avx2,
};

std::string_view kernel_name(Kernel k) noexcept;
std::optional<Kernel> parse_kernel(std::string_view name) noexcept;

/// Compiled in and supported by the running CPU.
bool kernel_available(Kernel k) noexcept;

/// Best kernel available at runtime.
Kernel best_kernel() noexcept;

/// Whether `k` has a dedicated vector path for `id`. Algorithms without one
/// fall back to the scalar loop under any kernel.
bool has_vector_path(AlgorithmId id, Kernel k) noexcept;

/// Clips every segment of `in` into the same index of `out`.
/// `out.size()` must be at least `in.size()`. An unavailable kernel falls
/// back to scalar.
void clip_batch(AlgorithmId id, std::span<const Segment> in, const ClipWindow& w,
                std::span<ClipResult> out, Kernel k = Kernel::Scalar) noexcept;

} // namespace lineclip
