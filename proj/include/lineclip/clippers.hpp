#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "lineclip/geom.hpp"

namespace lineclip {

/// The benchmarked algorithm set, in report column order.
enum class AlgorithmId : std::uint8_t {
    CohenSutherland,
    LiangBarsky,
    CyrusBeck,
    NichollLeeNicholl,
    Skala,
    KWC,
    Proposed,
};

inline constexpr std::array<AlgorithmId, 7> kAllAlgorithms = {
    AlgorithmId::CohenSutherland, AlgorithmId::LiangBarsky, AlgorithmId::CyrusBeck,
    AlgorithmId::NichollLeeNicholl, AlgorithmId::Skala, AlgorithmId::KWC,
    AlgorithmId::Proposed,
};

/// Fixed report spelling: CS, LB, CB, NLN, Skala, KWC, Proposed.
std::string_view algorithm_name(AlgorithmId id) noexcept;

/// Accepts the report spelling or the long lowercase name
/// ("cohen-sutherland", "liang-barsky", "cyrus-beck", "nicholl-lee-nicholl",
/// "skala", "kwc", "proposed"), case-insensitively.
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

// Region code bits.
enum Outcode : unsigned {
    kInside = 0,
    kLeft = 1,
    kRight = 2,
    kBottom = 4,
    kTop = 8,
};

unsigned compute_outcode(const Point2& p, const ClipWindow& w) noexcept;

/// Coefficients of a*x + b*y + c = 0.
struct HomogeneousLine {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double eval(const Point2& p) const noexcept { return a * p.x + b * p.y + c; }

    friend constexpr bool operator==(const HomogeneousLine&, const HomogeneousLine&) = default;
};

/// (x1, y1, 1) x (x2, y2, 1).
HomogeneousLine line_coefficients(const Segment& seg) noexcept;

/// Parameter range [t_enter, t_exit] along P(t) = p1 + t (p2 - p1).
struct ParamInterval {
    double t_enter = 0.0;
    double t_exit = 1.0;

    bool empty() const noexcept { return t_enter > t_exit; }
};

/// Window-corner sign mask -> intersected window edges, for Skala's method.
/// Corner bit order: 0 = (xmin,ymin), 1 = (xmax,ymin), 2 = (xmax,ymax), 3 = (xmin,ymax).
/// Edge order: 0 bottom, 1 right, 2 top, 3 left. kNoEdge marks an unused slot.
struct SkalaEdges {
    std::int8_t first;
    std::int8_t second;
};
inline constexpr std::int8_t kNoEdge = -1;
const std::array<SkalaEdges, 16>& skala_edge_table() noexcept;
unsigned skala_corner_mask(const HomogeneousLine& line, const ClipWindow& w) noexcept;

// Every clipper: pure, total over finite input, keeps the segment's direction.
ClipResult clip_proposed(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_cohen_sutherland(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_liang_barsky(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_cyrus_beck(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_nicholl_lee_nicholl(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_skala(const Segment& seg, const ClipWindow& w) noexcept;
ClipResult clip_kwc(const Segment& seg, const ClipWindow& w) noexcept;

using ClipFn = ClipResult (*)(const Segment&, const ClipWindow&) noexcept;

ClipFn clip_function(AlgorithmId id) noexcept;

inline ClipResult clip(AlgorithmId id, const Segment& seg, const ClipWindow& w) noexcept
{
    return clip_function(id)(seg, w);
}

} // namespace lineclip
