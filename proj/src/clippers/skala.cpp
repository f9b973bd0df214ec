#include "lineclip/clippers.hpp"

#include <algorithm>
#include <cmath>

namespace lineclip {

namespace {

// Corner i and corner (i+1)%4 bound edge i.
constexpr std::array<SkalaEdges, 16> make_edge_table() noexcept
{
    std::array<SkalaEdges, 16> table{};
    for (unsigned mask = 0; mask < 16; ++mask) {
        SkalaEdges entry{kNoEdge, kNoEdge};
        unsigned changes = 0;
        for (unsigned edge = 0; edge < 4; ++edge) {
            const bool a = (mask >> edge) & 1u;
            const bool b = (mask >> ((edge + 1) % 4)) & 1u;
            if (a != b) {
                if (changes == 0)
                    entry.first = static_cast<std::int8_t>(edge);
                else
                    entry.second = static_cast<std::int8_t>(edge);
                ++changes;
            }
        }
        // 0101 and 1010 alternate around the rectangle, which no straight line
        // can produce; they are treated like 0000.
        if (changes != 2)
            entry = {kNoEdge, kNoEdge};
        table[mask] = entry;
    }
    return table;
}

constexpr std::array<SkalaEdges, 16> kEdgeTable = make_edge_table();

struct Homogeneous {
    double x, y, w;
};

Homogeneous cross(const Homogeneous& u, const Homogeneous& v) noexcept
{
    return {u.y * v.w - u.w * v.y, u.w * v.x - u.x * v.w, u.x * v.y - u.y * v.x};
}

} // namespace

HomogeneousLine line_coefficients(const Segment& seg) noexcept
{
    const Homogeneous p = cross({seg.p1.x, seg.p1.y, 1.0}, {seg.p2.x, seg.p2.y, 1.0});
    return {p.x, p.y, p.w};
}

const std::array<SkalaEdges, 16>& skala_edge_table() noexcept { return kEdgeTable; }

unsigned skala_corner_mask(const HomogeneousLine& line, const ClipWindow& w) noexcept
{
    const Point2 corners[4] = {
        {w.xmin(), w.ymin()}, {w.xmax(), w.ymin()}, {w.xmax(), w.ymax()}, {w.xmin(), w.ymax()}};
    unsigned mask = 0;
    for (unsigned i = 0; i < 4; ++i)
        if (line.eval(corners[i]) >= 0.0)
            mask |= 1u << i;
    return mask;
}

// The infinite line is cut against the window through the corner-sign table,
// then the resulting span is trimmed to the segment's own extent.
//
// Everything is computed relative to the window centre: for a window far from
// the origin, c = x1*y2 - x2*y1 cancels catastrophically and the corner signs
// become noise.
ClipResult clip_skala(const Segment& seg, const ClipWindow& w) noexcept
{
    if (seg.p1 == seg.p2)
        return contains(w, seg.p1) ? ClipResult::accepted(seg) : ClipResult::rejected();

    const double ox = 0.5 * w.xmin() + 0.5 * w.xmax();
    const double oy = 0.5 * w.ymin() + 0.5 * w.ymax();
    const Segment local{{seg.p1.x - ox, seg.p1.y - oy}, {seg.p2.x - ox, seg.p2.y - oy}};
    if (local.p1 == local.p2)
        return contains(w, seg.p1) ? ClipResult::accepted(seg) : ClipResult::rejected();
    const double lx0 = w.xmin() - ox, lx1 = w.xmax() - ox;
    const double ly0 = w.ymin() - oy, ly1 = w.ymax() - oy;

    const HomogeneousLine line = line_coefficients(local);
    const Point2 corners[4] = {{lx0, ly0}, {lx1, ly0}, {lx1, ly1}, {lx0, ly1}};
    unsigned mask = 0;
    for (unsigned i = 0; i < 4; ++i)
        if (line.eval(corners[i]) >= 0.0)
            mask |= 1u << i;
    const SkalaEdges edges = kEdgeTable[mask];
    if (edges.first == kNoEdge)
        return ClipResult::rejected();

    // The edge's endpoints straddle the line, so the line is not parallel to
    // it and the homogeneous weight is nonzero.
    const Homogeneous p{line.a, line.b, line.c};
    const Homogeneous edge_lines[4] = {{0.0, 1.0, -ly0}, {1.0, 0.0, -lx1}, {0.0, 1.0, -ly1}, {1.0, 0.0, -lx0}};
    Point2 span[2];
    const std::int8_t which[2] = {edges.first, edges.second};
    for (int k = 0; k < 2; ++k) {
        const Homogeneous h = cross(p, edge_lines[which[k]]);
        span[k] = {h.x / h.w + ox, h.y / h.w + oy};
        // Snap the coordinate fixed by the edge.
        if (which[k] % 2 == 0)
            span[k].y = which[k] == 0 ? w.ymin() : w.ymax();
        else
            span[k].x = which[k] == 1 ? w.xmax() : w.xmin();
        span[k].x = std::clamp(span[k].x, w.xmin(), w.xmax());
        span[k].y = std::clamp(span[k].y, w.ymin(), w.ymax());
    }

    // Parametrize along the dominant axis of the segment.
    const double dx = seg.p2.x - seg.p1.x;
    const double dy = seg.p2.y - seg.p1.y;
    const bool along_x = std::abs(dx) >= std::abs(dy);
    auto param = [&](const Point2& q) {
        return along_x ? (q.x - seg.p1.x) / dx : (q.y - seg.p1.y) / dy;
    };

    double t0 = param(span[0]);
    double t1 = param(span[1]);
    if (t0 > t1) {
        std::swap(t0, t1);
        std::swap(span[0], span[1]);
    }
    if (t1 < 0.0 || t0 > 1.0)
        return ClipResult::rejected();

    const Point2 a = t0 <= 0.0 ? seg.p1 : span[0];
    const Point2 b = t1 >= 1.0 ? seg.p2 : span[1];
    return ClipResult::accepted({a, b});
}

} // namespace lineclip
