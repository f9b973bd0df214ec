#include "lineclip/clippers.hpp"

#include <array>

namespace lineclip {

namespace {

struct Edge {
    Point2 anchor;
    Point2 inward_normal;
};

double dot(const Point2& a, const Point2& b) noexcept { return a.x * b.x + a.y * b.y; }

} // namespace

// General convex-polygon clipping, fed the rectangle as four edges with
// inward normals. Nothing here exploits axis alignment.
ClipResult clip_cyrus_beck(const Segment& seg, const ClipWindow& w) noexcept
{
    const std::array<Edge, 4> edges = {{
        {{w.xmin(), w.ymin()}, {1.0, 0.0}},
        {{w.xmax(), w.ymax()}, {-1.0, 0.0}},
        {{w.xmax(), w.ymin()}, {0.0, 1.0}},
        {{w.xmin(), w.ymax()}, {0.0, -1.0}},
    }};

    const Point2 d{seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y};
    double t_enter = 0.0;
    double t_exit = 1.0;

    for (const Edge& e : edges) {
        const Point2 w0{seg.p1.x - e.anchor.x, seg.p1.y - e.anchor.y};
        const double num = dot(e.inward_normal, w0);
        const double den = dot(e.inward_normal, d);
        if (den == 0.0) {
            // Parallel to this edge: wholly inside or wholly outside it.
            if (num < 0.0)
                return ClipResult::rejected();
            continue;
        }
        const double t = -num / den;
        if (den > 0.0) {
            if (t > t_enter)
                t_enter = t;
        } else if (t < t_exit) {
            t_exit = t;
        }
        if (t_enter > t_exit)
            return ClipResult::rejected();
    }

    const Point2 a = t_enter == 0.0 ? seg.p1 : Point2{seg.p1.x + t_enter * d.x, seg.p1.y + t_enter * d.y};
    const Point2 b = t_exit == 1.0 ? seg.p2 : Point2{seg.p1.x + t_exit * d.x, seg.p1.y + t_exit * d.y};
    return ClipResult::accepted({a, b});
}

} // namespace lineclip
