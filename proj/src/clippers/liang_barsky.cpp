#include "lineclip/clippers.hpp"

namespace lineclip {

namespace {

// One boundary inequality p*t <= q. Returns false when the segment is
// entirely on the outside of it.
bool clip_edge(double p, double q, ParamInterval& range) noexcept
{
    if (p == 0.0)
        return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
        if (r > range.t_exit)
            return false;
        if (r > range.t_enter)
            range.t_enter = r;
    } else {
        if (r < range.t_enter)
            return false;
        if (r < range.t_exit)
            range.t_exit = r;
    }
    return true;
}

} // namespace

ClipResult clip_liang_barsky(const Segment& seg, const ClipWindow& w) noexcept
{
    const double x1 = seg.p1.x, y1 = seg.p1.y;
    const double dx = seg.p2.x - x1;
    const double dy = seg.p2.y - y1;

    ParamInterval range;
    if (!clip_edge(-dx, x1 - w.xmin(), range) || !clip_edge(dx, w.xmax() - x1, range) ||
        !clip_edge(-dy, y1 - w.ymin(), range) || !clip_edge(dy, w.ymax() - y1, range))
        return ClipResult::rejected();

    // Untouched ends are returned verbatim rather than re-evaluated.
    const Point2 a = range.t_enter == 0.0
                         ? seg.p1
                         : Point2{x1 + range.t_enter * dx, y1 + range.t_enter * dy};
    const Point2 b = range.t_exit == 1.0
                         ? seg.p2
                         : Point2{x1 + range.t_exit * dx, y1 + range.t_exit * dy};
    return ClipResult::accepted({a, b});
}

} // namespace lineclip
