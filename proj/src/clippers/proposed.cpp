#include "lineclip/clippers.hpp"

namespace lineclip {

// Same-side rejection, then per-endpoint clamping: x against xmin/xmax with y
// recomputed from the line equation, then the (possibly new) y against
// ymin/ymax with x recomputed. Both recomputations always use the original
// endpoints. A slope ratio is only formed when the corresponding clamp fires,
// and a clamp can only fire on a non-degenerate axis once the same-side test
// has passed.
ClipResult clip_proposed(const Segment& seg, const ClipWindow& w) noexcept
{
    const double x1 = seg.p1.x, y1 = seg.p1.y;
    const double x2 = seg.p2.x, y2 = seg.p2.y;
    const double xmin = w.xmin(), xmax = w.xmax();
    const double ymin = w.ymin(), ymax = w.ymax();

    if ((x1 < xmin && x2 < xmin) || (x1 > xmax && x2 > xmax))
        return ClipResult::rejected();
    if ((y1 < ymin && y2 < ymin) || (y1 > ymax && y2 > ymax))
        return ClipResult::rejected();

    const LineEquation line = LineEquation::through(seg);
    Point2 pts[2] = {seg.p1, seg.p2};

    for (Point2& p : pts) {
        if (p.x < xmin) {
            p.x = xmin;
            p.y = y_at(line, xmin);
        } else if (p.x > xmax) {
            p.x = xmax;
            p.y = y_at(line, xmax);
        }
        if (p.y < ymin) {
            p.y = ymin;
            p.x = x_at(line, ymin);
        } else if (p.y > ymax) {
            p.y = ymax;
            p.x = x_at(line, ymax);
        }
    }

    if ((pts[0].x < xmin && pts[1].x < xmin) || (pts[0].x > xmax && pts[1].x > xmax))
        return ClipResult::rejected();
    return ClipResult::accepted({pts[0], pts[1]});
}

} // namespace lineclip
