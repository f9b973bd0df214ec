#include "lineclip/clippers.hpp"

#include <algorithm>
#include <cmath>

namespace lineclip {

namespace {

// Overlap of [lo, hi] with [a, b] along one axis, keeping the direction of
// travel from `from` to `to`.
bool clamp_interval(double from, double to, double lo, double hi, double& out_from, double& out_to) noexcept
{
    if (std::max(from, to) < lo || std::min(from, to) > hi)
        return false;
    out_from = std::clamp(from, lo, hi);
    out_to = std::clamp(to, lo, hi);
    return true;
}

} // namespace

// Points and axis-parallel segments are dispatched first and settled by plain
// interval overlap. Everything else goes through the explicit form
// y = m x + c, checking each boundary in turn. The closing test is the
// same-side test on all four boundaries rather than strict containment, which
// the source scheme leaves implicit.
ClipResult clip_kwc(const Segment& seg, const ClipWindow& w) noexcept
{
    double x1 = seg.p1.x, y1 = seg.p1.y;
    double x2 = seg.p2.x, y2 = seg.p2.y;
    const double xmin = w.xmin(), xmax = w.xmax();
    const double ymin = w.ymin(), ymax = w.ymax();

    if (x1 == x2 && y1 == y2)
        return contains(w, seg.p1) ? ClipResult::accepted(seg) : ClipResult::rejected();

    auto vertical = [&]() {
        if (x1 < xmin || x1 > xmax || !clamp_interval(y1, y2, ymin, ymax, y1, y2))
            return ClipResult::rejected();
        return ClipResult::accepted({{x1, y1}, {x2, y2}});
    };
    auto horizontal = [&]() {
        if (y1 < ymin || y1 > ymax || !clamp_interval(x1, x2, xmin, xmax, x1, x2))
            return ClipResult::rejected();
        return ClipResult::accepted({{x1, y1}, {x2, y2}});
    };

    if (x1 == x2)
        return vertical();
    if (y1 == y2)
        return horizontal();

    if ((x1 < xmin && x2 < xmin) || (x1 > xmax && x2 > xmax) || (y1 < ymin && y2 < ymin) ||
        (y1 > ymax && y2 > ymax))
        return ClipResult::rejected();

    const double m = (y2 - y1) / (x2 - x1);
    const double c = y1 - m * x1;
    // Slopes that overflow or underflow are vertical or horizontal to within
    // the last bit of the endpoints.
    if (!std::isfinite(m) || !std::isfinite(c))
        return vertical();
    if (m == 0.0)
        return horizontal();

    auto clip_point = [&](double& x, double& y) {
        if (x < xmin) {
            x = xmin;
            y = m * xmin + c;
        } else if (x > xmax) {
            x = xmax;
            y = m * xmax + c;
        }
        if (y < ymin) {
            y = ymin;
            x = (ymin - c) / m;
        } else if (y > ymax) {
            y = ymax;
            x = (ymax - c) / m;
        }
    };
    clip_point(x1, y1);
    clip_point(x2, y2);

    if ((x1 < xmin && x2 < xmin) || (x1 > xmax && x2 > xmax) || (y1 < ymin && y2 < ymin) ||
        (y1 > ymax && y2 > ymax))
        return ClipResult::rejected();
    return ClipResult::accepted({{x1, y1}, {x2, y2}});
}

} // namespace lineclip
