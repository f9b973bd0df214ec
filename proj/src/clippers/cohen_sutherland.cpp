#include "lineclip/clippers.hpp"

namespace lineclip {

unsigned compute_outcode(const Point2& p, const ClipWindow& w) noexcept
{
    unsigned code = kInside;
    if (p.x < w.xmin())
        code |= kLeft;
    else if (p.x > w.xmax())
        code |= kRight;
    if (p.y < w.ymin())
        code |= kBottom;
    else if (p.y > w.ymax())
        code |= kTop;
    return code;
}

namespace {

// Moves p onto the boundary named by one bit of `code`. The division is by the
// difference along the axis being cut, which is nonzero whenever that bit is
// set on one endpoint and clear on the other.
Point2 cut(const Point2& p, const Point2& q, unsigned code, const ClipWindow& w) noexcept
{
    if (code & kTop)
        return {p.x + (q.x - p.x) * (w.ymax() - p.y) / (q.y - p.y), w.ymax()};
    if (code & kBottom)
        return {p.x + (q.x - p.x) * (w.ymin() - p.y) / (q.y - p.y), w.ymin()};
    if (code & kRight)
        return {w.xmax(), p.y + (q.y - p.y) * (w.xmax() - p.x) / (q.x - p.x)};
    return {w.xmin(), p.y + (q.y - p.y) * (w.xmin() - p.x) / (q.x - p.x)};
}

} // namespace

ClipResult clip_cohen_sutherland(const Segment& seg, const ClipWindow& w) noexcept
{
    Point2 a = seg.p1, b = seg.p2;
    unsigned ca = compute_outcode(a, w);
    unsigned cb = compute_outcode(b, w);

    // Each endpoint needs at most one vertical and one horizontal cut, so four
    // cuts settle any segment. The cap only matters when rounding pushes a cut
    // point a hair past an adjacent boundary next to a corner.
    for (int cuts = 0;; ++cuts) {
        if ((ca | cb) == 0)
            return ClipResult::accepted({a, b});
        if (ca & cb)
            return ClipResult::rejected();
        if (cuts == 4)
            return ClipResult::accepted({a, b});

        if (ca != 0) {
            a = cut(a, b, ca, w);
            ca = compute_outcode(a, w);
        } else {
            b = cut(b, a, cb, w);
            cb = compute_outcode(b, w);
        }
    }
}

} // namespace lineclip
