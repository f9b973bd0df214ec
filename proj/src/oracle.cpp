#include "lineclip/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>

namespace lineclip::oracle {

Rational exact(double v)
{
    Rational q;
    mpq_set_d(q.get_mpq_t(), v); // exact for finite doubles
    return q;
}

double round_to_double(const Rational& q)
{
    const double toward_zero = q.get_d();
    if (exact(toward_zero) == q)
        return toward_zero;
    const double away = std::nextafter(toward_zero, sgn(q) > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away))
        return toward_zero;

    const Rational gap_near = abs(q - exact(toward_zero));
    const Rational gap_far = abs(exact(away) - q);
    if (gap_near < gap_far)
        return toward_zero;
    if (gap_far < gap_near)
        return away;
    return (std::bit_cast<std::uint64_t>(toward_zero) & 1u) == 0 ? toward_zero : away;
}

ExactSegment lift(const Segment& s)
{
    return {{exact(s.p1.x), exact(s.p1.y)}, {exact(s.p2.x), exact(s.p2.y)}};
}

ExactWindow lift(const ClipWindow& w)
{
    return {exact(w.xmin()), exact(w.ymin()), exact(w.xmax()), exact(w.ymax())};
}

namespace {

// Parameter range of {t : p*t <= q for all four constraints}, with optional
// outer bounds (absent = unbounded). Empty result is nullopt.
struct Range {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

std::optional<Range> intersect(const ExactSegment& s, const ExactWindow& w, Range range)
{
    const Rational dx = s.p2.x - s.p1.x;
    const Rational dy = s.p2.y - s.p1.y;
    const Rational p[4] = {-dx, dx, -dy, dy};
    const Rational q[4] = {s.p1.x - w.xmin, w.xmax - s.p1.x, s.p1.y - w.ymin, w.ymax - s.p1.y};

    for (int k = 0; k < 4; ++k) {
        if (sgn(p[k]) == 0) {
            if (sgn(q[k]) < 0)
                return std::nullopt;
            continue;
        }
        Rational r = q[k] / p[k];
        if (sgn(p[k]) < 0) {
            if (!range.lo || r > *range.lo)
                range.lo = std::move(r);
        } else if (!range.hi || r < *range.hi) {
            range.hi = std::move(r);
        }
    }
    if (range.lo && range.hi && *range.lo > *range.hi)
        return std::nullopt;
    return range;
}

ExactPoint at(const ExactSegment& s, const Rational& t)
{
    return {s.p1.x + t * (s.p2.x - s.p1.x), s.p1.y + t * (s.p2.y - s.p1.y)};
}

} // namespace

ExactClipOutcome clip_exact(const ExactSegment& seg, const ExactWindow& w)
{
    ExactClipOutcome out;

    if (seg.p1 == seg.p2) {
        const ExactPoint& p = seg.p1;
        out.accepted = w.xmin <= p.x && p.x <= w.xmax && w.ymin <= p.y && p.y <= w.ymax;
        out.grazing = out.accepted;
        if (out.accepted) {
            out.segment = seg;
            out.t_enter = 0;
            out.t_exit = 0;
        }
        return out;
    }

    // The infinite line touching the window at exactly one point (a corner).
    if (const auto line = intersect(seg, w, Range{}); line && line->lo && line->hi && *line->lo == *line->hi)
        out.grazing = true;

    const auto clipped = intersect(seg, w, Range{Rational(0), Rational(1)});
    if (!clipped)
        return out;

    out.accepted = true;
    out.t_enter = *clipped->lo;
    out.t_exit = *clipped->hi;
    out.segment = {at(seg, out.t_enter), at(seg, out.t_exit)};

    if (out.t_enter == out.t_exit)
        out.grazing = true;

    const bool vertical = seg.p1.x == seg.p2.x;
    const bool horizontal = seg.p1.y == seg.p2.y;
    if ((vertical && (seg.p1.x == w.xmin || seg.p1.x == w.xmax)) ||
        (horizontal && (seg.p1.y == w.ymin || seg.p1.y == w.ymax)))
        out.grazing = true;

    return out;
}

ClipResult to_double_outcome(const ExactClipOutcome& o)
{
    if (!o.accepted)
        return ClipResult::rejected();
    const ExactSegment& s = o.segment;
    return ClipResult::accepted({{round_to_double(s.p1.x), round_to_double(s.p1.y)},
                                 {round_to_double(s.p2.x), round_to_double(s.p2.y)}});
}

} // namespace lineclip::oracle
