#include "lineclip/clippers.hpp"

#include <utility>

namespace lineclip {

namespace {

struct Box {
    double xmin, ymin, xmax, ymax;
};

// Exact symmetry of the plane: optional transpose, then optional mirrors.
// Negation and swapping are exact in floating point, so mapping a problem
// into the canonical frame and back loses nothing.
struct Symmetry {
    bool transpose = false;
    bool flip_x = false;
    bool flip_y = false;

    Point2 forward(Point2 p) const noexcept
    {
        if (transpose)
            std::swap(p.x, p.y);
        if (flip_x)
            p.x = -p.x;
        if (flip_y)
            p.y = -p.y;
        return p;
    }

    Point2 inverse(Point2 p) const noexcept
    {
        if (flip_x)
            p.x = -p.x;
        if (flip_y)
            p.y = -p.y;
        if (transpose)
            std::swap(p.x, p.y);
        return p;
    }

    Box forward(const ClipWindow& w) const noexcept
    {
        Box b{w.xmin(), w.ymin(), w.xmax(), w.ymax()};
        if (transpose)
            b = {b.ymin, b.xmin, b.ymax, b.xmax};
        if (flip_x)
            b = {-b.xmax, b.ymin, -b.xmin, b.ymax};
        if (flip_y)
            b = {b.xmin, -b.ymax, b.xmax, -b.ymin};
        return b;
    }
};

// Symmetry taking a point with region code `code` to the left edge region
// (edge codes) or the top-left corner region (corner codes).
Symmetry canonical_for(unsigned code) noexcept
{
    switch (code) {
    case kRight:
        return {false, true, false};
    case kBottom:
        return {true, false, false};
    case kTop:
        return {true, true, false};
    case kRight | kTop:
        return {false, true, false};
    case kLeft | kBottom:
        return {false, false, true};
    case kRight | kBottom:
        return {false, true, true};
    default: // kInside, kLeft, kLeft | kTop
        return {};
    }
}

unsigned region(const Point2& p, const Box& b) noexcept
{
    unsigned code = kInside;
    if (p.x < b.xmin)
        code |= kLeft;
    else if (p.x > b.xmax)
        code |= kRight;
    if (p.y < b.ymin)
        code |= kBottom;
    else if (p.y > b.ymax)
        code |= kTop;
    return code;
}

// > 0 when q lies counter-clockwise of the ray from o through a.
double orient(const Point2& o, const Point2& a, const Point2& q) noexcept
{
    return (a.x - o.x) * (q.y - o.y) - (a.y - o.y) * (q.x - o.x);
}

struct Frame {
    Box box;
    LineEquation line;

    Point2 on_left() const noexcept { return {box.xmin, y_at(line, box.xmin)}; }
    Point2 on_right() const noexcept { return {box.xmax, y_at(line, box.xmax)}; }
    Point2 on_bottom() const noexcept { return {x_at(line, box.ymin), box.ymin}; }
    Point2 on_top() const noexcept { return {x_at(line, box.ymax), box.ymax}; }

    Point2 top_left() const noexcept { return {box.xmin, box.ymax}; }
    Point2 top_right() const noexcept { return {box.xmax, box.ymax}; }
    Point2 bottom_left() const noexcept { return {box.xmin, box.ymin}; }
    Point2 bottom_right() const noexcept { return {box.xmax, box.ymin}; }
};

// p is left of the window (edge or corner region) and the segment is known to
// reach x >= xmin. Picks the exit edge for q; q is not inside.
Point2 exit_point(const Frame& f, const Point2& p, const Point2& q) noexcept
{
    const Box& b = f.box;
    if (q.y > b.ymax)
        return orient(p, f.top_right(), q) > 0.0 ? f.on_top() : f.on_right();
    if (q.y < b.ymin)
        return orient(p, f.bottom_right(), q) < 0.0 ? f.on_bottom() : f.on_right();
    return f.on_right();
}

// p inside; q in the left edge region or the top-left corner region.
Segment from_inside(const Frame& f, const Point2& p, const Point2& q) noexcept
{
    if (q.y <= f.box.ymax)
        return {p, f.on_left()};
    return {p, orient(p, f.top_left(), q) > 0.0 ? f.on_left() : f.on_top()};
}

// p in the left edge region.
std::optional<Segment> from_left_edge(const Frame& f, const Point2& p, const Point2& q) noexcept
{
    if (q.x < f.box.xmin)
        return std::nullopt;
    if (orient(p, f.top_left(), q) > 0.0 || orient(p, f.bottom_left(), q) < 0.0)
        return std::nullopt;
    const Point2 entry = f.on_left();
    if (region(q, f.box) == kInside)
        return Segment{entry, q};
    return Segment{entry, exit_point(f, p, q)};
}

// p in the top-left corner region.
std::optional<Segment> from_corner(const Frame& f, const Point2& p, const Point2& q) noexcept
{
    if (q.x < f.box.xmin || q.y > f.box.ymax)
        return std::nullopt;
    if (orient(p, f.top_right(), q) > 0.0 || orient(p, f.bottom_left(), q) < 0.0)
        return std::nullopt;
    const Point2 entry = orient(p, f.top_left(), q) > 0.0 ? f.on_top() : f.on_left();
    if (region(q, f.box) == kInside)
        return Segment{entry, q};
    return Segment{entry, exit_point(f, p, q)};
}

} // namespace

ClipResult clip_nicholl_lee_nicholl(const Segment& seg, const ClipWindow& w) noexcept
{
    const unsigned code1 = compute_outcode(seg.p1, w);
    const unsigned code2 = compute_outcode(seg.p2, w);

    if (code1 == kInside) {
        if (code2 == kInside)
            return ClipResult::accepted(seg);
        const Symmetry sym = canonical_for(code2);
        const Point2 p = sym.forward(seg.p1), q = sym.forward(seg.p2);
        const Frame f{sym.forward(w), LineEquation::through({p, q})};
        const Segment s = from_inside(f, p, q);
        return ClipResult::accepted({sym.inverse(s.p1), sym.inverse(s.p2)});
    }

    const Symmetry sym = canonical_for(code1);
    const Point2 p = sym.forward(seg.p1), q = sym.forward(seg.p2);
    const Frame f{sym.forward(w), LineEquation::through({p, q})};
    const bool corner = (code1 & (kLeft | kRight)) && (code1 & (kBottom | kTop));
    const std::optional<Segment> s = corner ? from_corner(f, p, q) : from_left_edge(f, p, q);
    if (!s)
        return ClipResult::rejected();
    return ClipResult::accepted({sym.inverse(s->p1), sym.inverse(s->p2)});
}

} // namespace lineclip
