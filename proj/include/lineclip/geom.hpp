#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lineclip {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

/// Directed segment from p1 to p2. p1 == p2 is a legal (degenerate) value.
struct Segment {
    Point2 p1;
    Point2 p2;

    friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

/// Axis-aligned clip rectangle. Bounds must be finite and strictly ordered;
/// nothing is normalized, so swapped bounds throw.
class ClipWindow {
public:
    ClipWindow(double xmin, double ymin, double xmax, double ymax)
        : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax)
    {
        if (!std::isfinite(xmin) || !std::isfinite(ymin) || !std::isfinite(xmax) ||
            !std::isfinite(ymax))
            throw std::invalid_argument("clip window bounds must be finite");
        if (!(xmin < xmax) || !(ymin < ymax))
            throw std::invalid_argument("clip window requires xmin < xmax and ymin < ymax");
    }

    double xmin() const noexcept { return xmin_; }
    double ymin() const noexcept { return ymin_; }
    double xmax() const noexcept { return xmax_; }
    double ymax() const noexcept { return ymax_; }

    double width() const noexcept { return xmax_ - xmin_; }
    double height() const noexcept { return ymax_ - ymin_; }

    friend bool operator==(const ClipWindow&, const ClipWindow&) = default;

private:
    double xmin_, ymin_, xmax_, ymax_;
};

/// Outcome of clipping one segment. Rejected results carry a zeroed segment
/// so batches of results compare bitwise.
class ClipResult {
public:
    static constexpr ClipResult accepted(const Segment& s) noexcept { return ClipResult(s, true); }
    static constexpr ClipResult rejected() noexcept { return ClipResult({}, false); }

    constexpr ClipResult() noexcept = default;

    constexpr bool is_accepted() const noexcept { return accepted_; }
    constexpr explicit operator bool() const noexcept { return accepted_; }

    /// Only meaningful when is_accepted().
    constexpr const Segment& segment() const noexcept { return segment_; }

    friend constexpr bool operator==(const ClipResult&, const ClipResult&) = default;

private:
    constexpr ClipResult(const Segment& s, bool accepted) noexcept : segment_(s), accepted_(accepted) {}

    Segment segment_{};
    bool accepted_ = false;
};

/// Line through a segment's endpoints, stored as origin plus differences so
/// vertical lines never produce an infinite slope.
struct LineEquation {
    Point2 origin;
    double dx = 0.0;
    double dy = 0.0;

    static constexpr LineEquation through(const Segment& s) noexcept
    {
        return {s.p1, s.p2.x - s.p1.x, s.p2.y - s.p1.y};
    }
};

/// y on the line at abscissa x: y1 + (dy/dx)(x - x1). Requires dx != 0.
inline double y_at(const LineEquation& line, double x) noexcept
{
    assert(line.dx != 0.0);
    return line.origin.y + (line.dy / line.dx) * (x - line.origin.x);
}

/// x on the line at ordinate y: x1 + (dx/dy)(y - y1). Requires dy != 0.
inline double x_at(const LineEquation& line, double y) noexcept
{
    assert(line.dy != 0.0);
    return line.origin.x + (line.dx / line.dy) * (y - line.origin.y);
}

/// Boundary-inclusive containment.
inline bool contains(const ClipWindow& w, const Point2& p) noexcept
{
    return w.xmin() <= p.x && p.x <= w.xmax() && w.ymin() <= p.y && p.y <= w.ymax();
}

inline bool is_finite(const Point2& p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(const Segment& s) noexcept { return is_finite(s.p1) && is_finite(s.p2); }

} // namespace lineclip
