#pragma once

#include <gmpxx.h>

#include "lineclip/geom.hpp"

namespace lineclip::oracle {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive
/// denominator) after every operation.
using Rational = mpq_class;

/// Exact lift of a finite double.
Rational exact(double v);

/// Nearest double, ties to even.
double round_to_double(const Rational& q);

struct ExactPoint {
    Rational x;
    Rational y;

    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

struct ExactSegment {
    ExactPoint p1;
    ExactPoint p2;

    friend bool operator==(const ExactSegment&, const ExactSegment&) = default;
};

struct ExactWindow {
    Rational xmin, ymin, xmax, ymax;
};

ExactSegment lift(const Segment& s);
ExactWindow lift(const ClipWindow& w);

/// Result of exact clipping.
///
/// `grazing` marks inputs whose clipped result is measure-zero or sits on the
/// window boundary in a way floating-point clippers may legitimately resolve
/// either way:
///  - the supporting line meets the closed window in a single point,
///  - the clipped part is a single point (t_enter == t_exit, including
///    degenerate segments that lie in the window),
///  - the segment runs along a boundary edge.
/// Equivalence checks exempt these cases from exact agreement.
struct ExactClipOutcome {
    bool accepted = false;
    bool grazing = false;
    ExactSegment segment; // valid when accepted
    Rational t_enter;     // valid when accepted
    Rational t_exit;      // valid when accepted
};

/// Parametric interval clip in exact arithmetic.
ExactClipOutcome clip_exact(const ExactSegment& seg, const ExactWindow& w);

inline ExactClipOutcome clip_exact(const Segment& seg, const ClipWindow& w)
{
    return clip_exact(lift(seg), lift(w));
}

/// Rounds accepted endpoints to the nearest doubles.
ClipResult to_double_outcome(const ExactClipOutcome& o);

} // namespace lineclip::oracle
