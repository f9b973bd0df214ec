#include "lineclip/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lineclip/bench.hpp"
#include "lineclip/format.hpp"

namespace lineclip::verify {

namespace {

constexpr double kParamSlack = 1e-9;
constexpr double kLineSlack = 1e-6;
constexpr double kDrift = 1e-9;

bool close(const Point2& a, const Point2& b, double tol) noexcept
{
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

bool close(const Segment& a, const Segment& b, double tol) noexcept
{
    return close(a.p1, b.p1, tol) && close(a.p2, b.p2, tol);
}

Point2 mirror_x(const Point2& p) noexcept { return {-p.x, p.y}; }
Point2 mirror_y(const Point2& p) noexcept { return {p.x, -p.y}; }
Segment mirror_x(const Segment& s) noexcept { return {mirror_x(s.p1), mirror_x(s.p2)}; }
Segment mirror_y(const Segment& s) noexcept { return {mirror_y(s.p1), mirror_y(s.p2)}; }
ClipWindow mirror_x(const ClipWindow& w) { return {-w.xmax(), w.ymin(), -w.xmin(), w.ymax()}; }
ClipWindow mirror_y(const ClipWindow& w) { return {w.xmin(), -w.ymax(), w.xmax(), -w.ymin()}; }

} // namespace

std::string describe(const Segment& s)
{
    return format_double(s.p1.x) + ' ' + format_double(s.p1.y) + ' ' + format_double(s.p2.x) + ' ' +
           format_double(s.p2.y);
}

std::string describe(const ClipResult& r)
{
    return r ? "ACCEPT " + describe(r.segment()) : std::string("REJECT");
}

double containment_slack(const ClipWindow& w) noexcept
{
    return 1e-9 * std::max({1.0, w.width(), w.height()});
}

bool within_expanded(const ClipWindow& w, const Point2& p) noexcept
{
    const double e = containment_slack(w);
    return w.xmin() - e <= p.x && p.x <= w.xmax() + e && w.ymin() - e <= p.y && p.y <= w.ymax() + e;
}

std::string subsegment_violation(const Segment& original, const Segment& clipped)
{
    const double dx = original.p2.x - original.p1.x;
    const double dy = original.p2.y - original.p1.y;
    const double len2 = dx * dx + dy * dy;

    if (len2 == 0.0) {
        if (!close(clipped.p1, original.p1, kDrift) || !close(clipped.p2, original.p1, kDrift))
            return "point segment moved";
        return {};
    }

    const double len = std::sqrt(len2);
    double t[2];
    const Point2 ends[2] = {clipped.p1, clipped.p2};
    for (int k = 0; k < 2; ++k) {
        const double ex = ends[k].x - original.p1.x;
        const double ey = ends[k].y - original.p1.y;
        t[k] = (ex * dx + ey * dy) / len2;
        if (t[k] < -kParamSlack || t[k] > 1.0 + kParamSlack)
            return "endpoint parameter " + format_double(t[k]) + " outside [0,1]";
        const double magnitude = std::max({1.0, std::abs(ends[k].x), std::abs(ends[k].y),
                                           std::abs(original.p1.x), std::abs(original.p1.y)});
        const double dist = std::abs(dx * ey - dy * ex) / len;
        if (dist > kLineSlack * magnitude)
            return "endpoint " + format_double(dist) + " off the supporting line";
    }
    if (t[0] > t[1] + kParamSlack)
        return "endpoints out of order";
    return {};
}

Verdict judge(const Segment& seg, const ClipWindow& w, const ClipResult& got,
              const oracle::ExactClipOutcome& exact, double tolerance, std::string* why)
{
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return Verdict::Mismatch;
    };

    if (got) {
        const Segment& s = got.segment();
        if (!is_finite(s))
            return fail("non-finite output");
        if (exact.grazing) {
            if (!within_expanded(w, s.p1) || !within_expanded(w, s.p2))
                return fail("grazing case accepted outside the window");
            if (std::string v = subsegment_violation(seg, s); !v.empty())
                return fail("grazing case: " + v);
            return Verdict::GrazingExempt;
        }
    } else if (exact.grazing) {
        return Verdict::GrazingExempt;
    }

    const ClipResult expected = oracle::to_double_outcome(exact);
    if (expected.is_accepted() != got.is_accepted())
        return fail("expected " + describe(expected));
    if (got && !close(got.segment(), expected.segment(), tolerance))
        return fail("expected " + describe(expected));
    return Verdict::Match;
}

std::vector<NamedClipper> all_clippers()
{
    std::vector<NamedClipper> out;
    for (AlgorithmId id : kAllAlgorithms)
        out.push_back({std::string(algorithm_name(id)), clip_function(id)});
    return out;
}

bool VerifyReport::ok() const noexcept
{
    return std::all_of(tallies.begin(), tallies.end(), [](const Tally& t) { return t.mismatch == 0; });
}

std::vector<Segment> adversarial_suite(const ClipWindow& w)
{
    const double x0 = w.xmin(), x1 = w.xmax(), y0 = w.ymin(), y1 = w.ymax();
    const double W = w.width(), H = w.height();
    const double cx = x0 + W / 2, cy = y0 + H / 2;
    std::vector<Segment> out;
    auto add = [&](double ax, double ay, double bx, double by) { out.push_back({{ax, ay}, {bx, by}}); };
    auto both = [&](double ax, double ay, double bx, double by) {
        add(ax, ay, bx, by);
        add(bx, by, ax, ay);
    };

    // Nine region sample points, every ordered pair (diagonal = points).
    const double xs[3] = {x0 - W / 2, cx, x1 + W / 2};
    const double ys[3] = {y0 - H / 2, cy, y1 + H / 2};
    for (double ax : xs)
        for (double ay : ys)
            for (double bx : xs)
                for (double by : ys)
                    add(ax, ay, bx, by);

    // Degenerate points on corners, edge midpoints, and one ulp outside.
    for (double px : {x0, x1})
        for (double py : {y0, y1})
            add(px, py, px, py);
    add(x0, cy, x0, cy);
    add(x1, cy, x1, cy);
    add(cx, y0, cx, y0);
    add(cx, y1, cx, y1);
    add(std::nextafter(x0, -HUGE_VAL), cy, std::nextafter(x0, -HUGE_VAL), cy);
    add(std::nextafter(x1, HUGE_VAL), cy, std::nextafter(x1, HUGE_VAL), cy);
    add(cx, std::nextafter(y0, -HUGE_VAL), cx, std::nextafter(y0, -HUGE_VAL));
    add(cx, std::nextafter(y1, HUGE_VAL), cx, std::nextafter(y1, HUGE_VAL));

    // Vertical and horizontal: through, on the boundary lines, outside,
    // half-in, ending on the boundary.
    both(cx, y0 - H, cx, y1 + H);
    both(x0, y0 - H, x0, y1 + H);
    both(x1, y0 - H, x1, y1 + H);
    both(x0 - W, y0 - H, x0 - W, y1 + H);
    both(x1 + W, y0 - H, x1 + W, y1 + H);
    both(cx, cy, cx, y1 + H);
    both(cx, y0, cx, y1);
    both(cx, y1, cx, y1 + H);
    both(cx, y1 + H / 4, cx, y1 + H);
    both(x0 - W, cy, x1 + W, cy);
    both(x0 - W, y0, x1 + W, y0);
    both(x0 - W, y1, x1 + W, y1);
    both(x0 - W, y0 - H, x1 + W, y0 - H);
    both(x0 - W, y1 + H, x1 + W, y1 + H);
    both(cx, cy, x1 + W, cy);
    both(x0, cy, x1, cy);
    both(x1, cy, x1 + W, cy);

    // Along boundary edges, partly overlapping or touching only at a corner.
    both(cx, y1, x1 + W, y1);
    both(x0, cy, x0, y0 - H);
    both(x1, y1, x1 + W, y1);
    both(x0, y0, x0, y0 - H);

    // Lines touching the window only at a corner, passing through it or
    // stopping exactly there.
    both(x0 - W, y1 - W, x0 + W, y1 + W);
    both(x1 - W, y1 + W, x1 + W, y1 - W);
    both(x0 - W, y0 + W, x0 + W, y0 - W);
    both(x1 - W, y0 - W, x1 + W, y0 + W);
    both(x0 - W, y1 - W, x0, y1);
    both(x1 + W, y0 + W, x1, y0);

    // Corner-to-corner diagonals, extended and exact.
    both(x0 - W, y0 - H, x1 + W, y1 + H);
    both(x0 - W, y1 + H, x1 + W, y0 - H);
    both(x0, y0, x1, y1);
    both(x1, y0, x0, y1);

    // Endpoints on the boundary pointing inward and outward.
    both(x0, cy, cx, cy + H / 4);
    both(x0, cy, x0 - W, cy + H / 4);
    both(cx, y1, cx + W / 4, y1 + H);

    // Nearly axis-parallel and very long.
    both(cx, y0 - H, std::nextafter(cx, HUGE_VAL), y1 + H);
    both(x0 - W, cy, x1 + W, std::nextafter(cy, HUGE_VAL));
    both(x0 - 100 * W, cy, x1 + 100 * W, cy + H / 8);
    both(cx - W / 1024, y0 - 100 * H, cx + W / 1024, y1 + 100 * H);

    // Tiny segments inside and straddling an edge.
    both(cx, cy, cx + W * 1e-6, cy + H * 1e-6);
    both(x0 - W * 1e-3, cy, x0 + W * 1e-3, cy + H * 1e-3);

    return out;
}

VerifyReport run_verify(const VerifyConfig& config)
{
    VerifyReport report;
    report.tallies.resize(config.clippers.size());

    auto check = [&](const Segment& seg, bool random) {
        const oracle::ExactClipOutcome exact = oracle::clip_exact(seg, config.window);
        if (random && exact.grazing)
            ++report.random_grazing;
        for (std::size_t k = 0; k < config.clippers.size(); ++k) {
            const ClipResult got = config.clippers[k].fn(seg, config.window);
            std::string why;
            switch (judge(seg, config.window, got, exact, config.tolerance, &why)) {
            case Verdict::Match: ++report.tallies[k].match; break;
            case Verdict::GrazingExempt: ++report.tallies[k].grazing_exempt; break;
            case Verdict::Mismatch:
                ++report.tallies[k].mismatch;
                if (report.failures.size() < kMaxReportedFailures)
                    report.failures.push_back(
                        {config.clippers[k].name, seg, "got " + describe(got) + ", " + why});
                break;
            }
        }
    };

    bench::SplitMix64 gen{config.seed};
    for (std::uint64_t i = 0; i < config.cases; ++i)
        check(bench::gen_segment(gen, config.space), true);
    report.random_cases = config.cases;

    const std::vector<Segment> suite = adversarial_suite(config.window);
    for (const Segment& s : suite)
        check(s, false);
    report.adversarial_cases = suite.size();
    return report;
}

InvariantTally check_invariants(ClipFn fn, const std::vector<Segment>& inputs, const ClipWindow& w)
{
    InvariantTally tally;
    const ClipWindow wx = mirror_x(w);
    const ClipWindow wy = mirror_y(w);

    auto note = [&](std::uint64_t& counter, const Segment& s, const std::string& what) {
        ++counter;
        if (tally.examples.size() < 10)
            tally.examples.push_back(what + " for " + describe(s));
    };

    for (const Segment& s : inputs) {
        ++tally.cases;
        std::optional<bool> grazing;
        auto is_grazing = [&](const Segment& q) { return oracle::clip_exact(q, w).grazing; };

        const ClipResult r = fn(s, w);
        if (r) {
            const Segment& c = r.segment();
            if (!is_finite(c)) {
                note(tally.non_finite, s, "non-finite output");
                continue;
            }
            if (!within_expanded(w, c.p1) || !within_expanded(w, c.p2))
                note(tally.containment, s, "containment");
            if (std::string v = subsegment_violation(s, c); !v.empty())
                note(tally.subsegment, s, v);

            const ClipResult again = fn(c, w);
            if ((!again || !close(again.segment(), c, kDrift)) && !is_grazing(c))
                note(tally.idempotence, s, "idempotence: " + describe(again));
        }

        const ClipResult rx = fn(mirror_x(s), wx);
        const ClipResult ry = fn(mirror_y(s), wy);
        const bool x_ok = rx.is_accepted() == r.is_accepted() &&
                          (!r || close(rx.segment(), mirror_x(r.segment()), kDrift));
        const bool y_ok = ry.is_accepted() == r.is_accepted() &&
                          (!r || close(ry.segment(), mirror_y(r.segment()), kDrift));
        if (!x_ok || !y_ok) {
            if (!grazing)
                grazing = is_grazing(s);
            if (!*grazing) {
                if (!x_ok)
                    note(tally.mirror_x, s, "x mirror: " + describe(rx) + " vs " + describe(r));
                if (!y_ok)
                    note(tally.mirror_y, s, "y mirror: " + describe(ry) + " vs " + describe(r));
            }
        }
    }
    return tally;
}

} // namespace lineclip::verify
