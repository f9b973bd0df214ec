#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "lineclip/clippers.hpp"
#include "lineclip/oracle.hpp"
#include "lineclip/verify.hpp"

using namespace lineclip;

namespace {

const ClipWindow kWindow{-100, -75, 100, 75};

Segment seg(double x1, double y1, double x2, double y2) { return {{x1, y1}, {x2, y2}}; }

void check_accepts(const ClipResult& r, const Segment& expected)
{
    REQUIRE(r.is_accepted());
    const Segment& s = r.segment();
    CHECK(std::abs(s.p1.x - expected.p1.x) <= 1e-9);
    CHECK(std::abs(s.p1.y - expected.p1.y) <= 1e-9);
    CHECK(std::abs(s.p2.x - expected.p2.x) <= 1e-9);
    CHECK(std::abs(s.p2.y - expected.p2.y) <= 1e-9);
}

} // namespace

TEST_CASE("shared examples hold for every algorithm")
{
    // Expected values below were produced by the exact oracle; the oracle is
    // re-run here so a regression in either side shows up.
    struct Example {
        Segment in;
        bool accepted;
        Segment out;
    };
    const Example examples[] = {
        {seg(0, 0, 50, 50), true, seg(0, 0, 50, 50)},
        {seg(-200, 10, -150, -20), false, {}},
        {seg(-200, -200, 200, 200), true, seg(-75, -75, 75, 75)},
        {seg(-200, 0, 0, 200), false, {}},
        {seg(-200, 0, 200, 80), true, seg(-100, 20, 100, 60)},
        {seg(-200, 200, 0, 0), true, seg(-75, 75, 0, 0)},
        {seg(0, -1000, 0, 1000), true, seg(0, -75, 0, 75)},
        {seg(-150, 80, -150, 90), false, {}},
    };

    for (const Example& ex : examples) {
        const oracle::ExactClipOutcome exact = oracle::clip_exact(ex.in, kWindow);
        REQUIRE(exact.accepted == ex.accepted);
        CHECK_FALSE(exact.grazing);
        if (ex.accepted)
            CHECK(oracle::to_double_outcome(exact).segment() == ex.out);

        for (AlgorithmId id : kAllAlgorithms) {
            CAPTURE(std::string(algorithm_name(id)));
            CAPTURE(verify::describe(ex.in));
            const ClipResult r = clip(id, ex.in, kWindow);
            if (ex.accepted)
                check_accepts(r, ex.out);
            else
                CHECK_FALSE(r.is_accepted());
        }
    }
}

TEST_CASE("fully inside segments come back unchanged")
{
    for (AlgorithmId id : kAllAlgorithms) {
        const ClipResult r = clip(id, seg(0, 0, 50, 50), kWindow);
        REQUIRE(r);
        CHECK(r.segment() == seg(0, 0, 50, 50));
    }
}

TEST_CASE("outcodes")
{
    CHECK(compute_outcode({-150, 80}, kWindow) == (kLeft | kTop));
    CHECK(compute_outcode({0, 0}, kWindow) == kInside);
    CHECK(compute_outcode({100, -75}, kWindow) == kInside);
    CHECK(compute_outcode({101, -76}, kWindow) == (kRight | kBottom));
    CHECK((compute_outcode({-150, 80}, kWindow) & compute_outcode({-150, 90}, kWindow)) == (kLeft | kTop));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-300, 300);
    for (int i = 0; i < 10000; ++i) {
        const Point2 p{coord(rng), coord(rng)};
        const unsigned c = compute_outcode(p, kWindow);
        CHECK((c & (kLeft | kRight)) != (kLeft | kRight));
        CHECK((c & (kBottom | kTop)) != (kBottom | kTop));
        CHECK((c == kInside) == contains(kWindow, p));
    }
}

TEST_CASE("homogeneous line coefficients")
{
    CHECK(line_coefficients(seg(0, 0, 50, 50)) == HomogeneousLine{-50, 50, 0});
    CHECK(line_coefficients(seg(0, 5, 10, 5)) == HomogeneousLine{0, 10, -50});
    CHECK(line_coefficients(seg(3, 0, 3, 7)) == HomogeneousLine{-7, 0, 21});

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-960, 960);
    for (int i = 0; i < 10000; ++i) {
        const Segment s = seg(coord(rng), coord(rng), coord(rng), coord(rng));
        const HomogeneousLine l = line_coefficients(s);
        CHECK((l.a != 0 || l.b != 0));
        for (const Point2& p : {s.p1, s.p2}) {
            const double scale = std::max({1.0, std::abs(l.a), std::abs(l.b), std::abs(l.c)}) *
                                 std::max({1.0, std::abs(p.x), std::abs(p.y)});
            CHECK(std::abs(l.eval(p)) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("degenerate point segments follow containment")
{
    const Point2 points[] = {{0, 0}, {-100, 75}, {100, 0}, {0, -75}, {-100.5, 0}, {0, 75.5}, {500, 500}};
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(std::string(algorithm_name(id)));
        for (const Point2& p : points) {
            const ClipResult r = clip(id, {p, p}, kWindow);
            CHECK(r.is_accepted() == contains(kWindow, p));
            if (r)
                CHECK(r.segment() == Segment{p, p});
        }
    }
}

TEST_CASE("axis-parallel and near-axis inputs stay finite")
{
    const double tiny = std::nextafter(0.0, 1.0);
    const Segment cases[] = {
        seg(0, -1000, 0, 1000),       seg(-1000, 0, 1000, 0),       seg(-100, -1000, -100, 1000),
        seg(100, 1000, 100, -1000),   seg(-1000, 75, 1000, 75),     seg(0, -225, tiny, 225),
        seg(-225, 0, 225, tiny),      seg(-100, 0, std::nextafter(-100.0, -200.0), 500),
        seg(-1e6, 1, 1e6, 1 + 1e-9), seg(1, -1e6, 1 + 1e-9, 1e6),
    };
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(std::string(algorithm_name(id)));
        for (const Segment& s : cases) {
            CAPTURE(verify::describe(s));
            const ClipResult r = clip(id, s, kWindow);
            if (r)
                CHECK(is_finite(r.segment()));
        }
    }
}

TEST_CASE("Cohen-Sutherland rejects by outcode AND")
{
    CHECK_FALSE(clip_cohen_sutherland(seg(-150, 80, -150, 90), kWindow));
    CHECK_FALSE(clip_cohen_sutherland(seg(-150, 80, 150, 90), kWindow)); // both TOP
}

TEST_CASE("proposed clamps x first and then y, using the original endpoints")
{
    // x clamp alone lands at (-100, 100); the y clamp then moves it to (-75, 75).
    const ClipResult r = clip_proposed(seg(-200, 200, 0, 0), kWindow);
    REQUIRE(r);
    CHECK(r.segment() == seg(-75, 75, 0, 0));

    // Line passes above the top-left corner: both endpoints end up left of xmin.
    CHECK_FALSE(clip_proposed(seg(-200, 0, 0, 200), kWindow));
}

TEST_CASE("segment direction is preserved")
{
    for (AlgorithmId id : kAllAlgorithms) {
        CAPTURE(std::string(algorithm_name(id)));
        const ClipResult fwd = clip(id, seg(-200, 0, 200, 80), kWindow);
        const ClipResult back = clip(id, seg(200, 80, -200, 0), kWindow);
        REQUIRE(fwd);
        REQUIRE(back);
        CHECK(std::abs(fwd.segment().p1.x - back.segment().p2.x) <= 1e-9);
        CHECK(std::abs(fwd.segment().p1.y - back.segment().p2.y) <= 1e-9);
        CHECK(std::abs(fwd.segment().p2.x - back.segment().p1.x) <= 1e-9);
        CHECK(std::abs(fwd.segment().p2.y - back.segment().p1.y) <= 1e-9);
    }
}

TEST_CASE("algorithm names round trip")
{
    for (AlgorithmId id : kAllAlgorithms)
        CHECK(parse_algorithm(algorithm_name(id)) == id);
    CHECK(parse_algorithm("proposed") == AlgorithmId::Proposed);
    CHECK(parse_algorithm("Nicholl-Lee-Nicholl") == AlgorithmId::NichollLeeNicholl);
    CHECK(parse_algorithm("midpoint") == std::nullopt);
}

TEST_CASE("oracle agreement on random windows and segments")
{
    // Windows away from the benchmark setup, at several scales and with
    // non-integral bounds.
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(-1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const double scale = std::ldexp(1.0, static_cast<int>(trial % 8) - 2);
        const double cx = unit(rng) * 10 * scale, cy = unit(rng) * 10 * scale;
        const double hw = (0.1 + std::abs(unit(rng))) * scale, hh = (0.1 + std::abs(unit(rng))) * scale;
        const ClipWindow w{cx - hw, cy - hh, cx + hw, cy + hh};
        for (int i = 0; i < 500; ++i) {
            const Segment s = seg(cx + unit(rng) * 4 * hw, cy + unit(rng) * 4 * hh, cx + unit(rng) * 4 * hw,
                                  cy + unit(rng) * 4 * hh);
            const oracle::ExactClipOutcome exact = oracle::clip_exact(s, w);
            for (AlgorithmId id : kAllAlgorithms) {
                std::string why;
                const verify::Verdict v = verify::judge(s, w, clip(id, s, w), exact, 1e-9, &why);
                CAPTURE(std::string(algorithm_name(id)));
                CAPTURE(verify::describe(s));
                CAPTURE(why);
                CHECK(v != verify::Verdict::Mismatch);
            }
        }
    }
}

TEST_CASE("invariants on a seeded sample plus the adversarial suite")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> x(-960, 960), y(-720, 720);
    std::vector<Segment> inputs = verify::adversarial_suite(kWindow);
    for (int i = 0; i < 5000; ++i)
        inputs.push_back(seg(x(rng), y(rng), x(rng), y(rng)));

    for (AlgorithmId id : kAllAlgorithms) {
        const verify::InvariantTally t = verify::check_invariants(clip_function(id), inputs, kWindow);
        CAPTURE(std::string(algorithm_name(id)));
        for (const std::string& e : t.examples)
            MESSAGE(e);
        CHECK(t.violations() == 0);
    }
}

TEST_CASE("windows far from the origin")
{
    // Regression: Skala once built its line through the origin, where
    // x1*y2 - x2*y1 cancels catastrophically once the window sits near 1e6.
    for (double off : {1e6, 1e9, 1e12}) {
        const ClipWindow w{off - 100, off - 75, off + 100, off + 75};
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> u(-400, 400);
        for (int i = 0; i < 3000; ++i) {
            const Segment s = seg(off + u(rng), off + u(rng), off + u(rng), off + u(rng));
            const oracle::ExactClipOutcome exact = oracle::clip_exact(s, w);
            if (exact.grazing)
                continue;
            const ClipResult expected = oracle::to_double_outcome(exact);
            for (AlgorithmId id : kAllAlgorithms) {
                CAPTURE(off);
                CAPTURE(std::string(algorithm_name(id)));
                CAPTURE(verify::describe(s));
                const ClipResult r = clip(id, s, w);
                REQUIRE(r.is_accepted() == expected.is_accepted());
                if (!r)
                    continue;
                // Endpoint error grows with coordinate magnitude for the
                // iterative and slope-intercept formulations.
                const double tol = 1e-13 * off;
                CHECK(std::abs(r.segment().p1.x - expected.segment().p1.x) <= tol);
                CHECK(std::abs(r.segment().p1.y - expected.segment().p1.y) <= tol);
                CHECK(std::abs(r.segment().p2.x - expected.segment().p2.x) <= tol);
                CHECK(std::abs(r.segment().p2.y - expected.segment().p2.y) <= tol);
            }
        }
    }
}
