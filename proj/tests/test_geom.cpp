#include <doctest.h>

#include <cmath>
#include <random>

#include "lineclip/geom.hpp"

using namespace lineclip;

namespace {

LineEquation line(double x1, double y1, double x2, double y2)
{
    return LineEquation::through({{x1, y1}, {x2, y2}});
}

const ClipWindow kWindow{-100, -75, 100, 75};

} // namespace

TEST_CASE("y_at evaluates the line equation")
{
    CHECK(y_at(line(0, 0, 400, 400), -100) == -100);
    CHECK(y_at(line(-200, 0, 0, 200), -100) == 100);
    CHECK(y_at(line(-200, 0, 200, 80), -100) == doctest::Approx(20).epsilon(1e-15));
}

TEST_CASE("x_at evaluates the line equation")
{
    CHECK(x_at(line(0, 0, 400, 400), 75) == 75);
    CHECK(x_at(line(-200, 200, 0, 0), 75) == -75);
    CHECK(x_at(line(-200, -200, 200, 200), -75) == -75);
}

TEST_CASE("containment is boundary inclusive")
{
    CHECK(contains(kWindow, {0, 0}));
    CHECK(contains(kWindow, {-100, 75}));
    CHECK_FALSE(contains(kWindow, {-100.0001, 0}));
    for (double x : {-100.0, 100.0})
        for (double y : {-75.0, 75.0})
            CHECK(contains(kWindow, {x, y}));
    CHECK_FALSE(contains(kWindow, {0, std::nextafter(75.0, 100.0)}));
}

TEST_CASE("window construction rejects bad bounds")
{
    CHECK_THROWS_AS(ClipWindow(1, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(ClipWindow(2, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(ClipWindow(0, 3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(ClipWindow(0, 0, INFINITY, 3), std::invalid_argument);
    CHECK_THROWS_AS(ClipWindow(NAN, 0, 1, 3), std::invalid_argument);
    CHECK_NOTHROW(ClipWindow(-1e-300, 0, 0, 1e-300));
}

TEST_CASE("line equation properties on random lines")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-1000, 1000);
    for (int i = 0; i < 20000; ++i) {
        const LineEquation l = line(coord(rng), coord(rng), coord(rng), coord(rng));
        if (l.dx == 0 || l.dy == 0)
            continue;
        const double x = coord(rng);
        const double y = y_at(l, x);
        REQUIRE(std::isfinite(y));

        // Round trip through both forms.
        const double back = x_at(l, y);
        CHECK(std::abs(back - x) <= 1e-9 * std::max(1.0, std::abs(x)));

        // Collinearity of (x, y_at(x)).
        const double residual = std::abs(l.dy * (x - l.origin.x) - l.dx * (y - l.origin.y));
        CHECK(residual <= 1e-6 * std::max(std::abs(l.dx), std::abs(l.dy)) * std::max(1.0, std::abs(x - l.origin.x)));
    }
}
