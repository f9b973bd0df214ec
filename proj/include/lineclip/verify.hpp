#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lineclip/clippers.hpp"
#include "lineclip/oracle.hpp"

namespace lineclip::verify {

/// Hand-built hard cases relative to `w`: degenerate points, axis-parallel
/// and boundary-collinear segments, corner-grazing lines, corner-to-corner
/// diagonals, and every pairing of the nine region sample points.
std::vector<Segment> adversarial_suite(const ClipWindow& w);

/// Containment slack: 1e-9 * max(1, window extent).
double containment_slack(const ClipWindow& w) noexcept;

bool within_expanded(const ClipWindow& w, const Point2& p) noexcept;

/// Empty string when `clipped` is a forward sub-segment of `original`
/// (parameter range, ordering, and distance from the supporting line all
/// within tolerance); otherwise a short description of the violation.
std::string subsegment_violation(const Segment& original, const Segment& clipped);

enum class Verdict {
    Match,
    GrazingExempt,
    Mismatch,
};

/// Compares one clipper result against the exact outcome. Grazing inputs are
/// exempt from agreement, but an accepted result must still be contained and
/// lie on the segment.
Verdict judge(const Segment& seg, const ClipWindow& w, const ClipResult& got,
              const oracle::ExactClipOutcome& exact, double tolerance, std::string* why = nullptr);

struct NamedClipper {
    std::string name;
    ClipFn fn;
};

std::vector<NamedClipper> all_clippers();

struct VerifyConfig {
    std::uint64_t cases = 100'000;
    std::uint64_t seed = 1;
    ClipWindow space{-960.0, -720.0, 960.0, 720.0};
    ClipWindow window{-100.0, -75.0, 100.0, 75.0};
    double tolerance = 1e-9;
    std::vector<NamedClipper> clippers = all_clippers();
};

struct Tally {
    std::uint64_t match = 0;
    std::uint64_t grazing_exempt = 0;
    std::uint64_t mismatch = 0;
};

struct Failure {
    std::string clipper;
    Segment segment;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t random_cases = 0;
    std::uint64_t adversarial_cases = 0;
    std::uint64_t random_grazing = 0; // random inputs the oracle flags as grazing
    std::vector<Tally> tallies;       // parallel to config.clippers
    std::vector<Failure> failures;    // first few, in discovery order

    bool ok() const noexcept;
};

inline constexpr std::size_t kMaxReportedFailures = 10;

VerifyReport run_verify(const VerifyConfig& config);

/// Per-invariant violation counts for one clipper over a set of inputs.
struct InvariantTally {
    std::uint64_t cases = 0;
    std::uint64_t containment = 0;
    std::uint64_t subsegment = 0;
    std::uint64_t idempotence = 0;
    std::uint64_t mirror_x = 0;
    std::uint64_t mirror_y = 0;
    std::uint64_t non_finite = 0;
    std::vector<std::string> examples; // first few violations

    std::uint64_t violations() const noexcept
    {
        return containment + subsegment + idempotence + mirror_x + mirror_y + non_finite;
    }
};

InvariantTally check_invariants(ClipFn fn, const std::vector<Segment>& inputs, const ClipWindow& w);

std::string describe(const Segment& s);
std::string describe(const ClipResult& r);

} // namespace lineclip::verify
