#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lineclip/batch.hpp"
#include "lineclip/clippers.hpp"

namespace lineclip::bench {

/// splitmix64 with the published constants. The state is a plain value so
/// streams are reproducible anywhere.
struct SplitMix64 {
    std::uint64_t state = 0;
};

/// Advances the state and returns the next output.
std::uint64_t next_u64(SplitMix64& gen) noexcept;

/// Four draws in order x1, y1, x2, y2, each mapped to
/// min + (u / 2^64) * (max - min) in double arithmetic.
Segment gen_segment(SplitMix64& gen, const ClipWindow& space) noexcept;

/// Fills `out` from a generator seeded with `seed`.
std::vector<Segment> gen_segments(std::uint64_t seed, const ClipWindow& space, std::size_t count);

struct BenchConfig {
    ClipWindow space{-960.0, -720.0, 960.0, 720.0};
    ClipWindow window{-100.0, -75.0, 100.0, 75.0};
    std::uint64_t lines_per_run = 1'000'000;
    std::uint32_t repetitions = 10;
    std::uint64_t seed = 1;
    std::vector<AlgorithmId> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
    Kernel kernel = Kernel::Scalar;

    friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const BenchConfig& config);

struct RunTiming {
    AlgorithmId algorithm{};
    std::uint32_t run_index = 0;
    double seconds = 0.0;
    std::uint64_t accepted_count = 0;
    std::uint64_t checksum = 0;

    friend bool operator==(const RunTiming&, const RunTiming&) = default;
};

struct BenchReport {
    BenchConfig config;
    std::vector<RunTiming> timings;
    std::map<AlgorithmId, double> averages;
    std::map<AlgorithmId, double> speedups_vs_proposed;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Folds one result into a running checksum: accept flag plus the bit
/// patterns of the four output coordinates.
std::uint64_t fold_checksum(std::uint64_t acc, const ClipResult& r) noexcept;

double mean_seconds(std::span<const double> values);

/// |other - proposed| / proposed * 100.
double speedup_percent(double proposed_avg, double other_avg) noexcept;

/// Fills averages and speedups from timings. Speedups are only present when
/// Proposed is among the timed algorithms.
void summarize(BenchReport& report);

BenchReport run_bench(const BenchConfig& config);

enum class ReportFormat {
    Csv,
    Markdown,
    Json,
};

std::optional<ReportFormat> parse_format(std::string_view name) noexcept;

std::string render_report(const BenchReport& report, ReportFormat format);

/// Inverse of render_report(..., Json). Throws on malformed input.
BenchReport parse_json_report(std::string_view text);

} // namespace lineclip::bench
