#include "lineclip/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lineclip::bench {

std::uint64_t next_u64(SplitMix64& gen) noexcept
{
    std::uint64_t z = (gen.state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

constexpr double kTwoToMinus64 = 0x1p-64;
constexpr std::size_t kChunk = 1'000'000;

double map_unit(std::uint64_t u, double lo, double hi) noexcept
{
    return lo + (static_cast<double>(u) * kTwoToMinus64) * (hi - lo);
}

} // namespace

Segment gen_segment(SplitMix64& gen, const ClipWindow& space) noexcept
{
    const double x1 = map_unit(next_u64(gen), space.xmin(), space.xmax());
    const double y1 = map_unit(next_u64(gen), space.ymin(), space.ymax());
    const double x2 = map_unit(next_u64(gen), space.xmin(), space.xmax());
    const double y2 = map_unit(next_u64(gen), space.ymin(), space.ymax());
    return {{x1, y1}, {x2, y2}};
}

std::vector<Segment> gen_segments(std::uint64_t seed, const ClipWindow& space, std::size_t count)
{
    SplitMix64 gen{seed};
    std::vector<Segment> out(count);
    for (Segment& s : out)
        s = gen_segment(gen, space);
    return out;
}

void validate(const BenchConfig& config)
{
    if (config.lines_per_run < 1)
        throw std::invalid_argument("lines per run must be at least 1");
    if (config.repetitions < 1)
        throw std::invalid_argument("repetitions must be at least 1");
    if (config.algorithms.empty())
        throw std::invalid_argument("no algorithms selected");
    const ClipWindow& s = config.space;
    const ClipWindow& w = config.window;
    if (w.xmin() < s.xmin() || w.xmax() > s.xmax() || w.ymin() < s.ymin() || w.ymax() > s.ymax())
        throw std::invalid_argument("clip window must lie inside the generation space");
}

std::uint64_t fold_checksum(std::uint64_t acc, const ClipResult& r) noexcept
{
    // FNV-1a style multiply-xor over 64-bit words.
    constexpr std::uint64_t prime = 0x100000001B3ull;
    acc = (acc ^ static_cast<std::uint64_t>(r.is_accepted())) * prime;
    if (r.is_accepted()) {
        const Segment& s = r.segment();
        for (double v : {s.p1.x, s.p1.y, s.p2.x, s.p2.y})
            acc = (acc ^ std::bit_cast<std::uint64_t>(v)) * prime;
    }
    return acc;
}

double mean_seconds(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("mean of an empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double speedup_percent(double proposed_avg, double other_avg) noexcept
{
    return std::abs(proposed_avg - other_avg) / proposed_avg * 100.0;
}

void summarize(BenchReport& report)
{
    report.averages.clear();
    report.speedups_vs_proposed.clear();
    for (AlgorithmId id : report.config.algorithms) {
        std::vector<double> secs;
        for (const RunTiming& t : report.timings)
            if (t.algorithm == id)
                secs.push_back(t.seconds);
        if (!secs.empty())
            report.averages[id] = mean_seconds(secs);
    }
    const auto prop = report.averages.find(AlgorithmId::Proposed);
    if (prop == report.averages.end())
        return;
    for (const auto& [id, avg] : report.averages)
        if (id != AlgorithmId::Proposed)
            report.speedups_vs_proposed[id] = speedup_percent(prop->second, avg);
}

namespace {

struct RunOutcome {
    double seconds = 0.0;
    std::uint64_t accepted = 0;
    std::uint64_t checksum = 0xCBF29CE484222325ull;
};

// Segment source for one run. Streams up to one chunk long are generated
// once and replayed; longer streams are regenerated chunk by chunk outside
// the timed region.
class SegmentStream {
public:
    SegmentStream(const BenchConfig& config)
        : config_(config), cached_(config.lines_per_run <= kChunk)
    {
        if (cached_)
            buffer_ = gen_segments(config.seed, config.space, config.lines_per_run);
        else
            buffer_.resize(kChunk);
    }

    template <class Fn>
    void for_each_chunk(Fn&& fn)
    {
        if (cached_) {
            fn(std::span<const Segment>(buffer_));
            return;
        }
        SplitMix64 gen{config_.seed};
        std::uint64_t remaining = config_.lines_per_run;
        while (remaining > 0) {
            const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kChunk));
            for (std::size_t i = 0; i < n; ++i)
                buffer_[i] = gen_segment(gen, config_.space);
            fn(std::span<const Segment>(buffer_.data(), n));
            remaining -= n;
        }
    }

    std::size_t chunk_capacity() const noexcept { return buffer_.size(); }

private:
    const BenchConfig& config_;
    bool cached_;
    std::vector<Segment> buffer_;
};

RunOutcome timed_run(AlgorithmId id, const BenchConfig& config, SegmentStream& stream,
                     std::vector<ClipResult>& results)
{
    using clock = std::chrono::steady_clock;
    RunOutcome out;
    clock::duration elapsed{};
    stream.for_each_chunk([&](std::span<const Segment> chunk) {
        const auto start = clock::now();
        clip_batch(id, chunk, config.window, std::span<ClipResult>(results.data(), chunk.size()),
                   config.kernel);
        elapsed += clock::now() - start;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            out.accepted += results[i].is_accepted();
            out.checksum = fold_checksum(out.checksum, results[i]);
        }
    });
    // Clock granularity can report zero for tiny runs; one tick is the floor.
    out.seconds = std::chrono::duration<double>(std::max(elapsed, clock::duration{1})).count();
    return out;
}

} // namespace

BenchReport run_bench(const BenchConfig& config)
{
    validate(config);

    BenchReport report;
    report.config = config;
    report.timings.reserve(config.algorithms.size() * config.repetitions);

    SegmentStream stream(config);
    std::vector<ClipResult> results(stream.chunk_capacity());

    for (AlgorithmId id : config.algorithms) {
        timed_run(id, config, stream, results); // warm-up, discarded
        for (std::uint32_t run = 1; run <= config.repetitions; ++run) {
            const RunOutcome o = timed_run(id, config, stream, results);
            report.timings.push_back({id, run, o.seconds, o.accepted, o.checksum});
        }
    }
    summarize(report);
    return report;
}

} // namespace lineclip::bench
