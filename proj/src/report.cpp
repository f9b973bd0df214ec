#include "lineclip/bench.hpp"
#include "lineclip/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lineclip::bench {

namespace {

using nlohmann::json;

// Columns follow the fixed algorithm order regardless of selection order.
std::vector<AlgorithmId> column_order(const BenchConfig& config)
{
    std::vector<AlgorithmId> cols;
    for (AlgorithmId id : kAllAlgorithms)
        if (std::find(config.algorithms.begin(), config.algorithms.end(), id) != config.algorithms.end())
            cols.push_back(id);
    return cols;
}

std::string window_text(const ClipWindow& w)
{
    return "(" + format_double(w.xmin()) + ", " + format_double(w.ymin()) + ") to (" +
           format_double(w.xmax()) + ", " + format_double(w.ymax()) + ")";
}

const RunTiming* find_timing(const BenchReport& r, AlgorithmId id, std::uint32_t run)
{
    for (const RunTiming& t : r.timings)
        if (t.algorithm == id && t.run_index == run)
            return &t;
    return nullptr;
}

std::string render_csv(const BenchReport& r)
{
    std::string out = "algorithm,run,seconds,accepted,checksum\n";
    for (const RunTiming& t : r.timings) {
        out += algorithm_name(t.algorithm);
        out += ',' + std::to_string(t.run_index) + ',' + format_double(t.seconds) + ',' +
               std::to_string(t.accepted_count) + ',' + format_hex64(t.checksum) + '\n';
    }
    return out;
}

std::string render_markdown(const BenchReport& r)
{
    const std::vector<AlgorithmId> cols = column_order(r.config);
    // Timings of a second or more read best with three decimals; modern
    // clip-only timings need six.
    bool large = !r.averages.empty();
    for (const auto& [id, avg] : r.averages)
        large = large && avg >= 1.0;
    const int decimals = large ? 3 : 6;

    std::ostringstream os;
    os << "# Line clipping benchmark\n\n"
       << "- lines per run: " << r.config.lines_per_run << "\n"
       << "- repetitions: " << r.config.repetitions << " (after one discarded warm-up run per algorithm)\n"
       << "- seed: " << r.config.seed << "\n"
       << "- space: " << window_text(r.config.space) << "\n"
       << "- window: " << window_text(r.config.window) << "\n"
       << "- kernel: " << kernel_name(r.config.kernel) << "\n"
       << "- timing covers clipping only: no rendering, no segment generation\n"
       << "- every repetition replays the identical seeded segment stream\n\n";

    os << "| Exec. |";
    for (AlgorithmId id : cols)
        os << ' ' << algorithm_name(id) << " (sec) |";
    os << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << "---:|";
    os << '\n';

    for (std::uint32_t run = 1; run <= r.config.repetitions; ++run) {
        os << "| " << run << " |";
        for (AlgorithmId id : cols) {
            const RunTiming* t = find_timing(r, id, run);
            os << ' ' << (t ? format_fixed(t->seconds, decimals) : "-") << " |";
        }
        os << '\n';
    }

    os << "| Avg: |";
    for (AlgorithmId id : cols) {
        const auto it = r.averages.find(id);
        os << ' ' << (it != r.averages.end() ? format_fixed(it->second, decimals) : "-") << " |";
    }
    os << "\n| Speedup vs Proposed (%) |";
    for (AlgorithmId id : cols) {
        const auto it = r.speedups_vs_proposed.find(id);
        os << ' ' << (it != r.speedups_vs_proposed.end() ? format_fixed(it->second, 2) : "-") << " |";
    }
    os << "\n\n";

    os << "| Run | Algorithm | Accepted | Checksum |\n|---:|---|---:|---|\n";
    for (std::uint32_t run = 1; run <= r.config.repetitions; ++run)
        for (AlgorithmId id : cols)
            if (const RunTiming* t = find_timing(r, id, run))
                os << "| " << run << " | " << algorithm_name(id) << " | " << t->accepted_count << " | "
                   << format_hex64(t->checksum) << " |\n";
    return os.str();
}

json window_json(const ClipWindow& w) { return json::array({w.xmin(), w.ymin(), w.xmax(), w.ymax()}); }

ClipWindow window_from(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("window must be an array of four numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

AlgorithmId algorithm_from(const std::string& name)
{
    const auto id = parse_algorithm(name);
    if (!id)
        throw std::invalid_argument("unknown algorithm '" + name + "'");
    return *id;
}

std::string render_json(const BenchReport& r)
{
    json config = {
        {"space", window_json(r.config.space)},
        {"window", window_json(r.config.window)},
        {"lines_per_run", r.config.lines_per_run},
        {"repetitions", r.config.repetitions},
        {"seed", r.config.seed},
        {"kernel", std::string(kernel_name(r.config.kernel))},
    };
    json algos = json::array();
    for (AlgorithmId id : r.config.algorithms)
        algos.push_back(std::string(algorithm_name(id)));
    config["algorithms"] = std::move(algos);

    json timings = json::array();
    for (const RunTiming& t : r.timings)
        timings.push_back({{"algorithm", std::string(algorithm_name(t.algorithm))},
                           {"run", t.run_index},
                           {"seconds", t.seconds},
                           {"accepted", t.accepted_count},
                           {"checksum", format_hex64(t.checksum)}});

    json averages = json::object();
    for (const auto& [id, v] : r.averages)
        averages[std::string(algorithm_name(id))] = v;
    json speedups = json::object();
    for (const auto& [id, v] : r.speedups_vs_proposed)
        speedups[std::string(algorithm_name(id))] = v;

    const json doc = {
        {"config", std::move(config)},
        {"timings", std::move(timings)},
        {"averages", std::move(averages)},
        {"speedups_vs_proposed", std::move(speedups)},
    };
    return doc.dump(2) + '\n';
}

} // namespace

std::optional<ReportFormat> parse_format(std::string_view name) noexcept
{
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "md" || name == "markdown")
        return ReportFormat::Markdown;
    if (name == "json")
        return ReportFormat::Json;
    return std::nullopt;
}

std::string render_report(const BenchReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
    case ReportFormat::Json: return render_json(report);
    }
    return {};
}

BenchReport parse_json_report(std::string_view text)
{
    try {
        const json doc = json::parse(text);
        const json& c = doc.at("config");

        BenchReport r;
        r.config.space = window_from(c.at("space"));
        r.config.window = window_from(c.at("window"));
        r.config.lines_per_run = c.at("lines_per_run").get<std::uint64_t>();
        r.config.repetitions = c.at("repetitions").get<std::uint32_t>();
        r.config.seed = c.at("seed").get<std::uint64_t>();
        const auto kernel = parse_kernel(c.at("kernel").get<std::string>());
        if (!kernel)
            throw std::invalid_argument("unknown kernel");
        r.config.kernel = *kernel;
        r.config.algorithms.clear();
        for (const json& a : c.at("algorithms"))
            r.config.algorithms.push_back(algorithm_from(a.get<std::string>()));

        for (const json& t : doc.at("timings")) {
            const auto sum = parse_hex64(t.at("checksum").get<std::string>());
            if (!sum)
                throw std::invalid_argument("malformed checksum");
            r.timings.push_back({algorithm_from(t.at("algorithm").get<std::string>()),
                                 t.at("run").get<std::uint32_t>(), t.at("seconds").get<double>(),
                                 t.at("accepted").get<std::uint64_t>(), *sum});
        }
        for (const auto& [name, v] : doc.at("averages").items())
            r.averages[algorithm_from(name)] = v.get<double>();
        for (const auto& [name, v] : doc.at("speedups_vs_proposed").items())
            r.speedups_vs_proposed[algorithm_from(name)] = v.get<double>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

} // namespace lineclip::bench
