// lineclip: clip single segments, run the clipping benchmark, or verify every
// algorithm against the exact oracle.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lineclip/batch.hpp"
#include "lineclip/bench.hpp"
#include "lineclip/clippers.hpp"
#include "lineclip/format.hpp"
#include "lineclip/verify.hpp"

namespace {

using namespace lineclip;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* const kWindowHelp =
    "xmin ymin xmax ymax; i.e. the top-left corner is (xmin, ymax) and the bottom-right is (xmax, ymin)";

ClipWindow make_window(const std::vector<double>& v, const char* what)
{
    for (double d : v)
        if (!std::isfinite(d))
            throw UsageError(std::string(what) + ": values must be finite");
    try {
        return {v.at(0), v.at(1), v.at(2), v.at(3)};
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

AlgorithmId algorithm_or_throw(const std::string& name)
{
    const auto id = parse_algorithm(name);
    if (!id)
        throw UsageError("unknown algorithm '" + name + "'");
    return *id;
}

struct ClipArgs {
    std::string algorithm;
    std::vector<double> seg;
    std::vector<double> window{-100.0, -75.0, 100.0, 75.0};
};

int run_clip(const ClipArgs& a)
{
    const AlgorithmId id = algorithm_or_throw(a.algorithm);
    for (double d : a.seg)
        if (!std::isfinite(d))
            throw UsageError("--seg: values must be finite");
    const ClipWindow w = make_window(a.window, "--window");
    const ClipResult r = clip(id, {{a.seg[0], a.seg[1]}, {a.seg[2], a.seg[3]}}, w);
    std::cout << verify::describe(r) << '\n';
    return kExitOk;
}

struct BenchArgs {
    std::uint64_t lines = 1'000'000;
    std::uint32_t reps = 10;
    std::uint64_t seed = 1;
    std::string format = "md";
    std::vector<double> space{-960.0, -720.0, 960.0, 720.0};
    std::vector<double> window{-100.0, -75.0, 100.0, 75.0};
    std::string out;
    std::vector<std::string> algorithms;
    std::string kernel = "scalar";
};

int run_bench_cmd(const BenchArgs& a)
{
    const auto format = bench::parse_format(a.format);
    if (!format)
        throw UsageError("--format must be csv, md or json");
    const auto kernel = parse_kernel(a.kernel);
    if (!kernel)
        throw UsageError("--kernel must be scalar or avx2");
    if (!kernel_available(*kernel))
        throw UsageError("kernel '" + a.kernel + "' is not supported on this CPU");

    bench::BenchConfig config;
    config.lines_per_run = a.lines;
    config.repetitions = a.reps;
    config.seed = a.seed;
    config.space = make_window(a.space, "--space");
    config.window = make_window(a.window, "--window");
    config.kernel = *kernel;
    if (!a.algorithms.empty()) {
        config.algorithms.clear();
        for (const std::string& name : a.algorithms)
            config.algorithms.push_back(algorithm_or_throw(name));
    }
    try {
        bench::validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const std::string text = bench::render_report(bench::run_bench(config), *format);
    if (a.out.empty() || a.out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f || !(f << text))
            throw UsageError("cannot write " + a.out);
    }
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t cases = 100'000;
    std::uint64_t seed = 1;
    std::vector<double> space{-960.0, -720.0, 960.0, 720.0};
    std::vector<double> window{-100.0, -75.0, 100.0, 75.0};
    double tolerance = 1e-9;
};

int run_verify_cmd(const VerifyArgs& a)
{
    if (!(a.tolerance >= 0.0) || !std::isfinite(a.tolerance))
        throw UsageError("--tolerance must be a finite non-negative number");
    verify::VerifyConfig config;
    config.cases = a.cases;
    config.seed = a.seed;
    config.space = make_window(a.space, "--space");
    config.window = make_window(a.window, "--window");
    config.tolerance = a.tolerance;

    const verify::VerifyReport report = verify::run_verify(config);
    for (std::size_t k = 0; k < config.clippers.size(); ++k) {
        const verify::Tally& t = report.tallies[k];
        std::cout << config.clippers[k].name << ": " << t.match << " match, " << t.grazing_exempt
                  << " grazing-exempt, " << t.mismatch << " MISMATCH\n";
    }
    std::cerr << "cases: " << report.random_cases << " random + " << report.adversarial_cases
              << " adversarial; random grazing: " << report.random_grazing << '\n';
    for (const verify::Failure& f : report.failures)
        std::cout << "FAIL " << f.clipper << " --seg " << verify::describe(f.segment) << " --window "
                  << format_double(config.window.xmin()) << ' ' << format_double(config.window.ymin()) << ' '
                  << format_double(config.window.xmax()) << ' ' << format_double(config.window.ymax())
                  << ": " << f.detail << '\n';
    return report.ok() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2D line clipping: seven algorithms, exact-oracle verification, benchmark"};
    app.require_subcommand(1);

    ClipArgs clip_args;
    auto* clip_cmd = app.add_subcommand("clip", "Clip one segment and print ACCEPT x1 y1 x2 y2 or REJECT");
    clip_cmd->add_option("--algorithm", clip_args.algorithm,
                         "proposed, cohen-sutherland (cs), liang-barsky (lb), cyrus-beck (cb), "
                         "nicholl-lee-nicholl (nln), skala, kwc")
        ->required();
    clip_cmd->add_option("--seg", clip_args.seg, "x1 y1 x2 y2")->expected(4)->required();
    clip_cmd->add_option("--window", clip_args.window, kWindowHelp)->expected(4);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time every algorithm on a seeded random segment stream");
    bench_cmd->add_option("--lines", bench_args.lines, "segments per run")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--reps", bench_args.reps, "recorded repetitions")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_args.seed, "generator seed");
    bench_cmd->add_option("--format", bench_args.format, "csv, md or json");
    bench_cmd->add_option("--space", bench_args.space, "generation rectangle: xmin ymin xmax ymax")->expected(4);
    bench_cmd->add_option("--window", bench_args.window, kWindowHelp)->expected(4);
    bench_cmd->add_option("--out", bench_args.out, "output path (default stdout)");
    bench_cmd->add_option("--algorithms", bench_args.algorithms, "comma-separated list (default all seven)")
        ->delimiter(',');
    bench_cmd->add_option("--kernel", bench_args.kernel, "batch kernel: scalar or avx2");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check every algorithm against the exact rational oracle");
    verify_cmd->add_option("--cases", verify_args.cases, "random cases (the adversarial suite always runs)");
    verify_cmd->add_option("--seed", verify_args.seed, "generator seed");
    verify_cmd->add_option("--space", verify_args.space, "generation rectangle: xmin ymin xmax ymax")->expected(4);
    verify_cmd->add_option("--window", verify_args.window, kWindowHelp)->expected(4);
    verify_cmd->add_option("--tolerance", verify_args.tolerance, "absolute endpoint tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (clip_cmd->parsed())
            return run_clip(clip_args);
        if (bench_cmd->parsed())
            return run_bench_cmd(bench_args);
        return run_verify_cmd(verify_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
