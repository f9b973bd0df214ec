// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 5        run the listed criteria
//
// Exit status is nonzero when any gating criterion fails. Criterion 7 is
// informative and always passes; it reports the measured ranking.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "lineclip/bench.hpp"
#include "lineclip/format.hpp"
#include "lineclip/verify.hpp"
#include "published_timings.hpp"
#include "run_cli.hpp"
#include "skala_witness.hpp"

namespace {

using namespace lineclip;
namespace td = lineclip::testdata;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome table_averages()
{
    double worst = 0.0;
    for (std::size_t a = 0; a < 7; ++a) {
        worst = std::max(worst, std::abs(bench::mean_seconds(td::kTable1[a]) - td::kTable1Avg[a]));
        worst = std::max(worst, std::abs(bench::mean_seconds(td::kTable2[a]) - td::kTable2Avg[a]));
    }
    return {worst <= 0.001, "14 averages, max |mean - published| = " + format_fixed(worst, 6) + " s (limit 0.001)"};
}

Outcome speedup_percentages()
{
    double worst = 0.0;
    for (std::size_t a = 0; a < 6; ++a) {
        worst = std::max(worst, std::abs(bench::speedup_percent(td::kTable1Avg[6], td::kTable1Avg[a]) - td::kSpeedup1[a]));
        worst = std::max(worst, std::abs(bench::speedup_percent(td::kTable2Avg[6], td::kTable2Avg[a]) - td::kSpeedup2[a]));
    }
    return {worst <= 0.01, "12 percentages, max deviation = " + format_fixed(worst, 4) + " points (limit 0.01)"};
}

Outcome oracle_equivalence()
{
    const testing::CliResult r = testing::run_cli("verify --cases 1000000 --seed 1 2>&1", false);
    std::smatch m;
    const std::regex summary(R"(cases: (\d+) random \+ (\d+) adversarial; random grazing: (\d+))");
    if (!std::regex_search(r.out, m, summary))
        return {false, "could not parse verify output (exit " + std::to_string(r.exit_code) + ")"};
    const double random = std::stod(m[1]);
    const double grazing = std::stod(m[3]);
    const double share = random > 0 ? grazing / random : 0.0;
    const bool pass = r.exit_code == 0 && share < 0.001;
    std::string detail = "exit " + std::to_string(r.exit_code) + ", " + m[1].str() + " random + " + m[2].str() +
                         " adversarial cases, grazing " + m[3].str() + " (" + format_fixed(share * 100, 4) + "%)";
    if (!pass)
        detail += "\n" + r.out;
    return {pass, detail};
}

Outcome invariant_suite()
{
    const ClipWindow w{-100, -75, 100, 75};
    std::vector<Segment> inputs = bench::gen_segments(1, {-960, -720, 960, 720}, 100000);
    const std::vector<Segment> suite = verify::adversarial_suite(w);
    inputs.insert(inputs.end(), suite.begin(), suite.end());

    bool pass = true;
    std::ostringstream detail;
    detail << inputs.size() << " inputs per algorithm;";
    for (AlgorithmId id : kAllAlgorithms) {
        const verify::InvariantTally t = verify::check_invariants(clip_function(id), inputs, w);
        detail << ' ' << algorithm_name(id) << '=' << t.violations();
        if (t.violations() != 0) {
            pass = false;
            for (const std::string& e : t.examples)
                detail << "\n    " << e;
        }
    }
    detail << " violations";
    return {pass, detail.str()};
}

Outcome skala_masks()
{
    const ClipWindow w{-100, -75, 100, 75};
    const testing::MaskWitnesses found = testing::find_mask_witnesses(w, {-960, -720, 960, 720}, 1000000, 1);

    int agree = 0;
    std::string missing;
    for (unsigned m = 0; m < 16; ++m) {
        if (!found.witness[m]) {
            missing += (missing.empty() ? "" : ", ") + std::string{char('0' + ((m >> 3) & 1)), char('0' + ((m >> 2) & 1)),
                                                                   char('0' + ((m >> 1) & 1)), char('0' + (m & 1))};
            continue;
        }
        const Segment s = *found.witness[m];
        const bool edges_ok = testing::table_edges(m) == testing::exact_crossed_edges(s, w);
        const bool clip_ok = verify::judge(s, w, clip_skala(s, w), oracle::clip_exact(s, w), 1e-9) !=
                             verify::Verdict::Mismatch;
        agree += edges_ok && clip_ok;
    }
    const int witnessed = found.witnessed();
    const bool alternating_empty = testing::table_edges(0b0101) == 0 && testing::table_edges(0b1010) == 0;

    std::ostringstream detail;
    detail << witnessed << "/16 masks witnessed, " << agree << "/" << witnessed
           << " witnessed masks agree with the oracle; unwitnessed: " << (missing.empty() ? "none" : missing);
    if (witnessed < 16)
        detail << "\n    the corner values of a*x + b*y + c satisfy f(BL) + f(TR) = f(BR) + f(TL), so the"
               << "\n    alternating masks 0101 and 1010 cannot arise from any line; the table maps them to"
               << "\n    no edges (" << (alternating_empty ? "confirmed" : "NOT confirmed")
               << "). All 16 masks cannot be witnessed as required.";
    return {witnessed == 16 && agree == witnessed, detail.str()};
}

// Masks every number in the timing table (run rows, averages, speedups), the
// only part of the report derived from measured seconds.
std::string mask_markdown(const std::string& md)
{
    std::istringstream in(md);
    std::string line, out;
    const std::regex number(R"(\d+\.\d+)");
    bool in_timing = false;
    while (std::getline(in, line)) {
        if (line.rfind("| Exec. |", 0) == 0)
            in_timing = true;
        else if (line.empty())
            in_timing = false;
        if (in_timing)
            line = std::regex_replace(line, number, "#");
        out += line + '\n';
    }
    return out;
}

Outcome bench_determinism()
{
    const std::string args = "bench --lines 1000000 --reps 2 --seed 1";
    const testing::CliResult a = testing::run_cli(args);
    const testing::CliResult b = testing::run_cli(args);
    if (a.exit_code != 0 || b.exit_code != 0)
        return {false, "bench exited with " + std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code)};
    const bool identical = mask_markdown(a.out) == mask_markdown(b.out);

    // Accepted counts from the per-run table.
    std::vector<std::string> counts;
    const std::regex row(R"(^\| \d+ \| \w+ \| (\d+) \| 0x[0-9a-f]{16} \|$)");
    std::istringstream in(a.out);
    std::string line;
    std::smatch m;
    while (std::getline(in, line))
        if (std::regex_match(line, m, row))
            counts.push_back(m[1]);
    const bool counts_ok = counts.size() == 14 && std::all_of(counts.begin(), counts.end(),
                                                              [&](const std::string& c) { return c == counts[0]; });
    return {identical && counts_ok,
            std::string("reports ") + (identical ? "identical" : "DIFFER") + " outside seconds cells; " +
                std::to_string(counts.size()) + " rows, accepted " +
                (counts_ok ? "= " + counts[0] + " for all" : "counts differ")};
}

Outcome performance_ranking()
{
    const bench::BenchReport r = bench::run_bench(bench::BenchConfig{});
    std::vector<std::pair<double, AlgorithmId>> ranked;
    for (const auto& [id, avg] : r.averages)
        ranked.emplace_back(avg, id);
    std::sort(ranked.begin(), ranked.end());
    std::ostringstream detail;
    detail << "informative; 1M lines x 10 runs, ranking:";
    for (const auto& [avg, id] : ranked)
        detail << ' ' << algorithm_name(id) << '=' << format_fixed(avg * 1000, 2) << "ms";
    detail << (ranked.front().second == AlgorithmId::Proposed ? "; Proposed is fastest"
                                                               : "; Proposed is not the fastest here");
    return {true, detail.str()};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"table averages reproduce", &table_averages},
    {"speedup percentages reproduce", &speedup_percentages},
    {"oracle equivalence at 1M cases", &oracle_equivalence},
    {"invariant suite", &invariant_suite},
    {"Skala corner-mask table", &skala_masks},
    {"benchmark determinism", &bench_determinism},
    {"performance ranking", &performance_ranking},
};

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 7) {
            std::cerr << "usage: acceptance [1-7 ...]\n";
            return 2;
        }
        which.push_back(n);
    }
    if (which.empty())
        for (int n = 1; n <= 7; ++n)
            which.push_back(n);

    bool all = true;
    for (int n : which) {
        const Criterion& c = kCriteria[n - 1];
        const Outcome o = c.run();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << c.name << "): " << o.detail << '\n'
                  << std::flush;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
