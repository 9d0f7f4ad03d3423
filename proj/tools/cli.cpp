#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ged/approx.hpp"
#include "ged/exact.hpp"
#include "ged/grid.hpp"
#include "ged/synth.hpp"
#include "ged/trajectory_io.hpp"
#include "report.hpp"

namespace ged::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string p_path;
    std::string q_path;
    std::optional<std::uint64_t> seed;
    double gap_penalty = 1.0;
    double c = 2.0;
    bool json = false;
    bool tsv = false;
    bool timing = false;
    unsigned threads = 1;
    long long k = 0;
    std::optional<double> alpha;

    // bench
    std::vector<std::size_t> sizes{128, 256, 512};
    std::size_t trials = 5;
    SynthParams synth;
};

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed)
        return *opt.seed;
    const char* env = std::getenv("GED_SEED");
    if (!env || !*env)
        return 0;
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw UsageError("GED_SEED is not an unsigned 64-bit integer: '" + std::string(text) + "'");
    return value;
}

CostModel cost_model(const Options& opt) {
    CostModel model{opt.gap_penalty};
    try {
        model.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return model;
}

struct Inputs {
    PointSequence p;
    PointSequence q;
};

Inputs load_inputs(const Options& opt) {
    Inputs in;
    try {
        in.p = parse_points(std::filesystem::path(opt.p_path));
        in.q = parse_points(std::filesystem::path(opt.q_path));
    } catch (const TrajectoryParseError& e) {
        throw DataError(e.what());
    }
    if (in.p.dim() != in.q.dim())
        throw DataError("trajectories have different dimensions (" + std::to_string(in.p.dim()) + " vs " +
                        std::to_string(in.q.dim()) + ")");
    return in;
}

// Runs a library call, turning parameter rejections into usage errors with
// the library's message unchanged.
template <typename Fn>
auto checked(Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidMatching&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// The approximations assume equal lengths. Longer inputs are cut to the
// common length and the surplus tail points stay unmatched.
GedResult run_approx(const Inputs& in, const ApproxParams& params, bool alpha_variant, std::ostream& err) {
    const std::size_t common = std::min(in.p.size(), in.q.size());
    const bool cut = in.p.size() != in.q.size();
    const PointSequence p = cut ? in.p.prefix(common) : in.p;
    const PointSequence q = cut ? in.q.prefix(common) : in.q;
    GedResult result =
        checked([&] { return alpha_variant ? ged_alpha_approx(p, q, params) : ged_sqrt_approx(p, q, params); });
    if (cut) {
        const std::string note = "sequences have different lengths (" + std::to_string(in.p.size()) + " and " +
                                 std::to_string(in.q.size()) + "); the last " +
                                 std::to_string(std::max(in.p.size(), in.q.size()) - common) +
                                 " points of the longer one are left unmatched";
        result.warnings.insert(result.warnings.begin(), note);
        result.cost = matching_cost(in.p, in.q, result.matching, params.model);
        err << "warning: " << note << '\n';
    }
    return result;
}

void emit(std::ostream& out, const Options& opt, const MatchReport& report) {
    if (opt.tsv)
        write_tsv(out, report);
    else
        write_json(out, report);
}

void echo_warnings(std::ostream& err, const GedResult& result, std::size_t skip) {
    for (std::size_t w = skip; w < result.warnings.size(); ++w)
        err << "warning: " << result.warnings[w] << '\n';
}

ApproxParams approx_params(const Options& opt, const CostModel& model, std::uint64_t seed) {
    ApproxParams params;
    params.c = opt.c;
    params.alpha = opt.alpha;
    params.seed = seed;
    params.model = model;
    params.threads = opt.threads;
    return params;
}

int cmd_exact(const Options& opt, std::ostream& out) {
    const CostModel model = cost_model(opt);
    const Inputs in = load_inputs(opt);
    const auto start = Clock::now();
    const GedResult result = checked([&] { return exact_ged(in.p, in.q, model); });
    MatchReport report = make_report(in.p, in.q, result, model);
    if (opt.timing)
        report.wall_time_ms = elapsed_ms(start);
    emit(out, opt, report);
    return kExitOk;
}

int cmd_banded(const Options& opt, std::ostream& out, std::ostream& err) {
    const CostModel model = cost_model(opt);
    const Inputs in = load_inputs(opt);
    const auto start = Clock::now();
    const auto result = checked([&] { return banded_ged(in.p, in.q, opt.k, model); });
    MatchReport report;
    if (result) {
        report = make_report(in.p, in.q, *result, model);
        report.band_exceeded = false;
        report.k = opt.k;
    } else {
        err << "band exceeded: distance is larger than k = " << opt.k << " gap penalties\n";
        report = band_exceeded_report(in.p, in.q, opt.k, model);
    }
    if (opt.timing)
        report.wall_time_ms = elapsed_ms(start);
    emit(out, opt, report);
    return kExitOk;
}

int cmd_approx(const Options& opt, bool alpha_variant, std::ostream& out, std::ostream& err) {
    const CostModel model = cost_model(opt);
    const std::uint64_t seed = resolve_seed(opt);
    const Inputs in = load_inputs(opt);
    const auto start = Clock::now();
    const GedResult result = run_approx(in, approx_params(opt, model, seed), alpha_variant, err);
    const std::size_t already = in.p.size() != in.q.size() ? 1 : 0;
    echo_warnings(err, result, already);
    MatchReport report = make_report(in.p, in.q, result, model);
    if (opt.timing)
        report.wall_time_ms = elapsed_ms(start);
    emit(out, opt, report);
    return kExitOk;
}

std::optional<double> ratio(double approx, double exact) {
    if (exact > 0)
        return approx / exact;
    if (approx == 0)
        return 1.0;
    return std::nullopt;
}

ordered_json optional_number(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string optional_text(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("inf");
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream& err) {
    const CostModel model = cost_model(opt);
    const std::uint64_t seed = resolve_seed(opt);
    const Inputs in = load_inputs(opt);
    const std::size_t common = std::min(in.p.size(), in.q.size());
    Options local = opt;
    if (!local.alpha)
        local.alpha = std::pow(static_cast<double>(common), 0.25);

    struct Row {
        std::string algorithm;
        double cost;
        std::optional<SuccessInfo> success;
        double ms;
    };
    std::vector<Row> rows;
    std::vector<std::string> warnings;

    auto start = Clock::now();
    const GedResult exact = checked([&] { return exact_ged(in.p, in.q, model); });
    rows.push_back({"exact", exact.cost, std::nullopt, elapsed_ms(start)});
    for (const bool alpha_variant : {false, true}) {
        start = Clock::now();
        const GedResult r = run_approx(in, approx_params(local, model, seed), alpha_variant, err);
        echo_warnings(err, r, in.p.size() != in.q.size() ? 1 : 0);
        for (const auto& w : r.warnings)
            if (std::find(warnings.begin(), warnings.end(), w) == warnings.end())
                warnings.push_back(w);
        rows.push_back({r.algorithm, matching_cost(in.p, in.q, r.matching, model), r.success, elapsed_ms(start)});
    }

    if (opt.tsv) {
        out << "algorithm\tcost\tratio\tguess";
        if (opt.timing)
            out << "\twall_time_ms";
        out << '\n';
        for (const auto& row : rows) {
            out << row.algorithm << '\t' << format_number(row.cost) << '\t'
                << optional_text(ratio(row.cost, exact.cost)) << '\t'
                << (row.success ? format_number(row.success->guess) : "");
            if (opt.timing)
                out << '\t' << format_number(row.ms);
            out << '\n';
        }
        return kExitOk;
    }

    ordered_json j;
    j["seed"] = seed;
    j["m"] = in.p.size();
    j["n"] = in.q.size();
    j["d"] = in.p.dim();
    j["gap_penalty"] = model.gap_penalty;
    j["c"] = opt.c;
    j["alpha"] = *local.alpha;
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["algorithm"] = row.algorithm;
        r["cost"] = row.cost;
        r["ratio"] = optional_number(ratio(row.cost, exact.cost));
        r["guess"] = row.success ? ordered_json(row.success->guess) : ordered_json(nullptr);
        if (opt.timing)
            r["wall_time_ms"] = row.ms;
        table.push_back(std::move(r));
    }
    j["rows"] = std::move(table);
    j["warnings"] = warnings;
    out << j.dump(2) << '\n';
    return kExitOk;
}

double median(std::vector<double> v) {
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

int cmd_bench(const Options& opt, std::ostream& out) {
    const CostModel model = cost_model(opt);
    const std::uint64_t seed = resolve_seed(opt);
    if (opt.sizes.empty())
        throw UsageError("--sizes must list at least one size");
    if (opt.trials == 0)
        throw UsageError("--trials must be positive");
    for (const auto n : opt.sizes)
        if (n == 0)
            throw UsageError("sizes must be positive");

    ordered_json rows = ordered_json::array();
    for (std::size_t s = 0; s < opt.sizes.size(); ++s) {
        const std::size_t n = opt.sizes[s];
        const double alpha = opt.alpha ? *opt.alpha : std::pow(static_cast<double>(n), 0.25);
        std::vector<double> r_sqrt, r_alpha, t_exact, t_sqrt, t_alpha;
        std::size_t unbounded = 0;
        for (std::size_t t = 0; t < opt.trials; ++t) {
            SynthParams sp = opt.synth;
            sp.n = n;
            const PlantedPair pair = planted_pair(sp, stream_seed(seed, 2 * s, t));
            ApproxParams params = approx_params(opt, model, stream_seed(seed, 2 * s + 1, t));
            params.alpha = alpha;

            auto start = Clock::now();
            const double exact = exact_ged_cost(pair.p, pair.q, model);
            t_exact.push_back(elapsed_ms(start));
            start = Clock::now();
            const GedResult a = checked([&] { return ged_sqrt_approx(pair.p, pair.q, params); });
            t_sqrt.push_back(elapsed_ms(start));
            start = Clock::now();
            const GedResult b = checked([&] { return ged_alpha_approx(pair.p, pair.q, params); });
            t_alpha.push_back(elapsed_ms(start));

            const auto ra = ratio(a.cost, exact);
            const auto rb = ratio(b.cost, exact);
            if (!ra || !rb)
                ++unbounded;
            if (ra)
                r_sqrt.push_back(*ra);
            if (rb)
                r_alpha.push_back(*rb);
        }
        ordered_json row;
        row["n"] = n;
        row["trials"] = opt.trials;
        row["alpha"] = alpha;
        row["median_ratio_sqrt"] = median(r_sqrt);
        row["median_ratio_alpha"] = median(r_alpha);
        row["zero_exact_cost_trials"] = unbounded;
        if (opt.timing) {
            row["median_ms_exact"] = median(t_exact);
            row["median_ms_sqrt"] = median(t_sqrt);
            row["median_ms_alpha"] = median(t_alpha);
        }
        rows.push_back(std::move(row));
    }

    if (opt.tsv) {
        out << "n\ttrials\talpha\tmedian_ratio_sqrt\tmedian_ratio_alpha";
        if (opt.timing)
            out << "\tmedian_ms_exact\tmedian_ms_sqrt\tmedian_ms_alpha";
        out << '\n';
        for (const auto& row : rows) {
            out << row["n"].get<std::size_t>() << '\t' << row["trials"].get<std::size_t>() << '\t'
                << format_number(row["alpha"].get<double>()) << '\t'
                << format_number(row["median_ratio_sqrt"].get<double>()) << '\t'
                << format_number(row["median_ratio_alpha"].get<double>());
            if (opt.timing)
                out << '\t' << format_number(row["median_ms_exact"].get<double>()) << '\t'
                    << format_number(row["median_ms_sqrt"].get<double>()) << '\t'
                    << format_number(row["median_ms_alpha"].get<double>());
            out << '\n';
        }
        return kExitOk;
    }

    ordered_json j;
    j["seed"] = seed;
    j["c"] = opt.c;
    j["gap_penalty"] = model.gap_penalty;
    j["generator"] = {{"dim", opt.synth.dim},
                      {"walk_step", opt.synth.walk_step},
                      {"noise", opt.synth.noise},
                      {"outliers", opt.synth.outliers},
                      {"outlier_distance", opt.synth.outlier_distance},
                      {"resample", opt.synth.resample}};
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return kExitOk;
}

void add_common(CLI::App* sub, Options& opt, bool files, bool randomized) {
    if (files) {
        sub->add_option("--p", opt.p_path, "First trajectory (CSV, one point per line)")->required();
        sub->add_option("--q", opt.q_path, "Second trajectory (CSV, one point per line)")->required();
    }
    sub->add_option("--gap-penalty", opt.gap_penalty, "Cost of one unmatched point")->capture_default_str();
    auto* json = sub->add_flag("--json", opt.json, "JSON report (default)");
    auto* tsv = sub->add_flag("--tsv", opt.tsv, "Tab-separated report");
    json->excludes(tsv);
    sub->add_flag("--timing", opt.timing, "Include wall-clock times in the report");
    if (randomized) {
        sub->add_option("--seed", opt.seed, "Random seed (falls back to GED_SEED, then 0)");
        sub->add_option("--c", opt.c, "Repetitions per guess are ceil(c lg n)")->capture_default_str();
        sub->add_option("--threads", opt.threads, "Worker threads for the repetitions of one guess")
            ->capture_default_str()
            ->check(CLI::Range(1u, 256u));
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric edit distance between point sequences", "ged"};
    app.require_subcommand(1);
    Options opt;

    auto* exact = app.add_subcommand("exact", "Exact distance by dynamic programming");
    add_common(exact, opt, true, false);

    auto* banded = app.add_subcommand("banded", "Exact distance if it is at most k gap penalties");
    add_common(banded, opt, true, false);
    banded->add_option("--k", opt.k, "Band half-width in gap penalties")->required();

    auto* sqrt_cmd = app.add_subcommand("approx-sqrt", "Randomized O(sqrt n) approximation");
    add_common(sqrt_cmd, opt, true, true);

    auto* alpha_cmd = app.add_subcommand("approx-alpha", "Randomized O(alpha) approximation");
    add_common(alpha_cmd, opt, true, true);
    alpha_cmd->add_option("--alpha", opt.alpha, "Approximation/time tradeoff parameter")->required();

    auto* compare = app.add_subcommand("compare", "Exact distance and both approximations with ratios");
    add_common(compare, opt, true, true);
    compare->add_option("--alpha", opt.alpha, "Parameter of the alpha approximation (default n^(1/4))");

    auto* bench = app.add_subcommand("bench", "Approximation ratios on synthetic trajectory pairs");
    add_common(bench, opt, false, true);
    bench->add_option("--sizes", opt.sizes, "Sequence lengths to sweep")->delimiter(',')->capture_default_str();
    bench->add_option("--trials", opt.trials, "Instances per size")->capture_default_str();
    bench->add_option("--alpha", opt.alpha, "Parameter of the alpha approximation (default n^(1/4))");
    bench->add_option("--dim", opt.synth.dim, "Dimension")->capture_default_str()->check(CLI::Range(1, 64));
    bench->add_option("--walk-step", opt.synth.walk_step, "Std-dev of a random-walk step")->capture_default_str();
    bench->add_option("--noise", opt.synth.noise, "Std-dev of the jitter added to the second sequence")
        ->capture_default_str();
    bench->add_option("--outliers", opt.synth.outliers, "Number of outlier points")->capture_default_str();
    bench->add_option("--outlier-distance", opt.synth.outlier_distance, "Displacement of an outlier")
        ->capture_default_str();
    bench->add_option("--resample", opt.synth.resample, "Points dropped and re-inserted as midpoints")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*exact)
            return cmd_exact(opt, out);
        if (*banded)
            return cmd_banded(opt, out, err);
        if (*sqrt_cmd)
            return cmd_approx(opt, false, out, err);
        if (*alpha_cmd)
            return cmd_approx(opt, true, out, err);
        if (*compare)
            return cmd_compare(opt, out, err);
        if (*bench)
            return cmd_bench(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace ged::cli
