// lt: sample latent priors, run latent-space operations (raw, slerp or
// distribution-matched), and verify the results statistically. Subcommands
// write LVF1 batches, CSV reports and JSON KS reports; see the README.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lt/io.hpp"
#include "lt/kernels.hpp"
#include "lt/runtime.hpp"
#include "lt/stats.hpp"
#include "lt/transport.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct PriorFlags {
    std::string family = "uniform";
    double a = 1.0;
    double sigma = 1.0;
    std::size_t dim = 0;

    lt::PriorSpec spec() const {
        if (family == "uniform") return lt::PriorSpec::uniform(a, dim);
        return lt::PriorSpec::gaussian(sigma, dim);
    }
};

void add_prior_flags(CLI::App* cmd, PriorFlags& flags, bool dim_required = true) {
    cmd->add_option("--prior", flags.family, "Prior family")
        ->check(CLI::IsMember({"uniform", "gaussian"}))
        ->capture_default_str();
    cmd->add_option("--a", flags.a, "Uniform half width (support [-a,a])")
        ->capture_default_str();
    cmd->add_option("--sigma", flags.sigma, "Gaussian standard deviation")
        ->capture_default_str();
    auto* dim = cmd->add_option("--dim", flags.dim, "Latent dimension");
    if (dim_required) dim->required();
}

// Interpolation mode; slerp in the CLI sweeps z2 -> z1 as t goes 0 -> 1,
// matching the linear convention (the slerp arc itself is evaluated at 1-t).
enum class Mode { Raw, Matched, Slerp };

Mode parse_mode(const std::string& mode) {
    if (mode == "raw") return Mode::Raw;
    if (mode == "matched") return Mode::Matched;
    return Mode::Slerp;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string trim_number(double v) {
    std::string s = lt::io::format_number(v);
    return s;
}

// Reads the given files, or samples `count` aligned prior batches when no
// files are given. Salts keep the generated batches independent.
std::vector<lt::LatentBatch> load_or_sample(const std::vector<std::string>& paths,
                                            std::size_t count, PriorFlags& prior,
                                            std::size_t n, std::uint64_t seed) {
    std::vector<lt::LatentBatch> batches;
    if (!paths.empty()) {
        if (paths.size() != count)
            throw CLI::ValidationError("--in", "expected " + std::to_string(count) +
                                                  " input file(s)");
        for (const auto& p : paths) batches.push_back(lt::io::read_batch(p));
        for (const auto& b : batches)
            if (b.rows() != batches.front().rows() || b.dim() != batches.front().dim())
                throw CLI::ValidationError("--in", "input batches must be aligned");
        if (prior.dim != 0 && prior.dim != batches.front().dim())
            throw CLI::ValidationError("--dim", "does not match the input file");
        prior.dim = batches.front().dim();
        return batches;
    }
    if (prior.dim == 0) throw CLI::ValidationError("--dim", "required when sampling");
    if (n == 0) throw CLI::ValidationError("--n", "must be >= 1");
    for (std::size_t k = 0; k < count; ++k)
        batches.push_back(lt::kernels::sample_batch(prior.spec(), n, seed, k + 1));
    return batches;
}

struct VerifyResult {
    lt::stats::KSReport pooled;
    std::vector<lt::stats::KSReport> components;
    bool pass = false;
};

VerifyResult verify_batch(const lt::LatentBatch& batch, const lt::PriorSpec& prior,
                          std::optional<double> threshold) {
    const lt::ScalarDist component(prior);
    VerifyResult result;
    const double pooled_thr =
        threshold.value_or(lt::stats::default_ks_threshold(batch.rows() * batch.dim()));
    result.pooled = lt::stats::ks_statistic(batch.data(), component, pooled_thr);

    const double comp_thr = threshold.value_or(lt::stats::default_ks_threshold(batch.rows()));
    result.components.reserve(batch.dim());
    for (std::size_t j = 0; j < batch.dim(); ++j) {
        const auto col = batch.column(j);
        result.components.push_back(lt::stats::ks_statistic(col, component, comp_thr));
    }
    result.pass = result.pooled.pass;
    for (const auto& r : result.components) result.pass = result.pass && r.pass;
    return result;
}

int run_sample(PriorFlags& prior, std::size_t n, std::uint64_t seed,
               const std::string& out) {
    if (n == 0) throw CLI::ValidationError("--n", "must be >= 1");
    lt::io::write_batch(out, lt::kernels::sample_batch(prior.spec(), n, seed));
    return kExitOk;
}

int run_interpolate(PriorFlags& prior, std::size_t n, std::uint64_t seed,
                    const std::vector<std::string>& in, std::vector<double> ts,
                    const std::vector<double>& weights, const std::string& mode_str,
                    const std::string& out) {
    const Mode mode = parse_mode(mode_str);

    if (!weights.empty()) {
        if (mode == Mode::Slerp)
            throw CLI::ValidationError("--mode", "slerp supports two points only");
        const auto op = lt::OperationSpec::n_point(weights);
        auto zs = load_or_sample(in, weights.size(), prior, n, seed);
        const lt::LatentBatch result =
            mode == Mode::Matched
                ? lt::matched_operation(op, prior.spec(), zs, seed)
                : lt::kernels::npoint_combine(zs, weights);
        lt::io::write_batch(out, result);
        return kExitOk;
    }

    if (ts.empty()) ts.push_back(0.5);
    auto zs = load_or_sample(in, 2, prior, n, seed);
    for (const double t : ts) {
        const auto op = lt::OperationSpec::two_point(t);
        lt::LatentBatch result(1, 1);
        switch (mode) {
            case Mode::Raw:
                result = lt::kernels::interpolate_pairs(zs[0], zs[1], t);
                break;
            case Mode::Matched:
                result = lt::matched_operation(op, prior.spec(), zs, seed);
                break;
            case Mode::Slerp:
                // Flip the arc parameter so t sweeps z2 -> z1 like linear.
                result = lt::kernels::slerp_pairs(zs[0], zs[1], 1.0 - t);
                break;
        }
        const std::string path =
            ts.size() == 1 ? out : with_suffix(out, "_t" + trim_number(t));
        lt::io::write_batch(path, result);
    }
    return kExitOk;
}

int run_vicinity(PriorFlags& prior, std::size_t n, std::uint64_t seed, double eps,
                 std::size_t k, const std::vector<std::string>& in,
                 const std::string& mode_str, const std::string& out) {
    const Mode mode = parse_mode(mode_str);
    if (mode == Mode::Slerp)
        throw CLI::ValidationError("--mode", "vicinity supports raw and matched only");
    if (k == 0) throw CLI::ValidationError("--k", "must be >= 1");

    auto base = load_or_sample(in, 1, prior, n, seed);
    const lt::PriorSpec spec = prior.spec();
    const auto op = lt::OperationSpec::vicinity(eps);

    // k draws per base row, written as k row-aligned blocks.
    lt::LatentBatch result(base[0].rows() * k, base[0].dim());
    for (std::size_t j = 0; j < k; ++j) {
        lt::LatentBatch draw = lt::kernels::vicinity_batch(base[0], spec, eps, seed, j);
        if (mode == Mode::Matched)
            draw = lt::apply_matched(draw, lt::matched_map(op, spec, seed));
        for (std::size_t i = 0; i < draw.rows(); ++i) {
            const auto src = draw.row(i);
            auto dst = result.row(j * draw.rows() + i);
            std::copy(src.begin(), src.end(), dst.begin());
        }
    }
    lt::io::write_batch(out, result);
    return kExitOk;
}

int run_analogy(PriorFlags& prior, std::size_t n, std::uint64_t seed,
                const std::vector<std::string>& in, const std::string& mode_str,
                const std::string& out) {
    const Mode mode = parse_mode(mode_str);
    if (mode == Mode::Slerp)
        throw CLI::ValidationError("--mode", "analogy supports raw and matched only");

    auto zs = load_or_sample(in, 3, prior, n, seed);
    const lt::LatentBatch result =
        mode == Mode::Matched
            ? lt::matched_operation(lt::OperationSpec::analogy(), prior.spec(), zs, seed)
            : lt::kernels::analogy_batch(zs[0], zs[1], zs[2]);
    lt::io::write_batch(out, result);
    return kExitOk;
}

int run_walk(PriorFlags& prior, std::size_t n, std::uint64_t seed, double eps,
             std::size_t steps, const std::string& mode_str, const std::string& out,
             std::string report) {
    const Mode mode = parse_mode(mode_str);
    if (mode == Mode::Slerp)
        throw CLI::ValidationError("--mode", "walk supports raw and matched only");
    if (steps == 0) throw CLI::ValidationError("--steps", "must be >= 1");
    if (n == 0) throw CLI::ValidationError("--n", "must be >= 1");
    if (prior.dim == 0) throw CLI::ValidationError("--dim", "required");

    const lt::PriorSpec spec = prior.spec();
    const lt::LatentBatch start = lt::kernels::sample_batch(spec, n, seed);
    const lt::LatentBatch traj =
        lt::kernels::walk_batch(start, eps, steps, mode == Mode::Matched, spec, seed);
    lt::io::write_batch(out, traj);

    // Per-step distribution report over all components of all walkers.
    if (report.empty()) report = with_suffix(out, "_steps") + ".csv";
    const lt::ScalarDist component(spec);
    std::vector<std::vector<double>> rows;
    for (std::size_t s = 0; s <= steps; ++s) {
        std::vector<double> values;
        values.reserve(n * spec.dim);
        for (std::size_t w = 0; w < n; ++w) {
            const auto row = traj.row(s * n + w);
            values.insert(values.end(), row.begin(), row.end());
        }
        const auto mv = lt::kernels::mean_var(values);
        const auto ks = lt::stats::ks_statistic(
            values, component, lt::stats::default_ks_threshold(values.size()));
        rows.push_back({static_cast<double>(s), static_cast<double>(values.size()),
                        mv.mean, mv.var, ks.statistic, ks.threshold,
                        ks.pass ? 1.0 : 0.0});
    }
    const std::string header[] = {"step", "n", "mean", "variance",
                                  "ks_statistic", "ks_threshold", "ks_pass"};
    lt::io::write_csv_report(report, header, rows);
    return kExitOk;
}

int run_verify(PriorFlags& prior, const std::string& in, std::optional<double> threshold,
               const std::string& out) {
    const lt::LatentBatch batch = lt::io::read_batch(in);
    if (prior.dim != 0 && prior.dim != batch.dim())
        throw CLI::ValidationError("--dim", "does not match the input file");
    prior.dim = batch.dim();

    const auto result = verify_batch(batch, prior.spec(), threshold);

    nlohmann::json j;
    j["statistic"] = result.pooled.statistic;
    j["n"] = result.pooled.n;
    j["threshold"] = result.pooled.threshold;
    j["pass"] = result.pass;
    j["dim"] = batch.dim();
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t c = 0; c < result.components.size(); ++c) {
        const auto& r = result.components[c];
        comps.push_back({{"component", c},
                         {"statistic", r.statistic},
                         {"n", r.n},
                         {"threshold", r.threshold},
                         {"pass", r.pass}});
    }
    j["components"] = std::move(comps);

    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        if (!f) throw lt::io::IoError(out, "cannot open for writing");
        f << text;
        if (!f) throw lt::io::IoError(out, "short write");
    }
    return result.pass ? kExitOk : kExitStatFail;
}

int run_norm_hist(PriorFlags& prior, std::size_t n, std::uint64_t seed, double t,
                  const std::string& mode_str, bool have_mode,
                  const std::vector<std::string>& in, std::size_t bins,
                  const std::string& out) {
    if (bins == 0) throw CLI::ValidationError("--bins", "must be >= 1");

    lt::LatentBatch batch(1, 1);
    bool is_prior_rows = !have_mode;
    Mode mode = Mode::Raw;
    if (!in.empty()) {
        auto loaded = load_or_sample(in, 1, prior, n, seed);
        batch = std::move(loaded[0]);
        if (have_mode) mode = parse_mode(mode_str);
    } else {
        if (prior.dim == 0) throw CLI::ValidationError("--dim", "required when sampling");
        if (n == 0) throw CLI::ValidationError("--n", "must be >= 1");
        if (!have_mode) {
            batch = lt::kernels::sample_batch(prior.spec(), n, seed);
        } else {
            mode = parse_mode(mode_str);
            std::vector<std::string> no_files;
            auto zs = load_or_sample(no_files, 2, prior, n, seed);
            switch (mode) {
                case Mode::Raw:
                    batch = lt::kernels::interpolate_pairs(zs[0], zs[1], t);
                    break;
                case Mode::Matched:
                    batch = lt::matched_operation(lt::OperationSpec::two_point(t),
                                                  prior.spec(), zs, seed);
                    break;
                case Mode::Slerp:
                    batch = lt::kernels::slerp_pairs(zs[0], zs[1], 1.0 - t);
                    break;
            }
        }
    }

    const lt::PriorSpec spec = prior.spec();
    const auto norms = lt::stats::squared_norm_samples(batch);
    const auto mv = lt::kernels::mean_var(norms);

    // Default range covers prior and midpoint shells out to six standard
    // deviations each.
    const auto prior_approx = lt::stats::clt_squared_norm(spec);
    const auto mid_op = lt::OperationSpec::two_point(0.5);
    const auto mid_approx = lt::stats::clt_squared_norm(spec, &mid_op);
    double lo = std::min(prior_approx.mean - 6.0 * std::sqrt(prior_approx.var),
                         mid_approx.mean - 6.0 * std::sqrt(mid_approx.var));
    double hi = std::max(prior_approx.mean + 6.0 * std::sqrt(prior_approx.var),
                         mid_approx.mean + 6.0 * std::sqrt(mid_approx.var));
    if (lo < 0.0) lo = 0.0;

    const auto hist = lt::stats::histogram(norms, bins, lo, hi);
    std::vector<std::vector<double>> rows;
    rows.reserve(hist.bins());
    for (std::size_t b = 0; b < hist.bins(); ++b)
        rows.push_back({hist.edge(b), hist.edge(b + 1),
                        static_cast<double>(hist.counts[b])});
    const std::string header[] = {"edge_lo", "edge_hi", "count"};
    lt::io::write_csv_report(out, header, rows);

    // CLT prediction applies to prior rows, exact midpoints and matched
    // outputs (which recover the prior); otherwise the columns are nan.
    double clt_mean = std::nan(""), clt_var = std::nan("");
    if (is_prior_rows || mode == Mode::Matched) {
        clt_mean = prior_approx.mean;
        clt_var = prior_approx.var;
    } else if (mode == Mode::Raw && std::fabs(t - 0.5) < 1e-12 && in.empty()) {
        clt_mean = mid_approx.mean;
        clt_var = mid_approx.var;
    }
    const std::string sum_header[] = {"sample_mean", "sample_std", "clt_mean", "clt_var"};
    std::vector<std::vector<double>> sum_rows = {
        {mv.mean, std::sqrt(mv.var), clt_mean, clt_var}};
    lt::io::write_csv_report(with_suffix(out, "_summary"), sum_header, sum_rows);
    return kExitOk;
}

int run_build_map(PriorFlags& prior, const std::string& op_name, double t,
                  const std::vector<double>& weights, double eps, std::size_t steps,
                  std::size_t n, std::size_t knots, std::uint64_t seed,
                  const std::string& out) {
    lt::OperationSpec op;
    if (op_name == "two-point") {
        op = lt::OperationSpec::two_point(t);
    } else if (op_name == "n-point") {
        if (weights.empty())
            throw CLI::ValidationError("--weights", "required for n-point maps");
        op = lt::OperationSpec::n_point(weights);
    } else if (op_name == "vicinity") {
        op = lt::OperationSpec::vicinity(eps);
    } else if (op_name == "analogy") {
        op = lt::OperationSpec::analogy();
    } else {
        op = lt::OperationSpec::random_walk(eps, steps);
    }
    if (prior.dim == 0) prior.dim = 1;  // maps are scalar; dimension is irrelevant

    const auto map = lt::build_empirical_map(op, prior.spec(), n, knots, seed);
    map.write_csv(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    lt::apply_thread_cap();

    CLI::App app{"latent-space operations with distribution-matched transport maps"};
    app.require_subcommand(1);

    PriorFlags prior;
    std::size_t n = 1000000;  // distribution experiments default to 1e6 draws
    std::uint64_t seed = 20240901;
    std::vector<std::string> in_paths;
    std::string out;
    std::string mode = "raw";
    std::vector<double> ts;
    std::vector<double> weights;
    double eps = 0.5;
    std::size_t steps = 10;
    std::size_t k_draws = 1;
    std::size_t bins = 100;
    std::size_t knots = 256;
    double t_single = 0.5;
    std::string report;
    std::string op_name = "two-point";
    std::optional<double> threshold;

    int rc = kExitOk;

    auto* sample = app.add_subcommand("sample", "Draw i.i.d. prior samples into an LVF1 file");
    add_prior_flags(sample, prior);
    sample->add_option("--n", n, "Number of rows")->capture_default_str();
    sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sample->add_option("--out", out, "Output LVF1 path")->required();
    sample->callback([&] { rc = run_sample(prior, n, seed, out); });

    auto* interp = app.add_subcommand(
        "interpolate", "Two-point or n-point interpolation (raw, matched or slerp)");
    add_prior_flags(interp, prior, false);
    interp->add_option("--n", n, "Pairs to sample when no --in files are given")
        ->capture_default_str();
    interp->add_option("--seed", seed, "RNG seed")->capture_default_str();
    interp->add_option("--in", in_paths, "Input LVF1 files (2, or one per weight)");
    interp->add_option("--t", ts, "Interpolation parameter(s); t=1 returns the first batch")
        ->expected(-1);
    interp->add_option("--weights", weights, "n-point weights, must sum to 1")
        ->delimiter(',');
    interp->add_option("--mode", mode, "raw | matched | slerp (slerp sweeps z2->z1 like linear)")
        ->check(CLI::IsMember({"raw", "matched", "slerp"}))
        ->capture_default_str();
    interp->add_option("--out", out, "Output LVF1 path (multiple t values add a _t<t> suffix)")
        ->required();
    interp->callback(
        [&] { rc = run_interpolate(prior, n, seed, in_paths, ts, weights, mode, out); });

    auto* vicinity = app.add_subcommand("vicinity", "Perturb samples inside an eps-vicinity");
    add_prior_flags(vicinity, prior, false);
    vicinity->add_option("--n", n, "Base rows to sample when no --in file is given")
        ->capture_default_str();
    vicinity->add_option("--seed", seed, "RNG seed")->capture_default_str();
    vicinity->add_option("--in", in_paths, "Base batch (LVF1)");
    vicinity->add_option("--eps", eps, "Perturbation scale")->capture_default_str();
    vicinity->add_option("--k", k_draws, "Draws per base row")->capture_default_str();
    vicinity->add_option("--mode", mode, "raw | matched")
        ->check(CLI::IsMember({"raw", "matched"}))
        ->capture_default_str();
    vicinity->add_option("--out", out, "Output LVF1 path")->required();
    vicinity->callback(
        [&] { rc = run_vicinity(prior, n, seed, eps, k_draws, in_paths, mode, out); });

    auto* analogy = app.add_subcommand("analogy", "z3 + (z2 - z1) over aligned batches");
    add_prior_flags(analogy, prior, false);
    analogy->add_option("--n", n, "Triples to sample when no --in files are given")
        ->capture_default_str();
    analogy->add_option("--seed", seed, "RNG seed")->capture_default_str();
    analogy->add_option("--in", in_paths, "Input LVF1 files (z1 z2 z3)");
    analogy->add_option("--mode", mode, "raw | matched")
        ->check(CLI::IsMember({"raw", "matched"}))
        ->capture_default_str();
    analogy->add_option("--out", out, "Output LVF1 path")->required();
    analogy->callback([&] { rc = run_analogy(prior, n, seed, in_paths, mode, out); });

    auto* walk = app.add_subcommand("walk", "Random walk by repeated vicinity sampling");
    add_prior_flags(walk, prior);
    walk->add_option("--n", n, "Number of walkers")->capture_default_str();
    walk->add_option("--seed", seed, "RNG seed")->capture_default_str();
    walk->add_option("--eps", eps, "Step size")->capture_default_str();
    walk->add_option("--steps", steps, "Number of steps")->capture_default_str();
    walk->add_option("--mode", mode, "raw | matched")
        ->check(CLI::IsMember({"raw", "matched"}))
        ->capture_default_str();
    walk->add_option("--out", out, "Trajectory LVF1 path (step-major blocks)")->required();
    walk->add_option("--report", report, "Per-step CSV path (default <out>_steps.csv)");
    walk->callback([&] { rc = run_walk(prior, n, seed, eps, steps, mode, out, report); });

    auto* verify = app.add_subcommand(
        "verify", "KS-test a batch against the prior; exit 1 on mismatch");
    add_prior_flags(verify, prior, false);
    verify->add_option("--in", in_paths, "Batch to verify (LVF1)")->required();
    verify->add_option("--threshold", threshold,
                       "KS pass threshold (default max(0.01, 1.63/sqrt(n)))");
    verify->add_option("--out", out, "JSON report path (stdout when omitted)");
    verify->callback([&] {
        if (in_paths.size() != 1)
            throw CLI::ValidationError("--in", "expected exactly one file");
        rc = run_verify(prior, in_paths[0], threshold, out);
    });

    auto* norm_hist = app.add_subcommand(
        "norm-hist", "Histogram of squared row norms with a CLT summary");
    add_prior_flags(norm_hist, prior, false);
    norm_hist->add_option("--n", n, "Rows to sample when no --in file is given")
        ->capture_default_str();
    norm_hist->add_option("--seed", seed, "RNG seed")->capture_default_str();
    norm_hist->add_option("--in", in_paths, "Batch to histogram (LVF1)");
    norm_hist->add_option("--t", t_single, "Interpolation parameter for --mode")
        ->capture_default_str();
    auto* nh_mode = norm_hist->add_option(
        "--mode", mode, "raw | matched | slerp midpoints (omit for prior rows)");
    nh_mode->check(CLI::IsMember({"raw", "matched", "slerp"}));
    norm_hist->add_option("--bins", bins, "Histogram bins")->capture_default_str();
    norm_hist->add_option("--out", out, "Histogram CSV path (summary goes to <out>_summary)")
        ->required();
    norm_hist->callback([&] {
        rc = run_norm_hist(prior, n, seed, t_single, mode, !nh_mode->empty(), in_paths,
                           bins, out);
    });

    auto* build_map = app.add_subcommand(
        "build-map", "Tabulate an empirical monotone transport map as CSV");
    add_prior_flags(build_map, prior, false);
    build_map->add_option("--op", op_name, "two-point | n-point | vicinity | analogy | walk")
        ->check(CLI::IsMember({"two-point", "n-point", "vicinity", "analogy", "walk"}))
        ->capture_default_str();
    build_map->add_option("--t", t_single, "Two-point parameter")->capture_default_str();
    build_map->add_option("--weights", weights, "n-point weights")->delimiter(',');
    build_map->add_option("--eps", eps, "Vicinity/walk step size")->capture_default_str();
    build_map->add_option("--steps", steps, "Walk steps")->capture_default_str();
    build_map->add_option("--n", n, "Monte-Carlo samples")->capture_default_str();
    build_map->add_option("--knots", knots, "Tabulation knots")->capture_default_str();
    build_map->add_option("--seed", seed, "RNG seed")->capture_default_str();
    build_map->add_option("--out", out, "Map CSV path")->required();
    build_map->callback([&] {
        rc = run_build_map(prior, op_name, t_single, weights, eps, steps, n, knots, seed,
                           out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const lt::io::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return rc;
}
