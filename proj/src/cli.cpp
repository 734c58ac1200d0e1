// SPDX-License-Identifier: Apache-2.0
//
// fdnoma: antenna selection analysis for full-duplex cooperative NOMA relaying
// Copyright (C) 2026 The fdnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fdnoma/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "fdnoma/analytic.hpp"
#include "fdnoma/channel.hpp"
#include "fdnoma/montecarlo.hpp"

namespace fdnoma
{

namespace
{

std::string fmt(double x, const char* format = "%.6g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

ValidationCheck relative_check(std::string name, double value, double reference, double tol)
{
    const double rel = std::abs(value - reference) / std::abs(reference);
    return {std::move(name), rel <= tol,
            "value " + fmt(value, "%.12g") + " vs " + fmt(reference, "%.12g") + ", rel " + fmt(rel, "%.2e")};
}

ValidationCheck window_check(std::string name, double mc, double analytic, double se, double window)
{
    const double diff = std::abs(mc - analytic);
    return {std::move(name), diff <= window * se,
            "mc " + fmt(mc) + " vs analytic " + fmt(analytic) + ", |diff| " + fmt(diff, "%.3g") + " <= " +
                fmt(window) + " x se " + fmt(se, "%.3g")};
}

ValidationCheck cdf_sanity(std::string name, const std::function<double(double)>& cdf, double upper, bool reaches_one)
{
    constexpr int grid = 1000;
    std::string problem;
    if (std::abs(cdf(0.0)) > 1e-12)
        problem = "F(0) = " + fmt(cdf(0.0));
    double previous = cdf(0.0);
    for (int n = 1; n <= grid && problem.empty(); ++n)
    {
        const double x = upper * n / grid;
        const double f = cdf(x);
        if (f < 0.0 || f > 1.0)
            problem = "F out of [0,1] at x = " + fmt(x);
        else if (f + 1e-12 < previous)
            problem = "F decreases at x = " + fmt(x);
        previous = f;
    }
    if (problem.empty() && reaches_one && cdf(upper) != 1.0)
        problem = "F(upper) = " + fmt(cdf(upper), "%.17g");
    return {std::move(name), problem.empty(), problem.empty() ? "ok on 1000-point grid" : problem};
}

} // namespace

std::vector<ValidationCheck> run_validation(const SystemParams& params, const ValidateOptions& opts)
{
    const SystemParams p = validate(params);
    const MeanGains g = mean_gains(p);
    const double limit = p.a2 / p.a1;
    const QuadratureOptions tight{.abs_tol = 1e-14, .rel_tol = 1e-12, .max_subdivisions = 8000};
    std::vector<ValidationCheck> checks;

    {
        double worst = 0.0;
        for (int m = 1; m <= 16; ++m)
            worst = std::max(worst, std::abs(alternating_order_sum(m) - 1.0));
        checks.push_back({"alternating order-statistic sum = 1 (M = 1..16)", worst <= 1e-12,
                          "max |error| " + fmt(worst, "%.2e")});
    }

    // Far enough into the tail that 1 - F(x) < e^-50 for the near-user CDFs.
    const double near_upper = 50.0 * p.a1 * g.lam_su1;
    const auto with_params = [&p](double (*f)(double, const SystemParams&)) {
        return [f, &p](double x) { return f(x, p); };
    };
    checks.push_back(cdf_sanity("cdf gamma1 max_u1", with_params(cdf_gamma1_max_u1), near_upper, false));
    checks.push_back(cdf_sanity("cdf gamma2 max_u1", with_params(cdf_gamma2_max_u1), limit, true));
    checks.push_back(cdf_sanity("cdf gamma1 max_u2", with_params(cdf_gamma1_max_u2), near_upper, false));
    checks.push_back(cdf_sanity("cdf gamma2 max_u2", with_params(cdf_gamma2_max_u2), limit, true));

    const double inf = std::numeric_limits<double>::infinity();
    checks.push_back(relative_check("rate_u1 max_u1 closed form vs quadrature", rate_u1_max_u1(p),
                                    rate_from_cdf(with_params(cdf_gamma1_max_u1), inf, tight).value, 1e-8));
    checks.push_back(relative_check("rate_u1 max_u2 closed form vs quadrature", rate_u1_max_u2(p),
                                    rate_from_cdf(with_params(cdf_gamma1_max_u2), inf, tight).value, 1e-8));
    checks.push_back(relative_check("rate_u2 max_u1 integrand vs cdf quadrature", rate_u2_max_u1(p, tight).value,
                                    rate_from_cdf(with_params(cdf_gamma2_max_u1), limit, tight).value, 1e-8));
    checks.push_back(relative_check("rate_u2 max_u2 integrand vs cdf quadrature", rate_u2_max_u2(p, tight).value,
                                    rate_from_cdf(with_params(cdf_gamma2_max_u2), limit, tight).value, 1e-8));

    const double z = zeta(p);
    if (std::isfinite(z))
    {
        const double d1 = std::abs(outage_u1_max_u1(p) - cdf_gamma1_max_u1(p.a1 * z, p));
        const double d2 = std::abs(outage_u1_max_u2(p) - cdf_gamma1_max_u2(p.a1 * z, p));
        checks.push_back({"near-user outage equals gamma1 cdf at a1*zeta", std::max(d1, d2) <= 1e-12,
                          "max |diff| " + fmt(std::max(d1, d2), "%.2e")});
    }

    const Scheme schemes[] = {Scheme::max_u1_analytic, Scheme::max_u2_decoupled};
    const auto mc = estimate_metrics(p, schemes, {.trials = opts.trials, .seed = opts.seed, .workers = opts.workers});
    const double n = static_cast<double>(opts.trials);
    for (std::size_t s = 0; s < 2; ++s)
    {
        const MetricSet an = analytic_metric_set(schemes[s], p);
        const std::string tag = " " + std::string(to_string(schemes[s])) + " mc vs analytic";
        checks.push_back(
            window_check("rate_u1" + tag, mc[s].rate_u1.value, an.rate_u1.value, mc[s].rate_u1.std_error, opts.se_window));
        checks.push_back(
            window_check("rate_u2" + tag, mc[s].rate_u2.value, an.rate_u2.value, mc[s].rate_u2.std_error, opts.se_window));
        const auto binomial_se = [n](double q) { return std::sqrt(q * (1.0 - q) / n); };
        checks.push_back(window_check("outage_u1" + tag, mc[s].outage_u1.value, an.outage_u1.value,
                                      binomial_se(an.outage_u1.value), opts.se_window));
        checks.push_back(window_check("outage_u2" + tag, mc[s].outage_u2.value, an.outage_u2.value,
                                      binomial_se(an.outage_u2.value), opts.se_window));
    }

    if (opts.inject_failure)
        checks.push_back({"injected failure", false, "requested with --inject-failure"});
    return checks;
}

void print_validation_report(std::ostream& os, std::span<const ValidationCheck> checks)
{
    std::size_t passed = 0;
    for (const auto& c : checks)
    {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        passed += c.passed;
    }
    os << passed << "/" << checks.size() << " checks passed\n";
}

namespace
{

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void write_summary(std::ostream& os, std::span<const SweepRow> rows)
{
    os << "power_db  scheme             kind         rate_sum   outage_u1  outage_u2  status\n";
    for (const SweepRow& r : rows)
    {
        char line[200];
        std::snprintf(line, sizeof line, "%8.2f  %-18s %-12s %9.5f  %9.3e  %9.3e  %s\n", r.power_db,
                      std::string(to_string(r.scheme)).c_str(), std::string(to_string(r.metrics.rate_u1.kind)).c_str(),
                      r.metrics.rate_sum.value, r.metrics.outage_u1.value, r.metrics.outage_u2.value,
                      r.metrics.non_converged ? "NON_CONVERGED" : "ok");
        os << line;
    }
}

struct SweepArgs
{
    std::string config;
    std::string mode = "mc";
    std::string schemes;
    std::string metrics;
    std::string power;
    std::string power_target;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string output;
    unsigned threads = 0;
    std::string dump_path;
    std::uint64_t dump_trials = 1000;
};

struct ValidateArgs
{
    std::string config;
    std::uint64_t trials = 200'000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    bool inject_failure = false;
};

int run_sweep_command(const SweepArgs& args, const CLI::App& cmd, std::ostream& out, std::ostream& err)
{
    LoadedConfig cfg = load_config(args.config);
    SweepSpec& sweep = cfg.sweep;
    if (cmd.count("--schemes"))
    {
        sweep.schemes.clear();
        for (const auto& s : split_list(args.schemes))
            sweep.schemes.push_back(parse_scheme(s));
    }
    if (cmd.count("--metrics"))
    {
        sweep.metrics.clear();
        for (const auto& m : split_list(args.metrics))
            sweep.metrics.push_back(parse_metric(m));
    }
    if (cmd.count("--power"))
        sweep.power_db = parse_power_grid(args.power);
    if (cmd.count("--power-target"))
        sweep.target = parse_power_target(args.power_target);
    if (cmd.count("--trials"))
        sweep.trials = args.trials;
    if (cmd.count("--seed"))
        sweep.seed = args.seed;
    validate(sweep);
    const SweepMode mode = parse_sweep_mode(args.mode);

    if (mode != SweepMode::monte_carlo)
        for (Scheme s : sweep.schemes)
            if (!has_analytic_form(s))
                err << "fdnoma: note: no closed form for scheme " << to_string(s) << ", analytic rows skipped\n";

    if (!args.dump_path.empty())
    {
        std::ofstream dump(args.dump_path);
        if (!dump)
            throw ConfigError(ConfigErrc::IO_ERROR, "cannot write '" + args.dump_path + "'");
        const SystemParams p = validate(with_power_db(cfg.params, sweep.power_db.front(), sweep.target));
        const MeanGains gains = mean_gains(p);
        ChannelRealization real;
        write_realization_header(dump, p);
        for (std::uint64_t t = 0; t < args.dump_trials; ++t)
        {
            draw_into(p, gains, RngSeed{sweep.seed, t}, real);
            write_realization_row(dump, t, real);
        }
    }

    const auto rows = run_sweep(cfg.params, sweep, mode, args.threads);

    if (args.output.empty())
    {
        write_sweep_csv(out, rows, sweep.metrics);
        return exit_success;
    }
    std::ofstream csv(args.output);
    if (!csv)
        throw ConfigError(ConfigErrc::IO_ERROR, "cannot write '" + args.output + "'");
    write_sweep_csv(csv, rows, sweep.metrics);
    write_summary(out, rows);
    out << "wrote " << rows.size() << " rows to " << args.output << '\n';
    return exit_success;
}

int run_validate_command(const ValidateArgs& args, std::ostream& out)
{
    const LoadedConfig cfg = load_config(args.config);
    const auto checks = run_validation(cfg.params, {.trials = args.trials,
                                                    .seed = args.seed,
                                                    .workers = args.threads,
                                                    .inject_failure = args.inject_failure});
    print_validation_report(out, checks);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    return ok ? exit_success : exit_validation_failure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Antenna selection for full-duplex cooperative NOMA: Monte Carlo and closed-form evaluation"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a power sweep and write CSV");
    sweep->add_option("-c,--config", sweep_args.config, "Config file (key = value)")->required();
    sweep->add_option("--mode", sweep_args.mode, "mc, analytic or both")->check(CLI::IsMember({"mc", "analytic", "both"}));
    sweep->add_option("--schemes", sweep_args.schemes, "Comma separated scheme identifiers");
    sweep->add_option("--metrics", sweep_args.metrics, "Comma separated metric identifiers");
    sweep->add_option("--power", sweep_args.power, "Power grid in dB, start:stop:step or a,b,c");
    sweep->add_option("--power-target", sweep_args.power_target, "joint, rho_s or rho_r");
    sweep->add_option("--trials", sweep_args.trials, "Monte Carlo trials per power point")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_args.seed, "RNG seed");
    sweep->add_option("-o,--output", sweep_args.output, "CSV output path (default: standard output)");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");
    sweep->add_option("--dump-realizations", sweep_args.dump_path, "Write channel realizations of the first power point");
    sweep->add_option("--dump-trials", sweep_args.dump_trials, "Number of realizations to dump");

    ValidateArgs validate_args;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Run the invariant and cross-validation checks");
    validate_cmd->add_option("-c,--config", validate_args.config, "Config file (key = value)")->required();
    validate_cmd->add_option("--trials", validate_args.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    validate_cmd->add_option("--seed", validate_args.seed, "RNG seed");
    validate_cmd->add_option("--threads", validate_args.threads, "Worker threads (0 = all cores)");
    validate_cmd->add_flag("--inject-failure", validate_args.inject_failure, "Append a failing check");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e, out, err);
        return exit_usage;
    }

    try
    {
        if (*sweep)
            return run_sweep_command(sweep_args, *sweep, out, err);
        return run_validate_command(validate_args, out);
    }
    catch (const ConfigError& e)
    {
        err << "fdnoma: " << e.what() << '\n';
        return exit_config_invalid;
    }
}

} // namespace fdnoma
