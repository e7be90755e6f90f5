#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "womkit/channel.hpp"
#include "womkit/equivalence.hpp"
#include "womkit/game.hpp"
#include "womkit/mcsim.hpp"
#include "womkit/rng.hpp"
#include "womkit/table.hpp"

namespace {

using namespace womkit;
using cli::Cell;
using cli::OutputTable;

struct Options {
    std::string units = "bits";
    std::string format = "csv";
    int precision = 9;

    bool bits() const { return units == "bits"; }
    double info(InfoQuantity x) const { return bits() ? x.bits() : x.nats(); }
    double info(double nats) const {
        return bits() ? nats / std::numbers::ln2 : nats;
    }
    std::string col(const std::string& base) const {
        return base + "_" + units;
    }
};

void add_output_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--units", opt.units, "information unit for output")
        ->check(CLI::IsMember({"bits", "nats"}))
        ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", opt.precision,
                    "significant digits for numeric cells")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

// |d qhat/dp| by central differences, clamped to [0,1] near the ends.
double response_slope(double x) {
    const double h = 1e-6;
    const double lo = std::max(0.0, x - h);
    const double hi = std::min(1.0, x + h);
    return std::abs((game::best_response(Probability{hi}).value() -
                     game::best_response(Probability{lo}).value()) /
                    (hi - lo));
}

OutputTable point_table(const std::string& kind, double a, double b,
                        const Options& opt) {
    if (kind == "compose") {
        OutputTable t({"p", "q", "p_out"});
        t.add_row({a, b,
                   channel::compose_density(Probability{a}, Probability{b})
                       .value()});
        return t;
    }
    if (kind == "mi") {
        OutputTable t({"p", "q", opt.col("mi")});
        t.add_row({a, b,
                   opt.info(channel::mutual_info(Probability{a},
                                                 Probability{b}))});
        return t;
    }
    if (kind == "capacity") {
        OutputTable t({"p", opt.col("capacity")});
        t.add_row({a, opt.info(channel::capacity(Probability{a}))});
        return t;
    }
    if (kind == "qhat") {
        OutputTable t({"p", "qhat"});
        t.add_row({a, channel::optimal_punch(Probability{a}).value()});
        return t;
    }
    if (kind == "popt") {
        OutputTable t({"p", "p_opt"});
        t.add_row(
            {a, channel::optimal_output_density(Probability{a}).value()});
        return t;
    }
    if (kind == "shrink") {
        OutputTable t({"p", "shrinkage"});
        t.add_row({a, channel::shrinkage(Probability{a})});
        return t;
    }
    if (kind == "effective") {
        OutputTable t({"p", opt.col("effective_capacity")});
        t.add_row(
            {a, opt.info(equivalence::effective_capacity(Probability{a}))});
        return t;
    }
    // ratio-limit
    OutputTable t({"q", "ratio"});
    t.add_row({a, channel::capacity_ratio_limit(Probability{a})});
    return t;
}

std::vector<double> uniform_grid(int samples) {
    std::vector<double> grid(samples);
    for (int i = 0; i < samples; ++i)
        grid[i] = static_cast<double>(i) / (samples - 1);
    return grid;
}

OutputTable curve_table(const std::string& kind, std::vector<double> ps,
                        int samples, const Options& opt) {
    const std::vector<double> grid = uniform_grid(samples);

    if (kind == "mi") {
        if (ps.empty())
            ps = {0.0, 0.25, 0.5, 0.75, 1.0};
        std::sort(ps.begin(), ps.end());
        OutputTable t({"p", "q", opt.col("mi")});
        for (double p : ps) {
            // include the marked maximum of each curve
            std::vector<double> qs = grid;
            qs.push_back(channel::optimal_punch(Probability{p}).value());
            std::sort(qs.begin(), qs.end());
            qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
            for (double q : qs)
                t.add_row({p, q,
                           opt.info(channel::mutual_info(Probability{p},
                                                         Probability{q}))});
        }
        return t;
    }
    if (kind == "mufam") {
        if (ps.empty())
            ps = {0.0, 0.5, 0.75, 1.0};
        std::sort(ps.begin(), ps.end());
        OutputTable t({"p", "q", "sigma", "mu"});
        for (double p : ps) {
            for (double q : grid) {
                if (p == 1.0) {
                    const double sigma = 1.0 - q;
                    t.add_row(
                        {p, q, sigma, equivalence::limiting_curve(sigma)});
                } else {
                    const auto s =
                        equivalence::sigma_mu(Probability{p}, Probability{q});
                    t.add_row({p, s.q, s.sigma, s.mu});
                }
            }
        }
        return t;
    }

    if (!ps.empty())
        throw std::domain_error("--p only applies to curve kinds mi and "
                                "mufam");
    if (kind == "capacity") {
        OutputTable t({"p", opt.col("capacity")});
        for (double p : grid)
            t.add_row({p, opt.info(channel::capacity(Probability{p}))});
        return t;
    }
    if (kind == "qhat") {
        OutputTable t({"p", "qhat"});
        for (double p : grid)
            t.add_row({p, channel::optimal_punch(Probability{p}).value()});
        return t;
    }
    if (kind == "shrink") {
        OutputTable t({"p", "shrinkage"});
        for (double p : grid)
            t.add_row({p, channel::shrinkage(Probability{p})});
        return t;
    }
    // effective
    OutputTable t({"p", opt.col("effective_capacity")});
    for (double p : grid)
        t.add_row(
            {p, opt.info(equivalence::effective_capacity(Probability{p}))});
    return t;
}

OutputTable wars_table(double p0, int max_iters, double tol,
                       const Options& opt) {
    const auto traj = game::race(Probability{p0}, max_iters, tol);
    const auto eq = game::equilibrium(tol);
    OutputTable t({"step", "density", opt.col("per_party_rate"),
                   opt.col("total_rate"), "response_slope", "converged"});
    const double flag = traj.converged ? 1.0 : 0.0;
    for (std::size_t i = 0; i < traj.densities.size(); ++i) {
        const Probability x = traj.densities[i];
        const double rate = channel::mutual_info(x, x).nats();
        t.add_row({static_cast<double>(i), x.value(), opt.info(rate),
                   opt.info(2.0 * rate), response_slope(x.value()), flag});
    }
    t.add_row({std::string("equilibrium"), eq.density.value(),
               opt.info(eq.per_party_rate), opt.info(eq.total_rate),
               eq.stability_slope, 1.0});
    return t;
}

OutputTable simulate_table(std::uint64_t n, double p0,
                           const std::vector<double>& qs, std::uint64_t seed,
                           const Options& opt) {
    OutputTable t({"stage", "q", "p_out", "p_out_emp", opt.col("mi"),
                   opt.col("mi_emp"), "p_out_dev_sigma"});
    auto tape = mcsim::sample_tape(n, Probability{p0}, seed);
    double p = p0;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const Probability q{qs[k]};
        auto [next, obs] =
            mcsim::blind_punch(tape, q, rng::child_seed(seed, k));
        tape = std::move(next);
        const double p_out =
            channel::compose_density(Probability{p}, q).value();
        const double info = channel::mutual_info(Probability{p}, q).nats();
        const double se =
            std::sqrt(p_out * (1.0 - p_out) / static_cast<double>(n));
        const double dev =
            se > 0.0 ? (obs.empirical_p_out - p_out) / se : 0.0;
        t.add_row({static_cast<double>(k + 1), q.value(), p_out,
                   obs.empirical_p_out, opt.info(info),
                   opt.info(obs.empirical_mi), dev});
        p = p_out;
    }
    return t;
}

OutputTable ledger_table(std::uint64_t length, double p0,
                         const std::vector<Probability>& punches,
                         const Options& opt) {
    const auto initial =
        equivalence::EffectiveState::make(length, Probability{p0});
    const auto records = equivalence::run_ledger(initial, punches);
    const double cells = static_cast<double>(length);

    OutputTable t({"stage", "p_before", "q", "p_after", opt.col("info_cell"),
                   opt.col("used_cell"), opt.col("waste_cell"),
                   opt.col("info_tape"), opt.col("waste_tape"),
                   opt.col("eff_length_after")});
    double total_info = 0.0, total_used = 0.0, total_waste = 0.0;
    double p_final = p0;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& r = records[k];
        const double info = r.info_sent.nats();
        const double used = r.capacity_consumed.nats();
        const double waste = r.waste.nats();
        const double lambda_after =
            cells * equivalence::effective_capacity(r.p_after).nats();
        t.add_row({static_cast<double>(k + 1), r.p_before.value(),
                   r.q.value(), r.p_after.value(), opt.info(info),
                   opt.info(used), opt.info(waste), opt.info(cells * info),
                   opt.info(cells * waste), opt.info(lambda_after)});
        total_info += info;
        total_used += used;
        total_waste += waste;
        p_final = r.p_after.value();
    }
    const double lambda_final =
        cells * equivalence::effective_capacity(Probability{p_final}).nats();
    t.add_row({std::string("total"), p0, std::string(""), p_final,
               opt.info(total_info), opt.info(total_used),
               opt.info(total_waste), opt.info(cells * total_info),
               opt.info(cells * total_waste), opt.info(lambda_final)});
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"information-transmission toolkit for write-once "
                 "(monotonic) binary media"};
    app.require_subcommand(1);

    Options opt;
    std::optional<OutputTable> table;

    // single-point evaluations
    struct PointCommand {
        const char* name;
        const char* help;
        int arity;
    };
    const PointCommand points[] = {
        {"compose", "density after punching at q over prior density p", 2},
        {"mi", "per-cell information conveyed by punch density q over p", 2},
        {"capacity", "channel capacity of tape at hole density p", 1},
        {"qhat", "capacity-achieving punch density for hole density p", 1},
        {"popt", "output density produced by the optimal punch", 1},
        {"shrink", "one-usage capacity shrinkage factor at density p", 1},
        {"effective", "effective (slow-usage) capacity at density p", 1},
        {"ratio-limit",
         "saturated-tape limit of mutual information over capacity", 1},
    };
    static double arg_a, arg_b;
    for (const auto& pc : points) {
        auto* cmd = app.add_subcommand(pc.name, pc.help);
        const bool q_only = pc.arity == 1 && pc.name[0] == 'r';
        cmd->add_option(q_only ? "q" : "p", arg_a, "density in [0,1]")
            ->required()
            ->check(CLI::Range(0.0, 1.0));
        if (pc.arity == 2)
            cmd->add_option("q", arg_b, "punch density in [0,1]")
                ->required()
                ->check(CLI::Range(0.0, 1.0));
        add_output_options(cmd, opt);
        std::string kind = pc.name;
        cmd->callback(
            [&, kind] { table = point_table(kind, arg_a, arg_b, opt); });
    }

    // curve tables
    auto* curve = app.add_subcommand("curve", "emit a curve as a table");
    static std::string curve_kind;
    static std::vector<double> curve_ps;
    static int curve_samples = 201;
    curve->add_option("kind", curve_kind, "which curve family")
        ->required()
        ->check(CLI::IsMember(
            {"mi", "capacity", "qhat", "shrink", "effective", "mufam"}));
    curve->add_option("--p", curve_ps, "hole densities (mi/mufam only)")
        ->check(CLI::Range(0.0, 1.0));
    curve->add_option("--samples", curve_samples, "grid points per curve")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_output_options(curve, opt);
    curve->callback([&] {
        table = curve_table(curve_kind, curve_ps, curve_samples, opt);
    });

    // selfish-reuse arms race
    auto* wars = app.add_subcommand(
        "wars", "best-response race and its stable equilibrium");
    static double wars_p0 = 0.5, wars_tol = 1e-10;
    static int wars_iters = 100;
    wars->add_option("--p0", wars_p0, "starting punch density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    wars->add_option("--tol", wars_tol, "convergence tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    wars->add_option("--max-iters", wars_iters, "iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(wars, opt);
    wars->callback(
        [&] { table = wars_table(wars_p0, wars_iters, wars_tol, opt); });

    // Monte Carlo validation
    auto* sim = app.add_subcommand(
        "simulate", "sample a tape and punch it, comparing against the "
                    "analytic channel");
    static std::uint64_t sim_n = 1000000, sim_seed = 1;
    static double sim_p = 0.0;
    static std::vector<double> sim_qs;
    sim->add_option("--n", sim_n, "cells per tape")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--p", sim_p, "initial hole density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sim->add_option("--q", sim_qs, "per-stage punch densities")
        ->check(CLI::Range(0.0, 1.0));
    sim->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    add_output_options(sim, opt);
    sim->callback(
        [&] { table = simulate_table(sim_n, sim_p, sim_qs, sim_seed, opt); });

    // effective-length bookkeeping
    auto* led = app.add_subcommand(
        "ledger", "per-stage information, capacity drop and waste");
    static std::uint64_t led_length = 1000000;
    static double led_p = 0.0, led_target = -1.0;
    static int led_steps = 0;
    static std::vector<double> led_qs;
    led->add_option("--length", led_length, "tape length in cells")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    led->add_option("--p", led_p, "initial hole density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    led->add_option("--q", led_qs, "per-stage punch densities")
        ->check(CLI::Range(0.0, 1.0));
    led->add_option("--target", led_target,
                    "incremental plan: final hole density")
        ->check(CLI::Range(0.0, 1.0));
    led->add_option("--steps", led_steps,
                    "incremental plan: number of equal density increments")
        ->check(CLI::PositiveNumber);
    add_output_options(led, opt);
    led->callback([&] {
        const bool plan = led_target >= 0.0 || led_steps > 0;
        if (plan && !led_qs.empty())
            throw std::domain_error(
                "--q cannot be combined with --target/--steps");
        if (plan && (led_target < 0.0 || led_steps <= 0))
            throw std::domain_error(
                "incremental plan needs both --target and --steps");
        std::vector<Probability> punches;
        if (plan) {
            punches = equivalence::incremental_plan(
                Probability{led_p}, Probability{led_target}, led_steps);
        } else {
            punches.reserve(led_qs.size());
            for (double q : led_qs)
                punches.emplace_back(q);
        }
        table = ledger_table(led_length, led_p, punches, opt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "womkit: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "womkit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "womkit: " << e.what() << '\n';
        return 1;
    }

    if (table)
        std::cout << (opt.format == "json" ? table->to_json(opt.precision)
                                           : table->to_csv(opt.precision));
    return 0;
}
