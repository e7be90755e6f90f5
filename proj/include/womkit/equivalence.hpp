#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "womkit/channel.hpp"
#include "womkit/probability.hpp"

namespace womkit::equivalence {

/// Effective capacity Q(p) = Li2(1-p) in nats per cell: the total
/// information extractable from a cell by infinitely many infinitesimal
/// usage stages. Q(0) = pi^2/6, Q(1) = 0, strictly decreasing.
InfoQuantity effective_capacity(Probability p);

/// Information yield per unit hole-density increment, (-ln p)/(1-p).
/// Diverges as p -> 0 (rejected); the p = 1 value is the limit 1.
double marginal_info_density(Probability p);

/// One point of the shrinkage/rate curve family: running parameter q,
/// per-stage shrinkage sigma = Q(p')/Q(p), and information sent per unit of
/// effective length mu = mutual_info(p,q)/Q(p). Both ratios dimensionless.
struct CurveSample {
    double q = 0.0;
    double sigma = 1.0;
    double mu = 0.0;
};

/// Evaluate (sigma, mu) at (p, q). Rejects p = 1, where Q vanishes; the
/// saturated limit is limiting_curve.
CurveSample sigma_mu(Probability p, Probability q);

/// mu as a function of sigma for fixed p, inverting the strictly monotone
/// sigma(q) by bisection to 1e-12 in q. Endpoints map to 0.
double mu_of_sigma(Probability p, double sigma);

/// The saturated-tape limit of mu_of_sigma: the self-information curve
/// sigma * (-ln sigma).
double limiting_curve(double sigma);

/// Location of the maximum of mu_of_sigma(0, .), in closed form:
/// (1 - (6/pi^2) ln^2 2) / 2.
double kappa();

/// Worst-case gap between the mu curve at density p and the limiting
/// self-information curve, scanned on a uniform sigma grid. OpenMP-parallel
/// across grid points; bitwise identical to departure_serial.
double departure(Probability p, int grid_points = 1001);

/// Serial reference for departure, kept for tests and benchmarks.
double departure_serial(Probability p, int grid_points = 1001);

/// A tape tracked by its information mileage: cell count, hole density,
/// per-cell effective capacity and whole-tape effective length (nats).
struct EffectiveState {
    std::uint64_t length = 1;
    Probability hole_density;
    InfoQuantity capacity_per_cell;
    InfoQuantity effective_length;

    static EffectiveState make(std::uint64_t length, Probability p);
};

/// Bookkeeping for one usage stage, all quantities per cell. The waste is
/// the effective capacity consumed beyond the information actually sent;
/// it vanishes to first order for small punch densities.
struct StageRecord {
    Probability p_before;
    Probability q;
    Probability p_after;
    InfoQuantity info_sent;
    InfoQuantity capacity_consumed;
    InfoQuantity waste;
};

/// Thread a tape through successive punch stages, recording per-stage
/// information, effective-capacity drop and waste.
std::vector<StageRecord> run_ledger(const EffectiveState& initial,
                                    std::span<const Probability> punches);

/// Punch plan raising the hole density from p0 to target in `steps` equal
/// density increments (per-stage punch density dp/(1-p)). As steps grows
/// the summed stage information approaches Q(p0) - Q(target).
std::vector<Probability> incremental_plan(Probability p0, Probability target,
                                          int steps);

} // namespace womkit::equivalence
