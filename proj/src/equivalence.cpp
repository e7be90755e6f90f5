#include "womkit/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace womkit::equivalence {

InfoQuantity effective_capacity(Probability p) {
    return dilog(Probability{p.complement()});
}

double marginal_info_density(Probability p) {
    if (p.value() == 0.0)
        throw std::domain_error(
            "marginal information density diverges at p = 0");
    if (p.value() == 1.0)
        return 1.0;
    return neg_log(p.value()) / p.complement();
}

CurveSample sigma_mu(Probability p, Probability q) {
    if (p.value() == 1.0)
        throw std::domain_error(
            "sigma_mu undefined at p = 1; use limiting_curve");
    const double q_cap = effective_capacity(p).nats();
    const Probability p_out = channel::compose_density(p, q);
    return {q.value(), effective_capacity(p_out).nats() / q_cap,
            channel::mutual_info(p, q).nats() / q_cap};
}

double mu_of_sigma(Probability p, double sigma) {
    if (p.value() == 1.0)
        throw std::domain_error(
            "mu_of_sigma undefined at p = 1; use limiting_curve");
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw std::domain_error("sigma out of range [0,1]");
    if (sigma == 0.0 || sigma == 1.0)
        return 0.0;
    // sigma(q) falls strictly from 1 at q=0 to 0 at q=1.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (sigma_mu(p, Probability{mid}).sigma > sigma)
            lo = mid;
        else
            hi = mid;
    }
    return sigma_mu(p, Probability{0.5 * (lo + hi)}).mu;
}

double limiting_curve(double sigma) {
    return self_info(Probability{sigma}).nats();
}

double kappa() {
    constexpr double ln2 = std::numbers::ln2;
    return 0.5 * (1.0 - ln2 * ln2 / pi_sq_over_6);
}

namespace {

double departure_at(Probability p, int i, int grid_points) {
    const double sigma = static_cast<double>(i) / (grid_points - 1);
    return std::abs(mu_of_sigma(p, sigma) - limiting_curve(sigma));
}

} // namespace

double departure(Probability p, int grid_points) {
    if (grid_points < 2)
        throw std::domain_error("departure needs at least 2 grid points");
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int i = 0; i < grid_points; ++i)
        worst = std::max(worst, departure_at(p, i, grid_points));
    return worst;
}

double departure_serial(Probability p, int grid_points) {
    if (grid_points < 2)
        throw std::domain_error("departure needs at least 2 grid points");
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i)
        worst = std::max(worst, departure_at(p, i, grid_points));
    return worst;
}

EffectiveState EffectiveState::make(std::uint64_t length, Probability p) {
    if (length < 1)
        throw std::domain_error("tape length must be at least 1");
    const InfoQuantity per_cell = effective_capacity(p);
    return {length, p, per_cell,
            InfoQuantity{static_cast<double>(length) * per_cell.nats()}};
}

std::vector<StageRecord> run_ledger(const EffectiveState& initial,
                                    std::span<const Probability> punches) {
    std::vector<StageRecord> records;
    records.reserve(punches.size());
    Probability p = initial.hole_density;
    double q_cap = effective_capacity(p).nats();
    for (const Probability q : punches) {
        const Probability p_next = channel::compose_density(p, q);
        const double q_cap_next = effective_capacity(p_next).nats();
        const InfoQuantity info = channel::mutual_info(p, q);
        const InfoQuantity consumed{q_cap - q_cap_next};
        const InfoQuantity waste{consumed.nats() - info.nats()};
        records.push_back({p, q, p_next, info, consumed, waste});
        p = p_next;
        q_cap = q_cap_next;
    }
    return records;
}

std::vector<Probability> incremental_plan(Probability p0, Probability target,
                                          int steps) {
    if (steps < 1)
        throw std::domain_error("incremental plan needs at least 1 step");
    if (target.value() < p0.value())
        throw std::domain_error("target density below starting density");
    std::vector<Probability> punches;
    punches.reserve(steps);
    const double dp = (target.value() - p0.value()) / steps;
    for (int i = 0; i < steps; ++i) {
        const double p = p0.value() + i * dp;
        const double p_next =
            i + 1 == steps ? target.value() : p0.value() + (i + 1) * dp;
        const double remaining = 1.0 - p;
        punches.emplace_back(
            remaining <= 0.0 ? 0.0
                             : std::min(1.0, (p_next - p) / remaining));
    }
    return punches;
}

} // namespace womkit::equivalence
