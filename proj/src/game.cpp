#include "womkit/game.hpp"

#include <cmath>
#include <stdexcept>

namespace womkit::game {

Probability best_response(Probability x) {
    return channel::optimal_punch(x);
}

RaceTrajectory race(Probability x0, int max_iters, double tol) {
    if (max_iters < 1)
        throw std::domain_error("race needs at least one iteration");
    if (!(tol > 0.0))
        throw std::domain_error("race tolerance must be positive");
    RaceTrajectory out;
    out.densities.push_back(x0);
    Probability x = x0;
    for (int i = 0; i < max_iters; ++i) {
        const Probability next = best_response(x);
        if (std::abs(next.value() - x.value()) <= tol) {
            out.converged = true;
            break;
        }
        out.densities.push_back(next);
        x = next;
    }
    out.equilibrium = out.densities.back();
    return out;
}

EquilibriumReport equilibrium(double tol) {
    if (!(tol > 0.0))
        throw std::domain_error("equilibrium tolerance must be positive");
    // residual(1/2) = 1/10 > 0 and best_response stays below 1-1/e, so the
    // bracket always holds a sign change.
    double lo = 0.5;
    double hi = 1.0 - 1.0 / std::numbers::e;
    double p = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        p = 0.5 * (lo + hi);
        const double residual = best_response(Probability{p}).value() - p;
        if (std::abs(residual) <= tol)
            break;
        if (residual > 0.0)
            lo = p;
        else
            hi = p;
    }
    const Probability density{p};
    const InfoQuantity per_party = channel::mutual_info(density, density);
    const double h = 1e-6;
    const double slope =
        std::abs((best_response(Probability{p + h}).value() -
                  best_response(Probability{p - h}).value()) /
                 (2.0 * h));
    return {density, per_party, InfoQuantity{2.0 * per_party.nats()}, slope};
}

} // namespace womkit::game
