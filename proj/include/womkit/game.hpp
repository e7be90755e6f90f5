#pragma once

#include <vector>

#include "womkit/channel.hpp"
#include "womkit/probability.hpp"

namespace womkit::game {

/// One party's optimal punch density against an opponent punching at
/// density x. By the symmetry of the read-back channel this is the same
/// map for both parties: optimal_punch(x).
Probability best_response(Probability x);

/// Iterates of the punch-density arms race.
struct RaceTrajectory {
    std::vector<Probability> densities;
    bool converged = false;
    Probability equilibrium;
};

/// Iterate best_response from x0 until two successive iterates agree to
/// tol or max_iters is exhausted. Non-convergence is reported via the
/// converged flag, not an error.
RaceTrajectory race(Probability x0, int max_iters, double tol);

/// The stable point of the race and what each party gets there.
struct EquilibriumReport {
    Probability density;
    InfoQuantity per_party_rate;
    InfoQuantity total_rate;
    double stability_slope = 0.0;
};

/// Solve best_response(p) = p by bisection on [1/2, 1-1/e], where the sign
/// of the residual changes. The slope is a central difference at the root.
EquilibriumReport equilibrium(double tol = 1e-10);

} // namespace womkit::game
