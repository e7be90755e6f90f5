#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "womkit/game.hpp"

using namespace womkit;
using namespace womkit::game;
using doctest::Approx;

// frozen from a 30-digit independent evaluation of qhat(p) = p
namespace {
constexpr double pstar = 0.60875319154565723;
constexpr double pstar_rate_bits = 0.23969228596942013;
constexpr double pstar_slope = 0.07442465909795521;
} // namespace

TEST_CASE("best response is the optimal punch against the opponent") {
    CHECK(best_response(0.5).value() == Approx(0.6).epsilon(1e-12));
    CHECK(best_response(0.0).value() == 0.5);
    CHECK(std::abs(best_response(pstar).value() - pstar) <= 1e-9);
}

TEST_CASE("race from one half climbs monotonically to the fixed point") {
    const auto traj = race(Probability{0.5}, 100, 1e-10);
    CHECK(traj.converged);
    REQUIRE(traj.densities.size() >= 2);
    CHECK(traj.densities[0].value() == 0.5);
    CHECK(traj.densities[1].value() == Approx(0.6).epsilon(1e-12));
    for (std::size_t i = 1; i < traj.densities.size(); ++i) {
        CHECK(traj.densities[i].value() > traj.densities[i - 1].value());
        CHECK(traj.densities[i].value() ==
              Approx(best_response(traj.densities[i - 1]).value())
                  .epsilon(1e-15));
    }
    CHECK(traj.equilibrium.value() == Approx(pstar).epsilon(1e-8));
    CHECK(std::abs(best_response(traj.equilibrium).value() -
                   traj.equilibrium.value()) <= 1e-10);
}

TEST_CASE("race started at the fixed point stops immediately") {
    const auto traj = race(Probability{pstar}, 100, 1e-10);
    CHECK(traj.converged);
    CHECK(traj.densities.size() == 1);
    CHECK(traj.equilibrium.value() == pstar);
}

TEST_CASE("race from zero passes through one half") {
    const auto traj = race(Probability{0.0}, 100, 1e-10);
    CHECK(traj.converged);
    REQUIRE(traj.densities.size() >= 3);
    CHECK(traj.densities[1].value() == 0.5);
    CHECK(traj.equilibrium.value() == Approx(pstar).epsilon(1e-8));
}

TEST_CASE("race reports non-convergence instead of throwing") {
    const auto traj = race(Probability{0.0}, 2, 1e-15);
    CHECK_FALSE(traj.converged);
    CHECK(traj.densities.size() == 3);
    CHECK_THROWS_AS(race(Probability{0.5}, 0, 1e-10), std::domain_error);
    CHECK_THROWS_AS(race(Probability{0.5}, 10, 0.0), std::domain_error);
}

TEST_CASE("equilibrium of the arms race") {
    const auto eq = equilibrium(1e-10);
    CHECK(eq.density.value() == Approx(pstar).epsilon(1e-9));
    CHECK(eq.per_party_rate.bits() ==
          Approx(pstar_rate_bits).epsilon(1e-9));
    CHECK(eq.total_rate.nats() ==
          Approx(2.0 * eq.per_party_rate.nats()).epsilon(1e-15));
    CHECK(eq.stability_slope == Approx(pstar_slope).epsilon(1e-4));
    CHECK(eq.stability_slope < 1.0);

    // selfish concurrent use stays below the 1 bit/cell of space-sharing
    CHECK(eq.total_rate.nats() < std::numbers::ln2);
}

TEST_CASE("race endpoint and bisection root agree") {
    const auto traj = race(Probability{0.5}, 200, 1e-12);
    const auto eq = equilibrium(1e-12);
    CHECK(std::abs(traj.equilibrium.value() - eq.density.value()) <= 1e-8);
}

TEST_CASE("response map is a contraction near the fixed point") {
    for (double h : {1e-3, 1e-4, 1e-5}) {
        const double slope =
            std::abs(best_response(Probability{pstar + h}).value() -
                     best_response(Probability{pstar - h}).value()) /
            (2.0 * h);
        CHECK(slope < 1.0);
    }
}

TEST_CASE("no unilateral deviation helps at equilibrium") {
    const auto eq = equilibrium(1e-12);
    const double stay =
        channel::mutual_info(eq.density, eq.density).nats();
    for (int i = 0; i <= 1000; ++i)
        CHECK(channel::mutual_info(eq.density, i / 1000.0).nats() <=
              stay + 1e-12);
}
