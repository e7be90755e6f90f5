#pragma once

#include <cmath>
#include <numbers>

#include "womkit/probability.hpp"

namespace womkit {

inline constexpr double pi_sq_over_6 =
    std::numbers::pi * std::numbers::pi / 6.0;

/// -ln x for x in (0,1]. Uses log1p above 1/2, where x-1 is exact, so the
/// result keeps full relative accuracy as x approaches 1.
inline double neg_log(double x) {
    return x > 0.5 ? -std::log1p(x - 1.0) : -std::log(x);
}

/// Self-information x * (-ln x), with the 0*ln 0 = 0 convention at both
/// endpoints. Peaks at 1/e with value 1/e.
InfoQuantity self_info(Probability x);

/// Binary entropy H(p) = p(-ln p) + (1-p)(-ln(1-p)) in nats.
InfoQuantity entropy(Probability p);

/// Dilogarithm Li2(x) = sum_{k>=1} x^k / k^2 on [0,1], accurate to better
/// than 1e-12 absolute. Li2(0) = 0, Li2(1) = pi^2/6.
InfoQuantity dilog(Probability x);

} // namespace womkit
