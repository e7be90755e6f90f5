#pragma once

#include <cstdint>

#include "womkit/probability.hpp"
#include "womkit/specialfn.hpp"

namespace womkit::channel {

/// Density left on the tape after punching at density q over prior density
/// p: 1 - (1-p)(1-q). Commutative; 1 is absorbing.
Probability compose_density(Probability p, Probability q);

/// New information per cell conveyed by punching at density q over prior
/// density p: H((1-p)(1-q)) - (1-q) H(p), in nats. Zero whenever q is 0 or
/// 1 or the tape is saturated.
InfoQuantity mutual_info(Probability p, Probability q);

/// Punch density maximizing mutual_info(p, .). Ranges from 1/2 on virgin
/// tape to 1 - 1/e in the saturated limit (the p = 1 value is the limit).
Probability optimal_punch(Probability p);

/// Output density produced by the optimal punch.
Probability optimal_output_density(Probability p);

/// Channel capacity C(p) = max_q mutual_info(p, q) = ln(e^{-H(p)/(1-p)} + 1)
/// nats; C(1) = 0 by continuity.
InfoQuantity capacity(Probability p);

/// One-usage shrinkage of capacity: C(optimal_output_density(p)) / C(p).
/// Increases from ln5/ln2 - 2 at p = 0 toward 1/e (returned at p = 1).
double shrinkage(Probability p);

/// lim_{p->1} mutual_info(p,q)/capacity(p) = e (1-q)(-ln(1-q)). Equals 1 at
/// q = 1 - 1/e, 0 at both endpoints.
double capacity_ratio_limit(Probability q);

/// A tape as a bulk commodity: cell count and current hole density.
/// Whole-tape quantities scale linearly in the length.
struct TapeState {
    std::uint64_t length = 1;
    Probability hole_density;

    TapeState(std::uint64_t len, Probability p)
        : length(len), hole_density(p) {
        if (length < 1)
            throw std::domain_error("tape length must be at least 1");
    }

    /// Whole-tape capacity, length * C(p), in nats.
    InfoQuantity total_capacity() const {
        return InfoQuantity{static_cast<double>(length) *
                            capacity(hole_density).nats()};
    }
};

/// One operating point of the channel: densities in, density out, and the
/// per-cell information conveyed.
struct ChannelPoint {
    Probability p;
    Probability q;
    Probability p_out;
    InfoQuantity info;

    static ChannelPoint at(Probability p, Probability q) {
        return {p, q, compose_density(p, q), mutual_info(p, q)};
    }
};

} // namespace womkit::channel
