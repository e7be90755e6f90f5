#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace womkit {

/// A probability value, constrained to [0,1]. Construction rejects
/// out-of-range values and NaN.
class Probability {
  public:
    Probability() = default;

    Probability(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::domain_error("probability out of range [0,1]");
    }

    double value() const { return value_; }

    /// 1 - p. Exact for p >= 1/2.
    double complement() const { return 1.0 - value_; }

    friend bool operator==(Probability a, Probability b) = default;

  private:
    double value_ = 0.0;
};

/// An amount of information, stored in nats. Non-negative by construction;
/// negative inputs within the floating-point guard band (-1e-12, 0) are
/// clamped to zero, anything below that is rejected.
class InfoQuantity {
  public:
    InfoQuantity() = default;

    explicit InfoQuantity(double nats) : nats_(nats) {
        if (std::isnan(nats_))
            throw std::domain_error("information quantity is NaN");
        if (nats_ < 0.0) {
            if (nats_ < -1e-12)
                throw std::domain_error("negative information quantity");
            nats_ = 0.0;
        }
    }

    double nats() const { return nats_; }
    double bits() const { return nats_ / std::numbers::ln2; }

    friend bool operator==(InfoQuantity a, InfoQuantity b) = default;

  private:
    double nats_ = 0.0;
};

inline double to_bits(InfoQuantity x) { return x.bits(); }

inline InfoQuantity to_nats(double bits) {
    return InfoQuantity{bits * std::numbers::ln2};
}

} // namespace womkit
