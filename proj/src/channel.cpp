#include "womkit/channel.hpp"

#include <cmath>

namespace womkit::channel {

namespace {

constexpr double inv_e = 1.0 / std::numbers::e;

// H(p)/(1-p), the exponent shared by optimal_punch, optimal_output_density
// and capacity. Diverges as p -> 1; callers branch on p == 1 first.
double entropy_over_complement(Probability p) {
    return entropy(p).nats() / p.complement();
}

} // namespace

Probability compose_density(Probability p, Probability q) {
    // Identity punches return the operand exactly instead of going through
    // the 1-(1-p)(1-q) round trip.
    if (q.value() == 0.0)
        return p;
    if (p.value() == 0.0)
        return q;
    return Probability{1.0 - p.complement() * q.complement()};
}

InfoQuantity mutual_info(Probability p, Probability q) {
    if (q.value() == 0.0 || q.value() == 1.0 || p.value() == 1.0)
        return InfoQuantity{0.0};
    const double spared_blank = p.complement() * q.complement();
    return InfoQuantity{entropy(Probability{spared_blank}).nats() -
                        q.complement() * entropy(p).nats()};
}

Probability optimal_punch(Probability p) {
    if (p.value() == 1.0)
        return Probability{1.0 - inv_e};
    const double denom =
        p.complement() * (std::exp(entropy_over_complement(p)) + 1.0);
    return Probability{1.0 - 1.0 / denom};
}

Probability optimal_output_density(Probability p) {
    if (p.value() == 1.0)
        return Probability{1.0};
    return Probability{1.0 /
                       (std::exp(-entropy_over_complement(p)) + 1.0)};
}

InfoQuantity capacity(Probability p) {
    if (p.value() == 1.0)
        return InfoQuantity{0.0};
    return InfoQuantity{std::log1p(std::exp(-entropy_over_complement(p)))};
}

double shrinkage(Probability p) {
    if (p.value() == 1.0)
        return inv_e;
    return capacity(optimal_output_density(p)).nats() / capacity(p).nats();
}

double capacity_ratio_limit(Probability q) {
    if (q.value() == 1.0)
        return 0.0;
    return std::numbers::e * q.complement() * neg_log(q.complement());
}

} // namespace womkit::channel
