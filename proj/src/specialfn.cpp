#include "womkit/specialfn.hpp"

namespace womkit {

InfoQuantity self_info(Probability x) {
    const double v = x.value();
    if (v == 0.0 || v == 1.0)
        return InfoQuantity{0.0};
    return InfoQuantity{v * neg_log(v)};
}

InfoQuantity entropy(Probability p) {
    return InfoQuantity{self_info(p).nats() +
                        self_info(p.complement()).nats()};
}

namespace {

// Direct series; terms decay geometrically, so this is only used for
// x <= 1/2 where ~50 terms reach 1e-16.
double dilog_series(double x) {
    double sum = 0.0;
    double power = x;
    for (int k = 1;; ++k) {
        const double term = power / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-16)
            break;
        power *= x;
    }
    return sum;
}

} // namespace

InfoQuantity dilog(Probability x) {
    const double v = x.value();
    if (v == 0.0)
        return InfoQuantity{0.0};
    if (v == 1.0)
        return InfoQuantity{pi_sq_over_6};
    if (v <= 0.5)
        return InfoQuantity{dilog_series(v)};
    // Reflection Li2(x) = pi^2/6 - ln x ln(1-x) - Li2(1-x); 1-v is exact here.
    const double y = 1.0 - v;
    return InfoQuantity{pi_sq_over_6 - std::log1p(v - 1.0) * std::log(y) -
                        dilog_series(y)};
}

} // namespace womkit
