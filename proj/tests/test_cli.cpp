// Exercises the womkit binary end to end. Invoked by ctest with the binary
// path as the only argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "run_cli.hpp"

namespace {

std::string g_binary;

RunResult womkit(const std::string& args) {
    return run_command("'" + g_binary + "' " + args + " 2>/dev/null");
}

double field_as_double(const std::string& field) {
    return std::strtod(field.c_str(), nullptr);
}

} // namespace

TEST_CASE("point commands emit one-row tables") {
    const auto capacity = womkit("capacity 0.5");
    CHECK(capacity.exit_code == 0);
    const auto lines = split_lines(capacity.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "p,capacity_bits");
    const auto fields = split_fields(lines[1]);
    REQUIRE(fields.size() == 2);
    CHECK(fields[0] == "0.5");
    CHECK(fields[1] == "0.321928095");

    const auto mi = womkit("mi 0.5 0");
    CHECK(split_fields(split_lines(mi.output)[1])[2] == "0");

    const auto compose = womkit("compose 0.5 0.6");
    CHECK(field_as_double(split_fields(split_lines(compose.output)[1])[2]) ==
          doctest::Approx(0.8).epsilon(1e-9));

    const auto effective = womkit("effective 0");
    CHECK(split_fields(split_lines(effective.output)[1])[1] == "2.37313822");

    const auto ratio = womkit("ratio-limit 0.632120559");
    CHECK(field_as_double(split_fields(split_lines(ratio.output)[1])[1]) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("out-of-range and malformed arguments are usage errors") {
    CHECK(womkit("capacity 1.5").exit_code == 2);
    CHECK(womkit("capacity").exit_code == 2);
    CHECK(womkit("capacity abc").exit_code == 2);
    CHECK(womkit("no-such-command 1").exit_code == 2);
    CHECK(womkit("").exit_code == 2);
    CHECK(womkit("curve capacity --p 0.5").exit_code == 2);
    CHECK(womkit("ledger --q 0.5 --target 1 --steps 10").exit_code == 2);
    // diagnostics go to the error stream
    const auto with_err =
        run_command("'" + g_binary + "' capacity 1.5 2>&1");
    CHECK(with_err.exit_code == 2);
    CHECK(with_err.output.find("womkit") != std::string::npos);
}

TEST_CASE("units flag rescales information columns by exactly ln 2") {
    const auto bits = womkit("capacity 0.5 --units bits");
    const auto nats = womkit("capacity 0.5 --units nats");
    CHECK(split_lines(nats.output)[0] == "p,capacity_nats");
    const double b =
        field_as_double(split_fields(split_lines(bits.output)[1])[1]);
    const double n =
        field_as_double(split_fields(split_lines(nats.output)[1])[1]);
    CHECK(n / b == doctest::Approx(std::numbers::ln2).epsilon(1e-9));
    CHECK(n == doctest::Approx(std::log(1.25)).epsilon(1e-9));
}

TEST_CASE("precision flag widens the rendering") {
    const auto wide = womkit("capacity 0.5 --units nats --precision 15");
    CHECK(split_fields(split_lines(wide.output)[1])[1] ==
          "0.22314355131421");
}

TEST_CASE("rendered cells re-parse to the computed values") {
    const auto out = womkit("curve effective --samples 11 --units nats");
    const auto lines = split_lines(out.output);
    REQUIRE(lines.size() == 12);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        const double p = field_as_double(fields[0]);
        const double rendered = field_as_double(fields[1]);
        const double computed = [&] {
            if (p == 0.0)
                return std::numbers::pi * std::numbers::pi / 6.0;
            // reference: direct series for Li2(1-p)
            double sum = 0.0, power = 1.0 - p;
            for (long k = 1; power / (k * k) > 1e-18 && k < 1000000; ++k) {
                sum += power / (static_cast<double>(k) * k);
                power *= 1.0 - p;
            }
            return sum;
        }();
        CHECK(rendered == doctest::Approx(computed).epsilon(5e-9));
    }
}

TEST_CASE("curve tables reproduce the figure anchor points") {
    const auto cap = womkit("curve capacity --samples 3 --units bits");
    const auto lines = split_lines(cap.output);
    REQUIRE(lines.size() == 4);
    CHECK(split_fields(lines[1])[1] == "1");
    CHECK(split_fields(lines[2])[1] == "0.321928095");
    CHECK(split_fields(lines[3])[1] == "0");

    // the maximum of each mutual-information curve is part of the grid
    const auto mi = womkit("curve mi --p 0.5 --samples 5 --units bits");
    bool found_max = false;
    for (const auto& line : split_lines(mi.output))
        if (line.find("0.5,0.6,0.321928095") == 0)
            found_max = true;
    CHECK(found_max);

    const auto qhat = womkit("curve qhat --samples 5");
    const auto qhat_lines = split_lines(qhat.output);
    CHECK(split_fields(qhat_lines[1])[1] == "0.5");
    CHECK(field_as_double(split_fields(qhat_lines[5])[1]) ==
          doctest::Approx(1.0 - 1.0 / std::numbers::e).epsilon(1e-9));
}

TEST_CASE("saturated-tape rate curve follows the self-information function") {
    const auto out = womkit("curve mufam --p 1 --samples 21");
    const auto lines = split_lines(out.output);
    REQUIRE(lines.size() == 22);
    CHECK(lines[0] == "p,q,sigma,mu");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        const double sigma = field_as_double(fields[2]);
        const double mu = field_as_double(fields[3]);
        const double expected =
            sigma > 0.0 ? sigma * (-std::log(sigma)) : 0.0;
        CHECK(std::abs(mu - expected) <= 1e-9);
    }
}

TEST_CASE("dimensionless ratio columns ignore the units flag") {
    const auto bits = womkit("curve mufam --p 0.5 --samples 9 --units bits");
    const auto nats = womkit("curve mufam --p 0.5 --samples 9 --units nats");
    CHECK(bits.output == nats.output);
}

TEST_CASE("wars command reports the race and its equilibrium") {
    const auto out = womkit("wars");
    const auto lines = split_lines(out.output);
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0] ==
          "step,density,per_party_rate_bits,total_rate_bits,response_slope,"
          "converged");
    const auto last = split_fields(lines.back());
    CHECK(last[0] == "equilibrium");
    CHECK(field_as_double(last[1]) ==
          doctest::Approx(0.60875319154565723).epsilon(1e-7));
    CHECK(field_as_double(last[2]) ==
          doctest::Approx(0.23969228596942013).epsilon(1e-7));
    CHECK(field_as_double(last[3]) ==
          doctest::Approx(0.47938457193884027).epsilon(1e-7));
    CHECK(field_as_double(last[4]) < 1.0);

    // starting at the fixed point leaves a single trajectory row
    const auto fixed = womkit("wars --p0 0.60875319154565723");
    CHECK(split_lines(fixed.output).size() == 3);
}

TEST_CASE("simulate output is deterministic and tracks the channel") {
    const std::string args =
        "simulate --n 200000 --p 0.5 --q 0.6 --seed 7 --units nats";
    const auto first = womkit(args);
    const auto second = womkit(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto lines = split_lines(first.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "stage,q,p_out,p_out_emp,mi_nats,mi_emp_nats,p_out_dev_sigma");
    const auto fields = split_fields(lines[1]);
    CHECK(field_as_double(fields[2]) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(field_as_double(fields[3]) - 0.8) <= 4e-3);
    CHECK(std::abs(field_as_double(fields[6])) <= 4.0);

    const auto different = womkit(
        "simulate --n 200000 --p 0.5 --q 0.6 --seed 8 --units nats");
    CHECK(different.output != first.output);
}

TEST_CASE("full-size simulation lands on the analytic mutual information") {
    const auto out = womkit(
        "simulate --n 1000000 --p 0.5 --q 0.6 --seed 7 --units nats");
    const auto fields = split_fields(split_lines(out.output)[1]);
    CHECK(std::abs(field_as_double(fields[5]) - 0.223144) <= 5e-3);
}

TEST_CASE("simulate punch-density edge cases") {
    const auto zero = womkit("simulate --n 1000 --p 0.3 --q 0 --seed 3");
    const auto zfields = split_fields(split_lines(zero.output)[1]);
    CHECK(zfields[4] == "0");
    CHECK(zfields[5] == "0");

    const auto one = womkit("simulate --n 1000 --p 0.3 --q 1 --seed 3");
    const auto ofields = split_fields(split_lines(one.output)[1]);
    CHECK(ofields[3] == "1");
}

TEST_CASE("ledger emits stage rows plus totals") {
    const auto out =
        womkit("ledger --length 1000000 --q 0.5 --units nats");
    const auto lines = split_lines(out.output);
    REQUIRE(lines.size() == 3);
    const auto stage = split_fields(lines[1]);
    const auto total = split_fields(lines[2]);
    CHECK(total[0] == "total");
    // one optimal punch on a virgin million-cell tape
    CHECK(field_as_double(stage[7]) ==
          doctest::Approx(1e6 * std::numbers::ln2).epsilon(1e-8));
    CHECK(field_as_double(stage[8]) ==
          doctest::Approx(369546.35982326862).epsilon(1e-7));
    CHECK(field_as_double(total[4]) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-9));

    const auto empty = womkit("ledger --length 100 --units nats");
    const auto empty_lines = split_lines(empty.output);
    REQUIRE(empty_lines.size() == 2);
    const auto totals = split_fields(empty_lines[1]);
    CHECK(totals[0] == "total");
    CHECK(field_as_double(totals[4]) == 0.0);
    CHECK(field_as_double(totals[6]) == 0.0);
}

TEST_CASE("incremental ledger approaches the effective capacity") {
    const auto out = womkit(
        "ledger --length 1 --target 1 --steps 1000 --units nats");
    const auto lines = split_lines(out.output);
    REQUIRE(lines.size() == 1002);
    const auto total = split_fields(lines.back());
    const double sent = field_as_double(total[4]);
    const double limit = std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(std::abs(sent - limit) / limit < 0.01);
}

TEST_CASE("json format emits an array of row objects") {
    const auto out = womkit("capacity 0.5 --format json");
    CHECK(out.exit_code == 0);
    CHECK(out.output.front() == '[');
    CHECK(out.output.find("\"p\":0.5") != std::string::npos);
    CHECK(out.output.find("\"capacity_bits\":0.321928095") !=
          std::string::npos);

    const auto empty =
        womkit("ledger --length 5 --units nats --format json");
    CHECK(empty.exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-womkit-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context context;
    return context.run();
}
