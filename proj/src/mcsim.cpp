#include "womkit/mcsim.hpp"

#include <cmath>
#include <stdexcept>

#include "womkit/rng.hpp"

namespace womkit::mcsim {

std::uint64_t SimTape::hole_count() const {
    std::uint64_t holes = 0;
    const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for reduction(+ : holes) schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        holes += cells[i];
    return holes;
}

double SimTape::hole_density() const {
    if (cells.empty())
        return 0.0;
    return static_cast<double>(hole_count()) /
           static_cast<double>(cells.size());
}

StageObservation StageObservation::from_counts(std::uint64_t spare_blank,
                                               std::uint64_t spare_hole,
                                               std::uint64_t punch_blank,
                                               std::uint64_t punch_hole) {
    StageObservation obs;
    obs.n = spare_blank + spare_hole + punch_blank + punch_hole;
    if (obs.n == 0)
        throw std::domain_error("observation needs at least one cell");
    obs.spare_blank = spare_blank;
    obs.spare_hole = spare_hole;
    obs.punch_blank = punch_blank;
    obs.punch_hole = punch_hole;
    obs.empirical_p_out = static_cast<double>(spare_hole + punch_hole) /
                          static_cast<double>(obs.n);
    obs.empirical_mi = estimate_mi(obs);
    return obs;
}

double estimate_mi(const StageObservation& obs) {
    const double n = static_cast<double>(obs.n);
    const double joint[2][2] = {
        {static_cast<double>(obs.spare_blank) / n,
         static_cast<double>(obs.spare_hole) / n},
        {static_cast<double>(obs.punch_blank) / n,
         static_cast<double>(obs.punch_hole) / n}};
    const double action[2] = {joint[0][0] + joint[0][1],
                              joint[1][0] + joint[1][1]};
    const double outcome[2] = {joint[0][0] + joint[1][0],
                               joint[0][1] + joint[1][1]};
    double mi = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if (joint[x][y] > 0.0)
                mi += joint[x][y] *
                      std::log(joint[x][y] / (action[x] * outcome[y]));
    return mi < 0.0 ? 0.0 : mi;
}

namespace {

SimTape make_blank(std::uint64_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::domain_error("tape needs at least one cell");
    SimTape tape;
    tape.cells.resize(n);
    tape.seed_history.push_back(seed);
    return tape;
}

inline std::uint8_t sampled_cell(std::uint64_t seed, std::int64_t i,
                                 double threshold) {
    return rng::uniform01(seed, static_cast<std::uint64_t>(i)) < threshold
               ? 1
               : 0;
}

// Per-cell punching step shared by the serial and OpenMP paths. Returns
// the new cell state and bumps the matching (action, outcome) tally.
inline std::uint8_t punched_cell(std::uint64_t seed, std::int64_t i,
                                 double threshold, std::uint8_t before,
                                 std::uint64_t& spare_blank,
                                 std::uint64_t& spare_hole,
                                 std::uint64_t& punch_hole) {
    if (rng::uniform01(seed, static_cast<std::uint64_t>(i)) < threshold) {
        ++punch_hole;
        return 1;
    }
    if (before)
        ++spare_hole;
    else
        ++spare_blank;
    return before;
}

} // namespace

SimTape sample_tape(std::uint64_t n, Probability p, std::uint64_t seed) {
    SimTape tape = make_blank(n, seed);
    const double threshold = p.value();
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        tape.cells[i] = sampled_cell(seed, i, threshold);
    return tape;
}

SimTape sample_tape_serial(std::uint64_t n, Probability p,
                           std::uint64_t seed) {
    SimTape tape = make_blank(n, seed);
    const double threshold = p.value();
    const auto count = static_cast<std::int64_t>(n);
    for (std::int64_t i = 0; i < count; ++i)
        tape.cells[i] = sampled_cell(seed, i, threshold);
    return tape;
}

std::pair<SimTape, StageObservation>
blind_punch(const SimTape& tape, Probability q, std::uint64_t seed) {
    SimTape out = make_blank(tape.cells.size(), seed);
    out.seed_history = tape.seed_history;
    out.seed_history.push_back(seed);
    const double threshold = q.value();
    const auto count = static_cast<std::int64_t>(tape.cells.size());
    std::uint64_t spare_blank = 0, spare_hole = 0, punch_hole = 0;
#pragma omp parallel for schedule(static)                                     \
    reduction(+ : spare_blank, spare_hole, punch_hole)
    for (std::int64_t i = 0; i < count; ++i)
        out.cells[i] = punched_cell(seed, i, threshold, tape.cells[i],
                                    spare_blank, spare_hole, punch_hole);
    return {std::move(out), StageObservation::from_counts(
                                spare_blank, spare_hole, 0, punch_hole)};
}

std::pair<SimTape, StageObservation>
blind_punch_serial(const SimTape& tape, Probability q, std::uint64_t seed) {
    SimTape out = make_blank(tape.cells.size(), seed);
    out.seed_history = tape.seed_history;
    out.seed_history.push_back(seed);
    const double threshold = q.value();
    const auto count = static_cast<std::int64_t>(tape.cells.size());
    std::uint64_t spare_blank = 0, spare_hole = 0, punch_hole = 0;
    for (std::int64_t i = 0; i < count; ++i)
        out.cells[i] = punched_cell(seed, i, threshold, tape.cells[i],
                                    spare_blank, spare_hole, punch_hole);
    return {std::move(out), StageObservation::from_counts(
                                spare_blank, spare_hole, 0, punch_hole)};
}

std::vector<StageObservation> run_stages(std::uint64_t n,
                                         std::span<const Probability> q_list,
                                         std::uint64_t seed) {
    if (n < 1)
        throw std::domain_error("tape needs at least one cell");
    std::vector<StageObservation> observations;
    observations.reserve(q_list.size());
    SimTape tape;
    tape.cells.assign(n, 0);
    tape.seed_history.push_back(seed);
    for (std::size_t k = 0; k < q_list.size(); ++k) {
        auto [next, obs] =
            blind_punch(tape, q_list[k], rng::child_seed(seed, k));
        tape = std::move(next);
        observations.push_back(obs);
    }
    return observations;
}

} // namespace womkit::mcsim
