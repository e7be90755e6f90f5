#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "womkit/probability.hpp"

namespace womkit::mcsim {

/// A concrete tape: one byte per cell, 0 = blank, 1 = hole, plus the seeds
/// that produced it. Identical seeds and parameters reproduce identical
/// tapes bit for bit, at any thread count.
struct SimTape {
    std::vector<std::uint8_t> cells;
    std::vector<std::uint64_t> seed_history;

    std::uint64_t hole_count() const;
    double hole_density() const;
};

/// Tally of one punching stage: the 2x2 (action x outcome) counts and the
/// plug-in estimates derived from them. Punching always yields a hole, so
/// punch_blank stays 0.
struct StageObservation {
    std::uint64_t n = 0;
    std::uint64_t spare_blank = 0;
    std::uint64_t spare_hole = 0;
    std::uint64_t punch_blank = 0;
    std::uint64_t punch_hole = 0;
    double empirical_p_out = 0.0;
    double empirical_mi = 0.0; // nats

    static StageObservation from_counts(std::uint64_t spare_blank,
                                        std::uint64_t spare_hole,
                                        std::uint64_t punch_blank,
                                        std::uint64_t punch_hole);
};

/// Plug-in mutual information of the empirical (action, outcome) table, in
/// nats. Zero-count cells contribute zero.
double estimate_mi(const StageObservation& obs);

/// n independent Bernoulli(p) cells. OpenMP-parallel; bit-identical to
/// sample_tape_serial.
SimTape sample_tape(std::uint64_t n, Probability p, std::uint64_t seed);
SimTape sample_tape_serial(std::uint64_t n, Probability p,
                           std::uint64_t seed);

/// Issue a punch command to every cell independently with probability q
/// (holes are absorbing) and tally (action, outcome) pairs. OpenMP-parallel;
/// bit-identical to blind_punch_serial.
std::pair<SimTape, StageObservation>
blind_punch(const SimTape& tape, Probability q, std::uint64_t seed);
std::pair<SimTape, StageObservation>
blind_punch_serial(const SimTape& tape, Probability q, std::uint64_t seed);

/// Start from virgin tape and apply one blind punch per entry of q_list,
/// each stage on its own child seed.
std::vector<StageObservation> run_stages(std::uint64_t n,
                                         std::span<const Probability> q_list,
                                         std::uint64_t seed);

} // namespace womkit::mcsim
