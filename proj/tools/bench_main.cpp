// Compares the OpenMP kernels against their serial references and reports
// timings plus a consistency check. Usage: womkit-bench [cells] [grid]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "womkit/equivalence.hpp"
#include "womkit/mcsim.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename F> double time_best_of(int reps, F&& work) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = clock_type::now();
        work();
        const double t = seconds_since(start);
        if (t < best)
            best = t;
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-24s %10.4f ms %10.4f ms %8.2fx   %s\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel,
                match ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const std::uint64_t cells =
        argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 8000000ULL;
    const int grid = argc > 2 ? std::atoi(argv[2]) : 2001;
    const std::uint64_t seed = 42;
    const int reps = 3;

#ifdef _OPENMP
    std::printf("threads: %d, cells: %llu, grid: %d\n",
                omp_get_max_threads(),
                static_cast<unsigned long long>(cells), grid);
#else
    std::printf("OpenMP disabled, cells: %llu, grid: %d\n",
                static_cast<unsigned long long>(cells), grid);
#endif
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    using namespace womkit;

    {
        mcsim::SimTape tape_s, tape_p;
        const double t_serial = time_best_of(reps, [&] {
            tape_s = mcsim::sample_tape_serial(cells, 0.5, seed);
        });
        const double t_par = time_best_of(
            reps, [&] { tape_p = mcsim::sample_tape(cells, 0.5, seed); });
        report("sample_tape", t_serial, t_par, tape_s.cells == tape_p.cells);

        mcsim::StageObservation obs_s, obs_p;
        mcsim::SimTape out_s, out_p;
        const double u_serial = time_best_of(reps, [&] {
            auto [tape, obs] = mcsim::blind_punch_serial(tape_s, 0.6, seed);
            out_s = std::move(tape);
            obs_s = obs;
        });
        const double u_par = time_best_of(reps, [&] {
            auto [tape, obs] = mcsim::blind_punch(tape_p, 0.6, seed);
            out_p = std::move(tape);
            obs_p = obs;
        });
        report("blind_punch", u_serial, u_par,
               out_s.cells == out_p.cells &&
                   obs_s.spare_blank == obs_p.spare_blank &&
                   obs_s.spare_hole == obs_p.spare_hole &&
                   obs_s.punch_hole == obs_p.punch_hole);
    }

    {
        double d_s = 0.0, d_p = 0.0;
        const double t_serial = time_best_of(
            reps, [&] { d_s = equivalence::departure_serial(0.0, grid); });
        const double t_par = time_best_of(
            reps, [&] { d_p = equivalence::departure(0.0, grid); });
        report("departure scan", t_serial, t_par, d_s == d_p);
    }

    return 0;
}
