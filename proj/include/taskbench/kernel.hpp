#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "taskbench/graph.hpp"

// Per-task workload: a calibrated floating-point loop plus the procedure
// that converts iteration counts into seconds on the current machine.

namespace taskbench {

// Caller-owned state the kernel loop runs on. Contents are a pure function
// of (seed, coord) so every backend computes identical task digests.
struct kernel_scratch {
  std::array<double, 64> data{};
};

kernel_scratch make_scratch(std::uint64_t seed, task_coord coord) noexcept;

// Iteration count for one task. compute_bound returns base_iterations;
// load_imbalance draws from a counter-based generator keyed on
// (seed, step, point), giving values in base * [1 - f/2, 1 + f/2] with
// mean base, independent of execution order and backend.
std::uint64_t task_iterations(const kernel_config& cfg, task_coord task,
                              std::uint64_t seed) noexcept;

// Runs exactly `iterations` rounds of 16 independent multiply-add chains on
// the scratch buffer and returns a digest folded from the final contents.
// Wall time is linear in `iterations`.
std::uint64_t execute_kernel(std::uint64_t iterations, kernel_scratch& scratch) noexcept;

struct calibration {
  double seconds_per_iteration = 0.0;
  std::string measured_at;
};

// Test seam: clock and kernel runner are injectable so calibration logic is
// checkable without real timing.
struct calibrate_options {
  std::function<double()> now;                                      // monotonic seconds
  std::function<void(std::uint64_t, kernel_scratch&)> run_kernel;   // defaults to execute_kernel
  double tick_seconds = 0.0;  // clock resolution; 0 = use steady_clock period
};

// Measures single-core seconds-per-iteration by timing geometrically growing
// runs until `budget_seconds` is spent, then taking the median rate with the
// first run discarded as warm-up. Must run while no other worker is active.
// Throws clock_resolution_error if no run was long enough to time (>= 100
// clock ticks).
calibration calibrate(const kernel_config& cfg, double budget_seconds);
calibration calibrate(const kernel_config& cfg, double budget_seconds,
                      const calibrate_options& opts);

}  // namespace taskbench
