#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "taskbench/errors.hpp"

// Task graph structure: a grid of width x steps tasks where every edge
// connects a task to tasks of the immediately preceding step. The three
// dependency patterns (stencil, spread, all_to_all) are computed on the
// fly; nothing is materialized.

namespace taskbench {

enum class graph_pattern : std::uint8_t { stencil, spread, all_to_all };

enum class kernel_kind : std::uint8_t { compute_bound, load_imbalance };

const char* to_string(graph_pattern p) noexcept;
const char* to_string(kernel_kind k) noexcept;

struct kernel_config {
  kernel_kind kind = kernel_kind::compute_bound;
  std::uint64_t base_iterations = 1u << 20;
  double imbalance_factor = 0.0;  // only read by load_imbalance

  bool operator==(const kernel_config&) const = default;
};

struct task_coord {
  std::uint32_t step = 0;
  std::uint32_t point = 0;

  auto operator<=>(const task_coord&) const = default;  // (step, point) lexicographic
};

struct task_graph_spec {
  std::uint32_t width = 1;   // tasks per step
  std::uint32_t steps = 1;   // time steps
  graph_pattern pattern = graph_pattern::stencil;
  std::uint32_t spread_radix = 1;  // dependencies per task, spread only
  kernel_config kernel;
  std::uint32_t output_bytes = 16;  // per-task output payload, >= 8
  std::uint64_t seed = 0;

  std::uint64_t task_count() const noexcept {
    return static_cast<std::uint64_t>(width) * steps;
  }

  bool operator==(const task_graph_spec&) const = default;
};

// Sorted, disjoint, non-adjacent half-open ranges of point indices.
class interval_set {
public:
  struct interval {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;  // exclusive

    bool operator==(const interval&) const = default;
  };

  interval_set() = default;

  // Inserts [lo, hi), merging with overlapping or adjacent ranges.
  void insert(std::uint32_t lo, std::uint32_t hi);
  void insert(std::uint32_t point) { insert(point, point + 1); }

  bool contains(std::uint32_t point) const noexcept;
  bool empty() const noexcept { return intervals_.empty(); }
  std::uint64_t size() const noexcept;  // number of points covered

  const std::vector<interval>& intervals() const noexcept { return intervals_; }

  // Intersection with [lo, hi).
  interval_set clipped(std::uint32_t lo, std::uint32_t hi) const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& iv : intervals_)
      for (std::uint32_t p = iv.lo; p < iv.hi; ++p) f(p);
  }

  bool operator==(const interval_set&) const = default;

private:
  std::vector<interval> intervals_;
};

// Throws invalid_spec naming the violated field; returns the spec unchanged
// otherwise.
task_graph_spec validate_spec(const task_graph_spec& spec);

// Points of step task.step - 1 whose outputs `task` consumes. Empty at
// step 0. Throws out_of_bounds for coordinates outside the spec.
interval_set dependencies(const task_graph_spec& spec, task_coord task);

// Points of step task.step + 1 that consume `task`'s output. Empty at the
// last step.
interval_set reverse_dependencies(const task_graph_spec& spec, task_coord task);

}  // namespace taskbench
