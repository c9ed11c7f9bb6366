#include "taskbench/graph.hpp"

#include <algorithm>

namespace taskbench {

const char* to_string(graph_pattern p) noexcept {
  switch (p) {
    case graph_pattern::stencil: return "stencil";
    case graph_pattern::spread: return "spread";
    case graph_pattern::all_to_all: return "all_to_all";
  }
  return "?";
}

const char* to_string(kernel_kind k) noexcept {
  switch (k) {
    case kernel_kind::compute_bound: return "compute_bound";
    case kernel_kind::load_imbalance: return "load_imbalance";
  }
  return "?";
}

void interval_set::insert(std::uint32_t lo, std::uint32_t hi) {
  if (lo >= hi) return;
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), lo,
                             [](const interval& iv, std::uint32_t v) { return iv.hi < v; });
  // `it` is the first interval that could merge with [lo, hi).
  interval merged{lo, hi};
  auto first = it;
  while (it != intervals_.end() && it->lo <= merged.hi) {
    merged.lo = std::min(merged.lo, it->lo);
    merged.hi = std::max(merged.hi, it->hi);
    ++it;
  }
  it = intervals_.erase(first, it);
  intervals_.insert(it, merged);
}

bool interval_set::contains(std::uint32_t point) const noexcept {
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), point,
                             [](const interval& iv, std::uint32_t v) { return iv.hi <= v; });
  return it != intervals_.end() && it->lo <= point;
}

std::uint64_t interval_set::size() const noexcept {
  std::uint64_t n = 0;
  for (const auto& iv : intervals_) n += iv.hi - iv.lo;
  return n;
}

interval_set interval_set::clipped(std::uint32_t lo, std::uint32_t hi) const {
  interval_set out;
  for (const auto& iv : intervals_) {
    std::uint32_t l = std::max(iv.lo, lo);
    std::uint32_t h = std::min(iv.hi, hi);
    if (l < h) out.insert(l, h);
  }
  return out;
}

task_graph_spec validate_spec(const task_graph_spec& spec) {
  if (spec.width < 1) throw invalid_spec("width", "must be >= 1");
  if (spec.steps < 1) throw invalid_spec("steps", "must be >= 1");
  if (spec.output_bytes < 8) throw invalid_spec("output_bytes", "must be >= 8 to hold the digest");
  if (spec.pattern == graph_pattern::spread) {
    if (spec.spread_radix < 1) throw invalid_spec("spread_radix", "must be >= 1");
    if (spec.spread_radix > spec.width)
      throw invalid_spec("spread_radix", "must not exceed width");
  }
  if (spec.kernel.base_iterations < 1)
    throw invalid_spec("kernel.base_iterations", "must be >= 1");
  if (spec.kernel.imbalance_factor < 0.0 || spec.kernel.imbalance_factor > 2.0)
    throw invalid_spec("kernel.imbalance_factor", "must lie in [0, 2]");
  return spec;
}

namespace {

void check_bounds(const task_graph_spec& spec, task_coord task) {
  if (task.step >= spec.steps || task.point >= spec.width)
    throw out_of_bounds("task (" + std::to_string(task.step) + ", " + std::to_string(task.point) +
                        ") outside graph of " + std::to_string(spec.steps) + " steps x " +
                        std::to_string(spec.width) + " width");
}

std::uint32_t spread_stride(const task_graph_spec& spec) noexcept {
  return (spec.width + spec.spread_radix - 1) / spec.spread_radix;  // ceil(width / K)
}

}  // namespace

interval_set dependencies(const task_graph_spec& spec, task_coord task) {
  check_bounds(spec, task);
  interval_set deps;
  if (task.step == 0) return deps;

  switch (spec.pattern) {
    case graph_pattern::stencil: {
      std::uint32_t lo = task.point > 0 ? task.point - 1 : 0;
      std::uint32_t hi = std::min(spec.width, task.point + 2);
      deps.insert(lo, hi);  // no wraparound at the edges
      break;
    }
    case graph_pattern::spread: {
      const std::uint64_t stride = spread_stride(spec);
      for (std::uint32_t i = 0; i < spec.spread_radix; ++i) {
        std::uint64_t p = (task.point + i * stride + task.step) % spec.width;
        deps.insert(static_cast<std::uint32_t>(p));
      }
      break;
    }
    case graph_pattern::all_to_all:
      deps.insert(0, spec.width);
      break;
  }
  return deps;
}

interval_set reverse_dependencies(const task_graph_spec& spec, task_coord task) {
  check_bounds(spec, task);
  interval_set out;
  if (task.step + 1 >= spec.steps) return out;

  switch (spec.pattern) {
    case graph_pattern::stencil: {
      // The 3-point stencil is symmetric: consumers are the clipped neighborhood.
      std::uint32_t lo = task.point > 0 ? task.point - 1 : 0;
      std::uint32_t hi = std::min(spec.width, task.point + 2);
      out.insert(lo, hi);
      break;
    }
    case graph_pattern::spread: {
      // Invert p' + i*stride + (step+1) == point (mod width).
      const std::uint64_t w = spec.width;
      const std::uint64_t stride = spread_stride(spec);
      const std::uint64_t shift = task.step + 1;
      for (std::uint32_t i = 0; i < spec.spread_radix; ++i) {
        std::uint64_t sub = (i * stride + shift) % w;
        std::uint64_t p = (task.point + w - sub) % w;
        out.insert(static_cast<std::uint32_t>(p));
      }
      break;
    }
    case graph_pattern::all_to_all:
      out.insert(0, spec.width);
      break;
  }
  return out;
}

}  // namespace taskbench
