#pragma once

#include <stdexcept>
#include <string>

namespace taskbench {

// Raised when a task graph spec violates one of its invariants. `field`
// names the offending spec field so CLI diagnostics can point at it.
class invalid_spec : public std::invalid_argument {
public:
  invalid_spec(std::string field, const std::string& reason)
      : std::invalid_argument("invalid spec: " + field + ": " + reason), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

class invalid_config : public std::invalid_argument {
public:
  invalid_config(std::string field, const std::string& reason)
      : std::invalid_argument("invalid config: " + field + ": " + reason), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

class out_of_bounds : public std::out_of_range {
public:
  explicit out_of_bounds(const std::string& what) : std::out_of_range(what) {}
};

class clock_resolution_error : public std::runtime_error {
public:
  explicit clock_resolution_error(const std::string& what) : std::runtime_error(what) {}
};

class execution_failure : public std::runtime_error {
public:
  explicit execution_failure(const std::string& what) : std::runtime_error(what) {}
};

// All workers suspended with no runnable task. Cannot happen for the graphs
// generated here; if it fires it is a scheduler bug, not a user error.
class deadlock_detected : public std::runtime_error {
public:
  explicit deadlock_detected(const std::string& what) : std::runtime_error(what) {}
};

class zero_wall_time : public std::runtime_error {
public:
  explicit zero_wall_time(const std::string& what) : std::runtime_error(what) {}
};

class invalid_sweep : public std::invalid_argument {
public:
  explicit invalid_sweep(const std::string& what) : std::invalid_argument(what) {}
};

class empty_samples : public std::invalid_argument {
public:
  explicit empty_samples(const std::string& what) : std::invalid_argument(what) {}
};

class io_error : public std::runtime_error {
public:
  io_error(std::string path, const std::string& reason)
      : std::runtime_error("io error: " + path + ": " + reason), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

}  // namespace taskbench
