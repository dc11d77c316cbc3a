#pragma once

#include <stdexcept>
#include <string>

namespace twtie {

// Bad arguments: out-of-range vertices, malformed specs, parse failures.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact oracle was asked for an instance above its configured budget.
// Never a wrong answer; the CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition that is a theorem failed at runtime. Indicates a bug.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twtie
