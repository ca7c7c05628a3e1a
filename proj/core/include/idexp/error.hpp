#pragma once

#include <stdexcept>
#include <string>

namespace idexp {

// Malformed input: unknown variables, bad weights, malformed scripts or documents.
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold (e.g. the origin is not a
// singular point of every component). Also exit code 1.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Honest failure: a bounded search ran out of budget or the characteristic is
// outside the supported range of a method. Exit code 2, never a wrong answer.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idexp
