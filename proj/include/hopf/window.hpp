#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hopf/linmap.hpp"

namespace hopf {

struct Counterexample {
  Label label;
  Vec lhs;
  Vec rhs;
};

/// Result of an exact window comparison. `counterexample` is the first
/// differing label in enumeration order.
struct Verdict {
  bool equal = true;
  std::optional<Counterexample> counterexample;
  std::size_t instances = 0;

  explicit operator bool() const { return equal; }
};

/// Exact comparison of f and g on every label of f.dom().enumerate(window).
/// Evaluated data-parallel over labels; the reported counterexample is
/// always the first in enumeration order.
Verdict equalOnWindow(const LinMap& f, const LinMap& g, int window);

/// Single-threaded reference for equalOnWindow.
Verdict equalOnWindowSerial(const LinMap& f, const LinMap& g, int window);

/// Index of the first i in [0, n) with !ok(i), or n when every index passes.
/// Runs `ok` in parallel; exceptions thrown by `ok` are rethrown on the
/// calling thread.
std::size_t firstFailure(std::size_t n, const std::function<bool(std::size_t)>& ok);
std::size_t firstFailureSerial(std::size_t n, const std::function<bool(std::size_t)>& ok);

/// Checks that f maps each window label into cod-valid labels.
Verdict wellTypedOnWindow(const LinMap& f, int window);

}  // namespace hopf
