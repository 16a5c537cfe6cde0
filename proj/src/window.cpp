#include "hopf/window.hpp"

#include <atomic>
#include <mutex>

#include "hopf/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopf {

namespace {

void requireSameShape(const LinMap& f, const LinMap& g) {
  if (!sameSpace(f.dom(), g.dom()) || !sameSpace(f.cod(), g.cod())) {
    throw SpaceMismatch("cannot compare maps " + f.dom().name() + "->" + f.cod().name() +
                        " and " + g.dom().name() + "->" + g.cod().name());
  }
}

}  // namespace

std::size_t firstFailureSerial(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok(i)) return i;
  }
  return n;
}

std::size_t firstFailure(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  std::atomic<std::size_t> first{n};
  std::exception_ptr error;
  std::mutex errorMutex;
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    // Everything past a known failure is irrelevant to the minimum.
    if (idx >= first.load(std::memory_order_relaxed)) continue;
    try {
      if (!ok(idx)) {
        std::size_t cur = first.load();
        while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(errorMutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return first.load();
}

namespace {

Verdict compareWith(const LinMap& f, const LinMap& g, int window, bool parallel) {
  requireSameShape(f, g);
  const std::vector<Label> labels = f.dom().enumerate(window);
  auto ok = [&](std::size_t i) { return f(labels[i]) == g(labels[i]); };
  const std::size_t idx = parallel ? firstFailure(labels.size(), ok)
                                   : firstFailureSerial(labels.size(), ok);
  Verdict v;
  v.instances = labels.size();
  if (idx < labels.size()) {
    v.equal = false;
    v.counterexample = Counterexample{labels[idx], f(labels[idx]), g(labels[idx])};
  }
  return v;
}

}  // namespace

Verdict equalOnWindow(const LinMap& f, const LinMap& g, int window) {
  return compareWith(f, g, window, true);
}

Verdict equalOnWindowSerial(const LinMap& f, const LinMap& g, int window) {
  return compareWith(f, g, window, false);
}

Verdict wellTypedOnWindow(const LinMap& f, int window) {
  const std::vector<Label> labels = f.dom().enumerate(window);
  auto ok = [&](std::size_t i) {
    for (const auto& [l, c] : f(labels[i])) {
      if (!f.cod().valid(l)) return false;
    }
    return true;
  };
  const std::size_t idx = firstFailure(labels.size(), ok);
  Verdict v;
  v.instances = labels.size();
  if (idx < labels.size()) {
    v.equal = false;
    v.counterexample = Counterexample{labels[idx], f(labels[idx]), Vec()};
  }
  return v;
}

}  // namespace hopf
