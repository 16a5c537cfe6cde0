#include <benchmark/benchmark.h>

#include "hopf/pareigis.hpp"
#include "hopf/window.hpp"

using namespace hopf;

namespace {

struct Interchange {
  LinMap lhs;
  LinMap rhs;
};

// Delta . mu against (mu mu)(1 sigma 1)(Delta Delta) on P (x) P.
Interchange interchange() {
  const Bimonoid p = pareigisRing(-1);
  const Space& h = p.carrier;
  const LinMap lhs = composeMaps(p.mu, p.delta);
  const LinMap rhs = compose({tensorMaps(p.mu, p.mu), permuteMap({h, h, h, h}, {0, 2, 1, 3}),
                              tensorMaps(p.delta, p.delta)});
  return {lhs, rhs};
}

// (a b) c against a (b c) on P (x) P (x) P.
Interchange associativity() {
  const Bimonoid p = pareigisRing(-1);
  const LinMap id = LinMap::identity(p.carrier);
  return {composeMaps(tensorMaps(p.mu, id), p.mu), composeMaps(tensorMaps(id, p.mu), p.mu)};
}

template <Verdict (*Check)(const LinMap&, const LinMap&, int)>
void run(benchmark::State& state, const Interchange& m) {
  const int window = static_cast<int>(state.range(0));
  std::size_t instances = 0;
  for (auto _ : state) {
    const Verdict v = Check(m.lhs, m.rhs, window);
    if (!v.equal) state.SkipWithError("laws differ");
    instances = v.instances;
  }
  state.counters["labels"] = static_cast<double>(instances);
}

void InterchangeParallel(benchmark::State& s) { run<equalOnWindow>(s, interchange()); }
void InterchangeSerial(benchmark::State& s) { run<equalOnWindowSerial>(s, interchange()); }
void AssociativityParallel(benchmark::State& s) { run<equalOnWindow>(s, associativity()); }
void AssociativitySerial(benchmark::State& s) { run<equalOnWindowSerial>(s, associativity()); }

}  // namespace

BENCHMARK(InterchangeParallel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(InterchangeSerial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(AssociativityParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(AssociativitySerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
