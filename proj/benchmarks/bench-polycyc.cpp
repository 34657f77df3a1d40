#include <benchmark/benchmark.h>

#include "polycyc/congruence.hpp"
#include "polycyc/element.hpp"
#include "polycyc/rewrite.hpp"
#include "polycyc/solver.hpp"

using namespace polycyc;

namespace {

  Word long_word(std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      w = concat(w, Word{i % 3 == 0 ? 1u : 0u});
    }
    return w;
  }

  void bm_multiply(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Element    x(long_word(n), long_word(2 * n));
    Element    y(long_word(n), long_word(n / 2));
    for (auto _ : state) {
      benchmark::DoNotOptimize(multiply(x, y));
    }
  }
  BENCHMARK(bm_multiply)->Range(4, 1024);

  void bm_reduce(benchmark::State& state) {
    // p_w p_w' cancels all the way down to the empty word.
    GenWord    w;
    auto const n = state.range(0) / 2;
    for (std::int64_t i = 0; i < n; ++i) {
      w.push_back(pos(static_cast<letter_type>(i % 2)));
    }
    for (std::int64_t i = n - 1; i >= 0; --i) {
      w.push_back(inv(static_cast<letter_type>(i % 2)));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(reduce(w));
    }
  }
  BENCHMARK(bm_reduce)->Range(8, 4096);

  void bm_solve_right(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Element    alpha(Word{0}, repeat(Word{0, 1}, n));
    Element    beta(Word{0}, repeat(Word{0, 1}, 2 * n));
    for (auto _ : state) {
      benchmark::DoNotOptimize(solve_right(alpha, beta));
    }
  }
  BENCHMARK(bm_solve_right)->Range(2, 256);

  void bm_collapse_and_verify(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Element    x(long_word(n), long_word(n + 1));
    Element    y(long_word(n + 2), long_word(n));
    for (auto _ : state) {
      auto const t = derive_collapse(x, y);
      benchmark::DoNotOptimize(verify_trace(t).ok);
    }
  }
  BENCHMARK(bm_collapse_and_verify)->Range(2, 256);

}  // namespace

BENCHMARK_MAIN();
