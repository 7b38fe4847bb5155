#include <benchmark/benchmark.h>

#include "sympcp/sympcp.hpp"

using namespace sympcp;

namespace {
  PcpInstance classic() {
    auto a = binary_alphabet();
    return PcpInstance(a, {{a->parse("1"), a->parse("111")},
                           {a->parse("10111"), a->parse("10")},
                           {a->parse("10"), a->parse("0")}});
  }

  PcpInstance commuting_reduction() {
    auto ab = make_alphabet({"a", "b"});
    Presentation pres(ab, {{ab->parse("ab"), ab->parse("ba")}});
    return build_sympcp(pres, ab->parse("aab"), ab->parse("aba"));
  }
}  // namespace

static void BM_solve_classic(benchmark::State& state) {
  auto inst = classic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst, {}, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_solve_classic)->Arg(1)->Arg(4);

static void BM_solve_reduction(benchmark::State& state) {
  auto inst = commuting_reduction();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst, {40, 64, 1'000'000}));
  }
}
BENCHMARK(BM_solve_reduction);

static void BM_find_relation(benchmark::State& state) {
  auto a    = binary_alphabet();
  auto gens = build_gamma(PcpInstance(a, {{a->parse("00"), a->parse("0")}}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_relation(gens, {12, 64, 1'000'000}));
  }
}
BENCHMARK(BM_find_relation);
