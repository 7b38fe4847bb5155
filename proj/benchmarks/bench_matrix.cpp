#include <benchmark/benchmark.h>

#include <random>

#include "sympcp/sympcp.hpp"

using namespace sympcp;

static void BM_matrix_product(benchmark::State& state) {
  auto a    = binary_alphabet();
  auto inst = PcpInstance(a, {{a->parse("00"), a->parse("0")},
                              {a->parse("0"), a->parse("00")}});
  auto M    = build_matrices(inst);
  auto tags = generator_tags(inst.size());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, tags.size() - 1);
  std::vector<GenTag> seq(static_cast<std::size_t>(state.range(0)));
  for (auto& t : seq) {
    t = tags[pick(rng)];
  }
  for (auto _ : state) {
    Mat3 m = Mat3::identity();
    for (auto t : seq) {
      m = m * M.at(t);
    }
    benchmark::DoNotOptimize(matrix_to_pair(m));
  }
}
BENCHMARK(BM_matrix_product)->Arg(8)->Arg(64)->Arg(512);

static void BM_embedding(benchmark::State& state) {
  auto a    = binary_alphabet();
  auto inst = PcpInstance(a, {{a->parse("1"), a->parse("111")},
                              {a->parse("10111"), a->parse("10")}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_embedding(inst, 100, 8, 1));
  }
}
BENCHMARK(BM_embedding);
