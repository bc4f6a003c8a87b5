#include <benchmark/benchmark.h>

#include "mcw/catalog.hpp"
#include "mcw/group_ops.hpp"
#include "mcw/verbal.hpp"
#include "mcw/word_ops.hpp"

using namespace mcw;

namespace {

void bench_stabilizer_chain_s8(benchmark::State& state) {
  std::vector<Permutation> gens = parse_perm_list(8, "(1 2); (1 2 3 4 5 6 7 8)");
  for (auto _ : state) {
    PermGroup g(8, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bench_stabilizer_chain_s8);

void bench_w_values_gamma3_s4(benchmark::State& state) {
  PermGroup s4 = symmetric_group(4);
  WordTree w = lower_central_word(3);
  for (auto _ : state) {
    ValueSet vs = w_values(s4, w);
    benchmark::DoNotOptimize(vs.elements.size());
  }
}
BENCHMARK(bench_w_values_gamma3_s4);

void bench_subgroup_lattice_s4(benchmark::State& state) {
  PermGroup s4 = symmetric_group(4);
  for (auto _ : state) {
    std::vector<PermGroup> lattice = subgroup_lattice(s4);
    benchmark::DoNotOptimize(lattice.size());
  }
}
BENCHMARK(bench_subgroup_lattice_s4);

void bench_min_generators_sl23(benchmark::State& state) {
  PermGroup sl = sl23_group();
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_generators(sl));
  }
}
BENCHMARK(bench_min_generators_sl23);

void bench_all_sections_delta3(benchmark::State& state) {
  WordTree d3 = derived_word(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_sections(d3).size());
  }
}
BENCHMARK(bench_all_sections_delta3);

}  // namespace

BENCHMARK_MAIN();
