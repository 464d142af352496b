#include <benchmark/benchmark.h>

#include "spanvk/bicolim.hpp"
#include "spanvk/gallery.hpp"

using namespace spanvk;

namespace {

const BaseCat Set = BaseCat::finsets();

Morphism surjection(std::size_t n, std::size_t m) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i % m);
  return Set.morphism(FinFn(FinSet::numbered(n), FinSet::numbered(m), img));
}

void BM_chosen_pullback(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto f = surjection(n, 3), g = surjection(n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(Set.chosen_pullback(f, g));
}
BENCHMARK(BM_chosen_pullback)->Arg(4)->Arg(16)->Arg(64);

void BM_compose_spans(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto s = graph(Set, surjection(n, 3));
  Span t{surjection(n, 3), surjection(n, 2)};
  for (auto _ : st) benchmark::DoNotOptimize(compose_spans(Set, t, s));
}
BENCHMARK(BM_compose_spans)->Arg(4)->Arg(16)->Arg(64);

void BM_is_vk_bounded_coproduct(benchmark::State& st) {
  auto b = static_cast<std::size_t>(st.range(0));
  auto k = coproduct_cocone(Set, Set.object(FinSet{"a"}), Set.object(FinSet{"b", "c"}));
  for (auto _ : st) benchmark::DoNotOptimize(is_vk_bounded(k, b, b));
}
BENCHMARK(BM_is_vk_bounded_coproduct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_barr_kock(benchmark::State& st) {
  auto p = surjection(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(barr_kock_check(Set, p));
}
BENCHMARK(BM_barr_kock)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_verify_bicolimit_mono_pushout(benchmark::State& st) {
  FinSet a{"a"}, b{"a", "b"}, c{"a", "c"};
  auto f = Set.morphism(FinFn(a, b, {0}));
  auto g = Set.morphism(FinFn(a, c, {0}));
  auto po = Set.pushout(f, g);
  auto k = square_cocone(Set, f, g, po.inB, po.inC);
  for (auto _ : st) benchmark::DoNotOptimize(verify_bicolimit_bounded(k));
}
BENCHMARK(BM_verify_bicolimit_mono_pushout)->Unit(benchmark::kMillisecond);

void BM_counterexample(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_counterexample_sp());
}
BENCHMARK(BM_counterexample)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
