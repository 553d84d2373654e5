#include <benchmark/benchmark.h>

#include <random>

#include "netgalois/howell.hpp"
#include "netgalois/nets.hpp"

using namespace netgalois;

namespace {

std::shared_ptr<const GaloisContext> context(std::uint32_t p, std::uint32_t k) {
  return GaloisContext::build(k == 1 ? Ring::prime_field(p) : Ring::chain(p, k), 2);
}

void BM_HowellForm(benchmark::State& state) {
  const Ring r = Ring::chain(7, 2);
  std::mt19937 rng(1);
  auto entry = [&] { return static_cast<std::uint32_t>(rng() % 49); };
  std::vector<std::vector<Vec>> inputs(256);
  for (auto& rows : inputs)
    for (int i = 0; i < 3; ++i) rows.push_back(Vec{entry(), entry(), entry(), 0});
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(howell_form(r, 3, inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_HowellForm);

void BM_SubgroupClosure(benchmark::State& state) {
  const auto ctx = context(7, static_cast<std::uint32_t>(state.range(0)));
  Matrix u = identity_matrix(2);
  u(0, 1) = 1;
  const GIndex gen[] = {ctx->group().index_of(u)};
  for (auto _ : state) benchmark::DoNotOptimize(extend_subgroup(ctx->group(), ctx->H(), gen).order());
}
BENCHMARK(BM_SubgroupClosure)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SupportAllElements(benchmark::State& state) {
  const auto ctx = context(7, 2);
  const Frame& f = ctx->frame();
  for (auto _ : state)
    for (Elem x = 0; x < ctx->lattice().size(); ++x) benchmark::DoNotOptimize(f.support(x));
}
BENCHMARK(BM_SupportAllElements);

void BM_SigmaOfBorel(benchmark::State& state) {
  const auto ctx = context(7, static_cast<std::uint32_t>(state.range(0)));
  Matrix u = identity_matrix(2);
  u(0, 1) = 1;
  const GIndex gen[] = {ctx->group().index_of(u)};
  const Subgroup b = extend_subgroup(ctx->group(), ctx->H(), gen);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_of(*ctx, b, TransvectionMode::Quick));
}
BENCHMARK(BM_SigmaOfBorel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
