/// Microbenchmarks for the core primitives, full protocol runs, and the
/// strategy search.

#include <benchmark/benchmark.h>

#include "p2sim/adversary.hpp"
#include "p2sim/bitstring.hpp"
#include "p2sim/network.hpp"
#include "p2sim/rng.hpp"
#include "p2sim/search.hpp"

namespace {

using namespace p2sim;

void BM_MaskAndVerify(benchmark::State& state) {
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  BitSource bits(42);
  const BitString key = BitString::random(length, bits);
  const BitString mask_bits = BitString::random(length, bits);
  const BitString signature = BitString::random(length, bits);
  for (auto _ : state) {
    const PartialKey partial = mask(key, mask_bits);
    benchmark::DoNotOptimize(verify_partial(signature, partial));
  }
}
BENCHMARK(BM_MaskAndVerify)->Arg(8)->Arg(64)->Arg(256);

void BM_HonestRun(benchmark::State& state) {
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  const ProtocolInstance instance = sampled_instance(length, 7, 0);
  const Scenario scenario = Scenario::honest();
  RunOptions options;
  options.record_transcript = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_scenario(scenario, instance, options));
}
BENCHMARK(BM_HonestRun)->Arg(8)->Arg(64)->Arg(256);

void BM_AttackRun(benchmark::State& state) {
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  const ProtocolInstance instance = sampled_instance(length, 7, 0);
  const Scenario scenario = Scenario::attack(Principal::Bob);
  RunOptions options;
  options.record_transcript = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_scenario(scenario, instance, options));
}
BENCHMARK(BM_AttackRun)->Arg(8)->Arg(64)->Arg(256);

void BM_AttackRunWithTranscript(benchmark::State& state) {
  const ProtocolInstance instance = sampled_instance(64, 7, 0);
  const Scenario scenario = Scenario::attack(Principal::Bob);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_scenario(scenario, instance));
}
BENCHMARK(BM_AttackRunWithTranscript);

void BM_CheckStrategyExhaustive(benchmark::State& state) {
  const AttackerStrategy strategy = mitm_strategy();
  const InstanceSet grid = InstanceSet::exhaustive(1);
  const VerificationPolicy policy = VerificationPolicy::exact_match();
  for (auto _ : state)
    benchmark::DoNotOptimize(check_strategy(
        strategy, SecurityGoal::TransferabilityViolation, grid, policy));
}
BENCHMARK(BM_CheckStrategyExhaustive);

void BM_FullSearch(benchmark::State& state) {
  const VerificationPolicy policy = VerificationPolicy::exact_match();
  for (auto _ : state)
    benchmark::DoNotOptimize(search(SecurityGoal::TransferabilityViolation, 1,
                                    policy, full_alphabet()));
}
BENCHMARK(BM_FullSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
