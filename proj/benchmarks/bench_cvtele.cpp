#include <benchmark/benchmark.h>

#include <cvtele/channel.hpp>
#include <cvtele/fidelity.hpp>
#include <cvtele/nonclassicality.hpp>
#include <cvtele/numerics.hpp>
#include <cvtele/phase_space.hpp>
#include <cvtele/protocol.hpp>
#include <cvtele/states.hpp>
#include <cvtele/teleport.hpp>

namespace {

using namespace cvtele;

void gaussian_smooth_grid(benchmark::State& state) {
    const GridSpec spec{6.0, static_cast<std::size_t>(state.range(0))};
    const WignerGrid w = fock_wigner(2, spec);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_smooth(w, 0.25));
    state.SetComplexityN(state.range(0));
}

void teleport_fock_grid(benchmark::State& state) {
    const WignerGrid w = fock_wigner(3, GridSpec{});
    for (auto _ : state) benchmark::DoNotOptimize(teleport_state(w, 0.7));
}

void teleported_fock_closed_form(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(teleported_fock_wigner(3, 0.7, GridSpec{}));
}

void gauss_hermite_rule(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite(order));
}

// One receiver point of the brute-force protocol integral.
void protocol_point(benchmark::State& state) {
    const ProtocolOracle oracle(InputState::fock(1), two_mode_squeezed_vacuum(1.0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle({0.3, -0.2}));
}

void overlap_fidelity_grid(benchmark::State& state) {
    const WignerGrid w = squeezed_vacuum_wigner(0.5, GridSpec{});
    const WignerGrid r = teleport_state(w, 0.6);
    for (auto _ : state) benchmark::DoNotOptimize(overlap_fidelity(w, r));
}

void fock_fidelity_closed_form(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fock_fidelity(m, 0.8));
}

void photon_statistics(benchmark::State& state) {
    const WignerGrid w = teleport_state(fock_wigner(2, GridSpec{}), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(photon_stats(w));
}

void noise_factor_point(benchmark::State& state) {
    const ChannelParams p{1.0, 0.5, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(noise_factor(p));
}

}  // namespace

BENCHMARK(gaussian_smooth_grid)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(teleport_fock_grid)->Unit(benchmark::kMillisecond);
BENCHMARK(teleported_fock_closed_form)->Unit(benchmark::kMillisecond);
BENCHMARK(gauss_hermite_rule)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(protocol_point)->Unit(benchmark::kMillisecond);
BENCHMARK(overlap_fidelity_grid)->Unit(benchmark::kMicrosecond);
BENCHMARK(fock_fidelity_closed_form)->DenseRange(0, 5);
BENCHMARK(photon_statistics)->Unit(benchmark::kMicrosecond);
BENCHMARK(noise_factor_point);

BENCHMARK_MAIN();
