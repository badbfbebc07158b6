// Serial reference loop vs OpenMP loop over Monte Carlo replicas.

#include "nlsis/estimator.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace nlsis;

namespace {

template <typename F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void compare(const char* label, const auto& run)
{
    std::vector<SurvivalOutcome> serial, parallel;
    const double ts = seconds([&] { serial = run(Execution::serial); });
    const double tp = seconds([&] { parallel = run(Execution::parallel); });
    std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical=%s\n", label, ts, tp, ts / tp,
                serial == parallel ? "yes" : "NO");
    if (serial != parallel)
        std::exit(1);
}

}  // namespace

int main(int argc, char** argv)
{
    const std::size_t runs = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    const McConfig mc{runs, 1e4, 10'000'000, 42, 0.95};

    compare("clique n=64 lambda=1/64", [&](Execution e) {
        return run_replicas(CliqueChain{64}, ProcessParams(1.0 / 64, 0.0), CliqueState{1}, mc, Engine::gillespie, e);
    });
    compare("star n=256 lambda=0.01", [&](Execution e) {
        return run_replicas(StarChain{256}, ProcessParams(0.01, 1.0), StarState{0, true}, mc, Engine::gillespie, e);
    });
    const Topology k32 = Topology::clique(32);
    const std::size_t first = 0;
    const GeneralState init = GeneralState::from_infected(k32, std::span<const std::size_t>(&first, 1));
    compare("general K_32 lambda=0.5/32", [&](Execution e) {
        return run_replicas(k32, ProcessParams(0.5 / 32, 0.5), init, mc, e);
    });
    compare("clique levelwise n=512", [&](Execution e) {
        return run_replicas(CliqueChain{512}, ProcessParams(1e-5, 1.0), CliqueState{1}, mc, Engine::exact_fast, e);
    });
    return 0;
}
