#include "nlsis/replicas.hpp"

#include "nlsis/rng.hpp"

#include <exception>
#include <mutex>

namespace nlsis {

void for_each_replica_parallel(std::size_t count, std::uint64_t master_seed, const ReplicaFn& fn)
{
#ifdef _OPENMP
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i), derive_replica_seed(master_seed, static_cast<std::uint64_t>(i)));
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
#else
    for_each_replica_serial(count, master_seed, fn);
#endif
}

}  // namespace nlsis
