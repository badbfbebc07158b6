#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace nlsis {

enum class Execution { serial, parallel };

/// Called once per replica with its index and derived seed. The callable
/// must only write to per-index storage.
using ReplicaFn = std::function<void(std::size_t index, std::uint64_t seed)>;

/// Reference loop, replicas in index order.
void for_each_replica_serial(std::size_t count, std::uint64_t master_seed, const ReplicaFn& fn);

/// OpenMP loop over replicas. Falls back to the serial loop when the library
/// is built without OpenMP. The first exception thrown by any replica is
/// rethrown after the loop.
void for_each_replica_parallel(std::size_t count, std::uint64_t master_seed, const ReplicaFn& fn);

inline void for_each_replica(std::size_t count, std::uint64_t master_seed, const ReplicaFn& fn, Execution execution)
{
    if (execution == Execution::parallel)
        for_each_replica_parallel(count, master_seed, fn);
    else
        for_each_replica_serial(count, master_seed, fn);
}

}  // namespace nlsis
