#include "nlsis/replicas.hpp"

#include "nlsis/rng.hpp"

namespace nlsis {

void for_each_replica_serial(std::size_t count, std::uint64_t master_seed, const ReplicaFn& fn)
{
    for (std::size_t i = 0; i < count; ++i)
        fn(i, derive_replica_seed(master_seed, i));
}

}  // namespace nlsis
