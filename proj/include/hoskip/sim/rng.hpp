#ifndef HOSKIP_SIM_RNG_HPP
#define HOSKIP_SIM_RNG_HPP

#include <cstdint>
#include <random>

namespace hoskip::sim {

/// One round of the splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for sub-stream `index` of `master`. Streams depend only on the pair,
/// never on how many other streams were drawn.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t index);

}  // namespace hoskip::sim

#endif
