#ifndef HOSKIP_SIM_NETWORK_HPP
#define HOSKIP_SIM_NETWORK_HPP

#include "hoskip/core_model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hoskip::sim {

struct Point {
    double x{0.0};
    double y{0.0};
};

/// One draw of both tiers on the square [-side/2, side/2]^2 (km).
struct NetworkRealization {
    double window{0.0};
    std::vector<Point> macro;
    std::vector<Point> femto;
    std::uint64_t seed{0};

    const std::vector<Point>& tier(Tier t) const { return t == Tier::Macro ? macro : femto; }
};

/// 40 / sqrt(lambda_1 + lambda_2 min(1, (P2/P1)^{2/eta})) km.
double default_window(const NetworkParams& params);

/// 5 / sqrt(smallest positive intensity): the margin every consumer keeps
/// between the window edge and the points it evaluates.
double guard_margin(const NetworkParams& params);

/// Throws std::invalid_argument when the window cannot hold twice the guard.
NetworkRealization sample_network(const NetworkParams& params, double window, std::uint64_t seed);
NetworkRealization sample_network(const NetworkParams& params, double window, std::mt19937_64& rng);

}  // namespace hoskip::sim

#endif
