#ifndef HOSKIP_SIM_ORDER_STATS_HPP
#define HOSKIP_SIM_ORDER_STATS_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/sim/network.hpp"

#include <cstddef>
#include <vector>

namespace hoskip::sim {

/// The `n_points` smallest values of d^eta / P_k seen from the window centre,
/// ascending. Fewer are returned when the realization is smaller.
std::vector<double> mapped_order_statistics(const NetworkRealization& realization, const NetworkParams& params,
                                            std::size_t n_points);

}  // namespace hoskip::sim

#endif
