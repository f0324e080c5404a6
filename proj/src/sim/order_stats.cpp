#include "hoskip/sim/order_stats.hpp"

#include <algorithm>
#include <cmath>

namespace hoskip::sim {

std::vector<double> mapped_order_statistics(const NetworkRealization& realization, const NetworkParams& params,
                                            std::size_t n_points)
{
    const double half_eta = params.path_loss_exponent / 2.0;
    std::vector<double> y;
    y.reserve(realization.macro.size() + realization.femto.size());
    for (Tier t : {Tier::Macro, Tier::Femto}) {
        const double tx = params.tier(t).tx_power;
        for (const Point& p : realization.tier(t))
            y.push_back(std::pow(p.x * p.x + p.y * p.y, half_eta) / tx);
    }
    const std::size_t k = std::min(n_points, y.size());
    std::partial_sort(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
    y.resize(k);
    return y;
}

}  // namespace hoskip::sim
