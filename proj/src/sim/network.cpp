#include "hoskip/sim/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hoskip::sim {

namespace {

void fill_tier(std::vector<Point>& out, double intensity, double side, std::mt19937_64& rng)
{
    out.clear();
    if (intensity == 0.0)
        return;
    std::poisson_distribution<long> count(intensity * side * side);
    std::uniform_real_distribution<double> coord(-0.5 * side, 0.5 * side);
    const long n = count(rng);
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        out.push_back({x, y});
    }
}

}  // namespace

double default_window(const NetworkParams& params)
{
    params.validate();
    const double ratio = std::pow(params.femto.tx_power / params.macro.tx_power, params.delta());
    const double density = params.macro.intensity + params.femto.intensity * std::min(1.0, ratio);
    if (!(density > 0.0))
        throw std::domain_error("window undefined with both tiers empty");
    return 40.0 / std::sqrt(density);
}

double guard_margin(const NetworkParams& params)
{
    double lmin = std::numeric_limits<double>::infinity();
    for (double l : {params.macro.intensity, params.femto.intensity})
        if (l > 0.0)
            lmin = std::min(lmin, l);
    if (!std::isfinite(lmin))
        throw std::domain_error("guard margin undefined with both tiers empty");
    return 5.0 / std::sqrt(lmin);
}

NetworkRealization sample_network(const NetworkParams& params, double window, std::mt19937_64& rng)
{
    params.validate();
    if (!(window >= 2.0 * guard_margin(params)))
        throw std::invalid_argument("window too small for the guard margin");
    NetworkRealization r;
    r.window = window;
    fill_tier(r.macro, params.macro.intensity, window, rng);
    fill_tier(r.femto, params.femto.intensity, window, rng);
    return r;
}

NetworkRealization sample_network(const NetworkParams& params, double window, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    NetworkRealization r = sample_network(params, window, rng);
    r.seed = seed;
    return r;
}

}  // namespace hoskip::sim
