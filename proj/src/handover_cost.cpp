#include "hoskip/handover_cost.hpp"

#include "hoskip/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoskip {

namespace {

int index(Tier t) { return t == Tier::Macro ? 0 : 1; }

// (P_n / P_i)^{1/eta}
double power_ratio(const NetworkParams& p, Tier n, Tier i)
{
    return std::pow(p.tier(n).tx_power / p.tier(i).tx_power, 1.0 / p.path_loss_exponent);
}

// (sum_n lambda_n x_ni^2)^{3/2}
double cell_scale(const NetworkParams& p, Tier i)
{
    double s = 0.0;
    for (Tier n : {Tier::Macro, Tier::Femto}) {
        const double x = power_ratio(p, n, i);
        s += p.tier(n).intensity * x * x;
    }
    return std::pow(s, 1.5);
}

}  // namespace

double boundary_shape_factor(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("shape factor needs a positive ratio");
    if (x == 1.0)
        return 4.0;
    IntegrationConfig cfg;
    cfg.rel_tol = 1e-12;
    const Fn1 f = [x](double t) { return std::sqrt(x * x + 1.0 - 2.0 * x * std::cos(t)); };
    return integrate_1d(f, 0.0, std::numbers::pi, cfg).value / (x * x);
}

double boundary_length_density(const NetworkParams& params, Tier i, Tier j)
{
    params.validate();
    const double li = params.tier(i).intensity;
    const double lj = params.tier(j).intensity;
    if (li == 0.0 || lj == 0.0)
        return 0.0;
    if (i == j)
        return li * li * boundary_shape_factor(1.0) / (2.0 * cell_scale(params, i));
    return li * lj * boundary_shape_factor(power_ratio(params, i, j)) / (2.0 * cell_scale(params, i)) +
           li * lj * boundary_shape_factor(power_ratio(params, j, i)) / (2.0 * cell_scale(params, j));
}

HandoverRates handover_rates(const NetworkParams& params, double velocity_kmh)
{
    if (!(velocity_kmh >= 0.0))
        throw std::invalid_argument("velocity must be non-negative");
    const double v = velocity_kmh / 3600.0;
    HandoverRates r;
    for (Tier i : {Tier::Macro, Tier::Femto})
        for (Tier j : {Tier::Macro, Tier::Femto}) {
            const double factor = i == j ? 2.0 : 1.0;
            r.h[index(i)][index(j)] = factor * v / std::numbers::pi * boundary_length_density(params, i, j);
        }
    return r;
}

HandoverCost handover_cost(Strategy strategy, const NetworkParams& params, const MobilityProfile& mobility)
{
    mobility.validate();
    const HandoverRates h = handover_rates(params, mobility.velocity_kmh);
    const double dm = mobility.macro_ho_delay_s;
    const double df = mobility.femto_ho_delay_s;
    const double h11 = h(Tier::Macro, Tier::Macro);
    const double femto_related = h(Tier::Macro, Tier::Femto) + h(Tier::Femto, Tier::Macro) + h(Tier::Femto, Tier::Femto);

    HandoverCost c;
    switch (strategy) {
    case Strategy::BC: c.raw = h11 * dm + femto_related * df; break;
    case Strategy::FS: c.raw = h11 * dm + 0.5 * femto_related * df; break;
    case Strategy::FD: c.raw = h11 * dm; break;
    case Strategy::MS: c.raw = 0.5 * h11 * dm; break;
    }
    c.infeasible = c.raw > 1.0;
    c.value = std::min(c.raw, 1.0);
    return c;
}

}  // namespace hoskip
