#ifndef HOSKIP_HANDOVER_COST_HPP
#define HOSKIP_HANDOVER_COST_HPP

#include "hoskip/core_model.hpp"

namespace hoskip {

/// Handovers per second, indexed [from tier][to tier] with 0 = macro, 1 = femto.
struct HandoverRates {
    double h[2][2]{{0.0, 0.0}, {0.0, 0.0}};

    double operator()(Tier from, Tier to) const
    {
        return h[from == Tier::Macro ? 0 : 1][to == Tier::Macro ? 0 : 1];
    }
};

struct HandoverCost {
    /// Fraction of time lost to handover signalling, clamped to [0, 1].
    double value{0.0};
    /// Unclamped value; above 1 means the user would never leave handover.
    double raw{0.0};
    bool infeasible{false};
};

/// (1/x^2) int_0^pi sqrt(x^2 + 1 - 2x cos t) dt. Throws std::domain_error for x <= 0.
double boundary_shape_factor(double x);

/// Expected length of cell boundary between tier-i and tier-j cells per unit
/// area (km^-1). Symmetric in (i, j).
double boundary_length_density(const NetworkParams& params, Tier i, Tier j);

/// Boundary crossings per second along a straight path at `velocity_kmh`.
HandoverRates handover_rates(const NetworkParams& params, double velocity_kmh);

/// Fraction of time spent in handover under `strategy`.
HandoverCost handover_cost(Strategy strategy, const NetworkParams& params, const MobilityProfile& mobility);

}  // namespace hoskip

#endif
