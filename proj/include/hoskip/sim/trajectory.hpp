#ifndef HOSKIP_SIM_TRAJECTORY_HPP
#define HOSKIP_SIM_TRAJECTORY_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/sim/network.hpp"

#include <array>
#include <random>
#include <vector>

namespace hoskip::sim {

/// Straight constant-velocity path.
struct Trajectory {
    Point start;
    double heading{0.0};  // radians
    double length_km{0.0};
    double velocity_kmh{0.0};

    Point at(double s_km) const;
    double duration_s() const { return length_km / (velocity_kmh / 3600.0); }
};

/// A stretch of path inside one cell.
struct CellVisit {
    int site{-1};  // index into realization.macro, or femto offset by macro.size()
    Tier tier{Tier::Macro};
    double enter_km{0.0};
    double exit_km{0.0};
};

struct TrajectoryStats {
    /// Cell-boundary crossings of the strongest-BS tessellation, [from][to],
    /// 0 = macro, 1 = femto. Strategy independent.
    std::array<std::array<long, 2>, 2> crossings{};
    /// Handovers the strategy executes, typed by serving tiers.
    std::array<std::array<long, 2>, 2> handovers{};
    /// Path fraction spent in each phase, indexed by Phase.
    std::array<double, 4> occupancy{};
    double length_km{0.0};
    double duration_s{0.0};

    long total_handovers() const;
    long total_crossings() const;
};

/// Exact cells crossed along the path, found by solving for each boundary
/// crossing rather than sampling positions. `macro_only` ignores femtos.
/// Throws std::invalid_argument if the path leaves the guard-reduced window.
std::vector<CellVisit> cell_sequence(const NetworkRealization& realization, const NetworkParams& params,
                                     const Trajectory& trajectory, bool macro_only = false);

TrajectoryStats simulate_trajectory(const NetworkRealization& realization, const NetworkParams& params,
                                    const Trajectory& trajectory, Strategy strategy);

/// Window side that fits a centred path of `length_km` plus the guard on both ends.
double trajectory_window(const NetworkParams& params, double length_km);

/// Path of `length_km` through the window centre with a uniform heading.
Trajectory random_trajectory(double length_km, double velocity_kmh, std::mt19937_64& rng);

}  // namespace hoskip::sim

#endif
