#ifndef HOSKIP_SIM_COVERAGE_MC_HPP
#define HOSKIP_SIM_COVERAGE_MC_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/sim/sinr.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace hoskip::sim {

struct McOptions {
    long samples{100000};
    std::uint64_t seed{1};
    /// Window side in km; 0 picks default_window().
    double window{0.0};
    SinrOptions sinr{};
};

/// Hit counts of one (strategy, ic) combo over a threshold grid.
struct EmpiricalCoverage {
    Strategy strategy{Strategy::BC};
    bool ic{false};
    std::vector<double> thresholds;  // linear
    std::vector<long> hits;
    long samples{0};
    long rejected{0};
    std::array<long, 4> phase_samples{};
    std::vector<std::array<long, 4>> phase_hits;

    double fraction(std::size_t i) const;
    /// sqrt(p (1 - p) / n)
    double std_error(std::size_t i) const;
    /// 95% Wilson score interval.
    std::pair<double, double> confidence_interval(std::size_t i) const;

    long phase_count(Phase p) const { return phase_samples[static_cast<std::size_t>(p)]; }
    double phase_fraction(Phase p) const;
    /// Coverage among samples that landed in `p`; NaN when none did.
    double conditional(std::size_t i, Phase p) const;
    double conditional_std_error(std::size_t i, Phase p) const;
};

/// One fresh realization and fading draw per sample, shared by all combos.
/// Sample i uses stream (seed, i), so results do not depend on batching.
/// Throws std::invalid_argument for fewer than 1000 samples.
std::vector<EmpiricalCoverage> empirical_coverage(const NetworkParams& params, const std::vector<Combo>& combos,
                                                  const std::vector<double>& thresholds, const McOptions& opt);

EmpiricalCoverage empirical_coverage(const NetworkParams& params, Strategy strategy,
                                     const std::vector<double>& thresholds, bool ic, const McOptions& opt);

}  // namespace hoskip::sim

#endif
