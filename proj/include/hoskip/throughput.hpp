#ifndef HOSKIP_THROUGHPUT_HPP
#define HOSKIP_THROUGHPUT_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/coverage.hpp"
#include "hoskip/handover_cost.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace hoskip {

struct ThroughputResult {
    Strategy strategy{Strategy::BC};
    bool ic{false};
    double velocity_kmh{0.0};
    double coverage{0.0};
    /// nats/s/Hz
    double achievable_rate{0.0};
    HandoverCost handover;
    /// W * R * (1 - D_HO), in nats/s.
    double average_throughput{0.0};
};

/// ln(1 + theta) * coverage at threshold theta (linear).
double achievable_rate(Strategy strategy, const NetworkParams& params, double theta, bool ic,
                       const CoverageOptions& opt = {});

ThroughputResult average_throughput(Strategy strategy, const NetworkParams& params, const MobilityProfile& mobility,
                                    double bandwidth_hz, double theta, bool ic, const CoverageOptions& opt = {});

/// Memoizes overall coverage by (strategy, theta, ic) for one parameter set,
/// so velocity sweeps evaluate each integral once. Thread-safe.
class CoverageCache {
public:
    explicit CoverageCache(NetworkParams params, CoverageOptions opt = {});

    const NetworkParams& params() const { return params_; }
    const CoverageResult& get(Strategy strategy, double theta, bool ic);

    ThroughputResult throughput(Strategy strategy, const MobilityProfile& mobility, double bandwidth_hz,
                                double theta, bool ic);

private:
    NetworkParams params_;
    CoverageOptions opt_;
    std::mutex mu_;
    std::map<std::tuple<int, double, bool>, CoverageResult> cache_;
};

struct BestStrategyRow {
    double velocity_kmh{0.0};
    Strategy best{Strategy::BC};
    /// Indexed like kAllStrategies.
    std::vector<ThroughputResult> all;
};

/// Highest average throughput per velocity. Each mobility profile supplies a
/// velocity and delays.
std::vector<BestStrategyRow> best_strategy(CoverageCache& cache, const std::vector<MobilityProfile>& mobility,
                                           double bandwidth_hz, double theta, bool ic);

}  // namespace hoskip

#endif
