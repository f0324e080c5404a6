#include "hoskip/throughput.hpp"

#include <cmath>
#include <stdexcept>

namespace hoskip {

namespace {

ThroughputResult assemble(Strategy strategy, const NetworkParams& params, const MobilityProfile& mobility,
                          double bandwidth_hz, double theta, bool ic, double cov)
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    ThroughputResult r;
    r.strategy = strategy;
    r.ic = strategy == Strategy::BC ? false : ic;
    r.velocity_kmh = mobility.velocity_kmh;
    r.coverage = cov;
    r.achievable_rate = std::log1p(theta) * cov;
    r.handover = handover_cost(strategy, params, mobility);
    r.average_throughput = bandwidth_hz * r.achievable_rate * (1.0 - r.handover.value);
    return r;
}

}  // namespace

double achievable_rate(Strategy strategy, const NetworkParams& params, double theta, bool ic,
                       const CoverageOptions& opt)
{
    if (!(theta >= 0.0))
        throw std::domain_error("threshold must be non-negative");
    if (theta == 0.0)
        return 0.0;
    const CoverageResult c = coverage(strategy, params, theta, ic, opt);
    if (!c.converged)
        throw std::runtime_error("coverage integration did not converge");
    return std::log1p(theta) * c.value;
}

ThroughputResult average_throughput(Strategy strategy, const NetworkParams& params, const MobilityProfile& mobility,
                                    double bandwidth_hz, double theta, bool ic, const CoverageOptions& opt)
{
    const double cov = theta == 0.0 ? 1.0 : coverage(strategy, params, theta, ic, opt).value;
    return assemble(strategy, params, mobility, bandwidth_hz, theta, ic, cov);
}

CoverageCache::CoverageCache(NetworkParams params, CoverageOptions opt) : params_(params), opt_(std::move(opt))
{
    params_.validate();
}

const CoverageResult& CoverageCache::get(Strategy strategy, double theta, bool ic)
{
    // BC has no IC variant; fold both flags onto one entry.
    const auto key = std::make_tuple(static_cast<int>(strategy), theta, strategy == Strategy::BC ? false : ic);
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    CoverageResult c = coverage(strategy, params_, theta, ic, opt_);
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(c)).first->second;
}

ThroughputResult CoverageCache::throughput(Strategy strategy, const MobilityProfile& mobility, double bandwidth_hz,
                                           double theta, bool ic)
{
    const double cov = theta == 0.0 ? 1.0 : get(strategy, theta, ic).value;
    return assemble(strategy, params_, mobility, bandwidth_hz, theta, ic, cov);
}

std::vector<BestStrategyRow> best_strategy(CoverageCache& cache, const std::vector<MobilityProfile>& mobility,
                                           double bandwidth_hz, double theta, bool ic)
{
    std::vector<BestStrategyRow> rows;
    rows.reserve(mobility.size());
    for (const MobilityProfile& m : mobility) {
        BestStrategyRow row;
        row.velocity_kmh = m.velocity_kmh;
        double best = -1.0;
        for (Strategy s : kAllStrategies) {
            row.all.push_back(cache.throughput(s, m, bandwidth_hz, theta, ic));
            // Ties keep the earlier strategy.
            if (row.all.back().average_throughput > best) {
                best = row.all.back().average_throughput;
                row.best = s;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hoskip
