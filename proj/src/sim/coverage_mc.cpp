#include "hoskip/sim/coverage_mc.hpp"

#include "hoskip/sim/network.hpp"
#include "hoskip/sim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hoskip::sim {

double EmpiricalCoverage::fraction(std::size_t i) const
{
    return samples == 0 ? 0.0 : static_cast<double>(hits.at(i)) / static_cast<double>(samples);
}

double EmpiricalCoverage::std_error(std::size_t i) const
{
    if (samples == 0)
        return 0.0;
    const double p = fraction(i);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

std::pair<double, double> EmpiricalCoverage::confidence_interval(std::size_t i) const
{
    if (samples == 0)
        return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(samples);
    const double p = fraction(i);
    const double denom = 1.0 + z * z / n;
    const double centre = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double EmpiricalCoverage::phase_fraction(Phase p) const
{
    return samples == 0 ? 0.0 : static_cast<double>(phase_count(p)) / static_cast<double>(samples);
}

double EmpiricalCoverage::conditional(std::size_t i, Phase p) const
{
    const long n = phase_count(p);
    if (n == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(phase_hits.at(i)[static_cast<std::size_t>(p)]) / static_cast<double>(n);
}

double EmpiricalCoverage::conditional_std_error(std::size_t i, Phase p) const
{
    const long n = phase_count(p);
    if (n == 0)
        return std::numeric_limits<double>::quiet_NaN();
    const double q = conditional(i, p);
    return std::sqrt(q * (1.0 - q) / static_cast<double>(n));
}

std::vector<EmpiricalCoverage> empirical_coverage(const NetworkParams& params, const std::vector<Combo>& combos,
                                                  const std::vector<double>& thresholds, const McOptions& opt)
{
    params.validate();
    if (opt.samples < 1000)
        throw std::invalid_argument("at least 1000 Monte Carlo samples are required");
    if (thresholds.empty())
        throw std::invalid_argument("threshold grid is empty");
    const double window = opt.window > 0.0 ? opt.window : default_window(params);

    std::vector<EmpiricalCoverage> out(combos.size());
    for (std::size_t c = 0; c < combos.size(); ++c) {
        out[c].strategy = combos[c].strategy;
        out[c].ic = combos[c].strategy == Strategy::BC ? false : combos[c].ic;
        out[c].thresholds = thresholds;
        out[c].hits.assign(thresholds.size(), 0);
        out[c].phase_hits.assign(thresholds.size(), {});
    }

    for (long i = 0; i < opt.samples; ++i) {
        std::mt19937_64 rng = make_stream(opt.seed, static_cast<std::uint64_t>(i));
        const NetworkRealization net = sample_network(params, window, rng);
        const auto sinrs = stationary_sinr_all(net, params, combos, rng, opt.sinr);
        for (std::size_t c = 0; c < combos.size(); ++c) {
            EmpiricalCoverage& e = out[c];
            if (!sinrs[c]) {
                ++e.rejected;
                continue;
            }
            const auto ph = static_cast<std::size_t>(sinrs[c]->phase);
            ++e.samples;
            ++e.phase_samples[ph];
            for (std::size_t t = 0; t < thresholds.size(); ++t)
                if (sinrs[c]->sinr > thresholds[t]) {
                    ++e.hits[t];
                    ++e.phase_hits[t][ph];
                }
        }
    }
    return out;
}

EmpiricalCoverage empirical_coverage(const NetworkParams& params, Strategy strategy,
                                     const std::vector<double>& thresholds, bool ic, const McOptions& opt)
{
    return empirical_coverage(params, {{strategy, ic}}, thresholds, opt).front();
}

}  // namespace hoskip::sim
