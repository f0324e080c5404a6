#ifndef HOSKIP_CLI_RUNNER_HPP
#define HOSKIP_CLI_RUNNER_HPP

#include "hoskip/cli/config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hoskip::cli {

struct SweepRow {
    Strategy strategy{Strategy::BC};
    bool ic{false};
    double theta_db{0.0};
    double velocity_kmh{0.0};
    double femto_delay_s{0.0};
    double coverage_analytic{0.0};
    double coverage_error{0.0};
    bool converged{true};
    std::optional<double> coverage_mc;
    double mc_ci_low{0.0};
    double mc_ci_high{0.0};
    double mc_std_error{0.0};
    bool mc_ok{true};
    double d_ho{0.0};
    bool ho_infeasible{false};
    double rate{0.0};
    double throughput{0.0};
    std::optional<double> expected_rate;
    bool rate_ok{true};

    bool ok() const { return converged && mc_ok && rate_ok; }
};

struct SweepResult {
    std::string config_hash;
    std::vector<SweepRow> rows;

    bool any_failure() const;
};

/// Every (strategy, ic, theta, femto delay, velocity) combination; BC appears
/// once regardless of the IC flags.
SweepResult run(const RunConfig& cfg);

void write_csv(std::ostream& os, const SweepResult& result);
void write_json(std::ostream& os, const SweepResult& result);

struct Check {
    std::string name;
    bool passed{false};
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Invariant suite on the configured network. Monte Carlo checks use
/// cfg.mc_samples, or 20000 when that is 0.
ValidationReport validate(const RunConfig& cfg);

}  // namespace hoskip::cli

#endif
