#ifndef HOSKIP_CLI_CONFIG_HPP
#define HOSKIP_CLI_CONFIG_HPP

#include "hoskip/core_model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoskip::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    NetworkParams network{reference_network()};
    std::vector<double> theta_db{6.0};
    std::vector<double> velocities_kmh{0.0};
    double macro_ho_delay_s{0.35};
    std::vector<double> femto_ho_delays_s{0.7};
    double bandwidth_hz{10e6};
    std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
    std::vector<bool> ic_flags{false, true};
    long mc_samples{0};
    std::uint64_t seed{1};
    OutputFormat format{OutputFormat::Csv};
    std::string out_path;
    /// Achievable rates to hold the run to, keyed "BC", "FS", "FS+IC", ...
    std::map<std::string, double> expected_rates;
    double rate_tolerance{0.02};
    /// MC rows fail strict mode when |analytic - mc| > max(floor, 3 SE).
    double mc_tolerance_floor{0.01};

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, std::string field, const std::string& message);

    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

/// Applies `key = value` lines onto `base`. `#` starts a comment, `[section]`
/// headers are accepted for readability and otherwise ignored. Lists are
/// comma separated; numeric lists also take `start:step:stop`.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Single key override with the same rules as a config line.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);

/// Canonical `key = value` form; parsing it back yields the same config.
std::string serialize(const RunConfig& cfg);

/// 64-bit FNV-1a of serialize(cfg), as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

/// Key used in expected_rates, e.g. "FD+IC".
std::string rate_key(Strategy s, bool ic);

}  // namespace hoskip::cli

#endif
