#include "hoskip/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hoskip::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(trim(item));
    return out;
}

double to_double(const std::string& v, int line, const std::string& key)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(d))
            throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(line, key, "expected a number, got '" + v + "'");
    }
}

long to_long(const std::string& v, int line, const std::string& key)
{
    try {
        std::size_t used = 0;
        const long n = std::stol(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ConfigError(line, key, "expected an integer, got '" + v + "'");
    }
}

std::uint64_t to_u64(const std::string& v, int line, const std::string& key)
{
    if (!v.empty() && v.front() == '-')
        throw ConfigError(line, key, "seed must be non-negative");
    std::uint64_t n = 0;
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || end != v.data() + v.size())
        throw ConfigError(line, key, "expected an unsigned 64-bit integer, got '" + v + "'");
    return n;
}

std::vector<double> to_list(const std::string& v, int line, const std::string& key)
{
    std::vector<double> out;
    if (v.find(':') != std::string::npos) {
        const auto parts = split(v, ':');
        if (parts.size() != 3)
            throw ConfigError(line, key, "range must be start:step:stop");
        const double a = to_double(parts[0], line, key);
        const double step = to_double(parts[1], line, key);
        const double b = to_double(parts[2], line, key);
        if (!(step > 0.0) || b < a)
            throw ConfigError(line, key, "range needs a positive step and stop >= start");
        const long n = static_cast<long>(std::floor((b - a) / step + 1e-9));
        for (long i = 0; i <= n; ++i)
            out.push_back(a + static_cast<double>(i) * step);
        return out;
    }
    for (const std::string& item : split(v, ','))
        out.push_back(to_double(item, line, key));
    if (out.empty())
        throw ConfigError(line, key, "list is empty");
    return out;
}

bool to_bool(const std::string& v, int line, const std::string& key)
{
    const std::string s = lower(v);
    if (s == "1" || s == "on" || s == "true" || s == "yes")
        return true;
    if (s == "0" || s == "off" || s == "false" || s == "no")
        return false;
    throw ConfigError(line, key, "expected on/off, got '" + v + "'");
}

std::string fmt(double d)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F f)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += f(xs[i]);
    }
    return out;
}

}  // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + field + ": " + message),
      line_(line),
      field_(std::move(field))
{
}

std::string rate_key(Strategy s, bool ic)
{
    std::string k(to_string(s));
    if (ic && s != Strategy::BC)
        k += "+IC";
    return k;
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& value, int line)
{
    const std::string key = lower(trim(raw_key));
    const std::string v = trim(value);
    if (v.empty())
        throw ConfigError(line, key, "missing value");

    if (key == "lambda_macro_per_km2")
        cfg.network.macro.intensity = to_double(v, line, key);
    else if (key == "lambda_femto_per_km2")
        cfg.network.femto.intensity = to_double(v, line, key);
    else if (key == "p_macro_watt")
        cfg.network.macro.tx_power = to_double(v, line, key);
    else if (key == "p_femto_watt")
        cfg.network.femto.tx_power = to_double(v, line, key);
    else if (key == "eta")
        cfg.network.path_loss_exponent = to_double(v, line, key);
    else if (key == "noise_watt")
        cfg.network.noise_power = to_double(v, line, key);
    else if (key == "theta_db")
        cfg.theta_db = to_list(v, line, key);
    else if (key == "v_kmh_grid")
        cfg.velocities_kmh = to_list(v, line, key);
    else if (key == "d_m_s")
        cfg.macro_ho_delay_s = to_double(v, line, key);
    else if (key == "d_f_s")
        cfg.femto_ho_delays_s = to_list(v, line, key);
    else if (key == "w_hz")
        cfg.bandwidth_hz = to_double(v, line, key);
    else if (key == "strategies") {
        cfg.strategies.clear();
        for (const std::string& s : split(v, ',')) {
            const auto st = parse_strategy(s);
            if (!st)
                throw ConfigError(line, key, "unknown strategy '" + s + "'");
            cfg.strategies.push_back(*st);
        }
    } else if (key == "ic") {
        cfg.ic_flags.clear();
        for (const std::string& s : split(v, ','))
            cfg.ic_flags.push_back(to_bool(s, line, key));
    } else if (key == "mc_samples")
        cfg.mc_samples = to_long(v, line, key);
    else if (key == "seed")
        cfg.seed = to_u64(v, line, key);
    else if (key == "format") {
        const std::string f = lower(v);
        if (f == "csv")
            cfg.format = OutputFormat::Csv;
        else if (f == "json")
            cfg.format = OutputFormat::Json;
        else
            throw ConfigError(line, key, "format must be csv or json");
    } else if (key == "out")
        cfg.out_path = v;
    else if (key == "rate_tolerance")
        cfg.rate_tolerance = to_double(v, line, key);
    else if (key == "mc_tolerance_floor")
        cfg.mc_tolerance_floor = to_double(v, line, key);
    else if (key.rfind("expected_rate_", 0) == 0) {
        std::string tag = key.substr(14);
        bool ic = false;
        if (tag.size() > 3 && tag.substr(tag.size() - 3) == "_ic") {
            ic = true;
            tag.resize(tag.size() - 3);
        }
        const auto st = parse_strategy(tag);
        if (!st)
            throw ConfigError(line, key, "unknown strategy '" + tag + "'");
        cfg.expected_rates[rate_key(*st, ic)] = to_double(v, line, key);
    } else
        throw ConfigError(line, key, "unknown key");
}

void RunConfig::validate() const
{
    try {
        network.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(0, "network", e.what());
    }
    if (network.macro.intensity == 0.0 && network.femto.intensity == 0.0)
        throw ConfigError(0, "lambda_macro_per_km2", "both tiers are empty");
    if (theta_db.empty())
        throw ConfigError(0, "theta_db", "grid is empty");
    if (velocities_kmh.empty())
        throw ConfigError(0, "v_kmh_grid", "grid is empty");
    for (double v : velocities_kmh)
        if (v < 0.0)
            throw ConfigError(0, "v_kmh_grid", "velocities must be non-negative");
    if (femto_ho_delays_s.empty())
        throw ConfigError(0, "d_f_s", "grid is empty");
    if (macro_ho_delay_s < 0.0)
        throw ConfigError(0, "d_m_s", "delay must be non-negative");
    for (double d : femto_ho_delays_s)
        if (d < macro_ho_delay_s)
            throw ConfigError(0, "d_f_s", "femto delay must be at least d_m_s");
    if (!(bandwidth_hz > 0.0))
        throw ConfigError(0, "w_hz", "bandwidth must be positive");
    if (strategies.empty())
        throw ConfigError(0, "strategies", "no strategy selected");
    if (ic_flags.empty())
        throw ConfigError(0, "ic", "no interference cancellation flag selected");
    if (mc_samples != 0 && mc_samples < 1000)
        throw ConfigError(0, "mc_samples", "use 0 to disable or at least 1000");
    if (!(rate_tolerance > 0.0))
        throw ConfigError(0, "rate_tolerance", "must be positive");
    if (!(mc_tolerance_floor >= 0.0))
        throw ConfigError(0, "mc_tolerance_floor", "must be non-negative");
}

RunConfig parse_config(const std::string& text, RunConfig base)
{
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty() || (s.front() == '[' && s.back() == ']'))
            continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, s, "expected key = value");
        apply_setting(base, s.substr(0, eq), s.substr(eq + 1), line);
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError(0, "config", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string serialize(const RunConfig& c)
{
    std::ostringstream o;
    o << "[network]\n";
    o << "lambda_macro_per_km2 = " << fmt(c.network.macro.intensity) << "\n";
    o << "lambda_femto_per_km2 = " << fmt(c.network.femto.intensity) << "\n";
    o << "p_macro_watt = " << fmt(c.network.macro.tx_power) << "\n";
    o << "p_femto_watt = " << fmt(c.network.femto.tx_power) << "\n";
    o << "eta = " << fmt(c.network.path_loss_exponent) << "\n";
    o << "noise_watt = " << fmt(c.network.noise_power) << "\n";
    o << "[sweep]\n";
    o << "theta_db = " << join(c.theta_db, fmt) << "\n";
    o << "v_kmh_grid = " << join(c.velocities_kmh, fmt) << "\n";
    o << "d_m_s = " << fmt(c.macro_ho_delay_s) << "\n";
    o << "d_f_s = " << join(c.femto_ho_delays_s, fmt) << "\n";
    o << "w_hz = " << fmt(c.bandwidth_hz) << "\n";
    o << "strategies = " << join(c.strategies, [](Strategy s) { return std::string(to_string(s)); }) << "\n";
    o << "ic = " << join(c.ic_flags, [](bool b) { return std::string(b ? "on" : "off"); }) << "\n";
    o << "[monte_carlo]\n";
    o << "mc_samples = " << c.mc_samples << "\n";
    o << "seed = " << c.seed << "\n";
    o << "[checks]\n";
    o << "rate_tolerance = " << fmt(c.rate_tolerance) << "\n";
    o << "mc_tolerance_floor = " << fmt(c.mc_tolerance_floor) << "\n";
    for (const auto& [k, v] : c.expected_rates) {
        std::string key = lower(k);
        if (const auto p = key.find("+ic"); p != std::string::npos)
            key.replace(p, 3, "_ic");
        o << "expected_rate_" << key << " = " << fmt(v) << "\n";
    }
    return o.str();
}

std::string config_hash(const RunConfig& cfg)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hoskip::cli
