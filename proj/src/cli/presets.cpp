#include "hoskip/cli/presets.hpp"

#include <array>
#include <utility>

namespace hoskip::cli {

namespace {

constexpr std::string_view kNetwork = R"(# Two-tier reference deployment
[network]
lambda_macro_per_km2 = 30
lambda_femto_per_km2 = 70
p_macro_watt = 1
p_femto_watt = 0.1
eta = 4
noise_watt = 0
)";

constexpr std::string_view kTable2 = R"(
[sweep]
theta_db = 6
v_kmh_grid = 0
strategies = BC, FS, FD, MS
ic = off, on

[checks]
rate_tolerance = 0.02
expected_rate_bc = 0.50
expected_rate_fs = 0.40
expected_rate_fs_ic = 0.46
expected_rate_fd = 0.29
expected_rate_fd_ic = 0.36
expected_rate_ms = 0.15
expected_rate_ms_ic = 0.20
)";

constexpr std::string_view kFig3 = R"(
[sweep]
theta_db = -10:2:20
v_kmh_grid = 0
strategies = BC, FS, FD, MS
ic = off, on

[monte_carlo]
mc_samples = 10000
seed = 1
)";

constexpr std::string_view kFig4 = R"(
[sweep]
theta_db = 6
v_kmh_grid = 0:10:200
d_m_s = 0.35
d_f_s = 0.7
strategies = BC, FS, FD, MS
ic = on
)";

constexpr std::string_view kFig5 = R"(
[sweep]
theta_db = 6
v_kmh_grid = 0:10:200
d_m_s = 0.35
d_f_s = 0.7, 1.05
w_hz = 10e6
strategies = BC, FS, FD, MS
ic = on
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kPresets{{
    {"table2", kTable2},
    {"fig3", kFig3},
    {"fig4", kFig4},
    {"fig5", kFig5},
}};

}  // namespace

std::optional<std::string> preset_text(std::string_view name)
{
    for (const auto& [n, body] : kPresets)
        if (n == name)
            return std::string(kNetwork) + std::string(body);
    return std::nullopt;
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> out;
    for (const auto& p : kPresets)
        out.emplace_back(p.first);
    return out;
}

}  // namespace hoskip::cli
