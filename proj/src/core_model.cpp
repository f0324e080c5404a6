#include "hoskip/core_model.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hoskip {

double NetworkParams::total_mapped_intensity() const
{
    const double d = delta();
    return macro.intensity * std::pow(macro.tx_power, d) + femto.intensity * std::pow(femto.tx_power, d);
}

void NetworkParams::validate() const
{
    if (!(path_loss_exponent > 2.0))
        throw std::invalid_argument("path loss exponent must exceed 2");
    if (!(macro.intensity >= 0.0) || !(femto.intensity >= 0.0))
        throw std::invalid_argument("tier intensities must be non-negative");
    if (!(macro.tx_power > 0.0) || !(femto.tx_power > 0.0))
        throw std::invalid_argument("transmit powers must be positive");
    if (!(noise_power >= 0.0))
        throw std::invalid_argument("noise power must be non-negative");
    if (!std::isfinite(macro.intensity) || !std::isfinite(femto.intensity) ||
        !std::isfinite(path_loss_exponent) || !std::isfinite(noise_power))
        throw std::invalid_argument("network parameters must be finite");
}

void MobilityProfile::validate() const
{
    if (!(velocity_kmh >= 0.0))
        throw std::invalid_argument("velocity must be non-negative");
    if (!(macro_ho_delay_s >= 0.0))
        throw std::invalid_argument("macro handover delay must be non-negative");
    if (!(femto_ho_delay_s >= macro_ho_delay_s))
        throw std::invalid_argument("femto handover delay must be at least the macro delay");
}

double PhaseProbabilities::total() const
{
    double s = 0.0;
    for (double v : w_)
        s += v;
    return s;
}

double association_probability(const NetworkParams& params, Tier tier)
{
    params.validate();
    const double l1 = params.macro.intensity;
    const double l2 = params.femto.intensity;
    if (l1 == 0.0 && l2 == 0.0)
        throw std::domain_error("association probability undefined with both tiers empty");

    // Written as a ratio of the two mapped intensities so A_m + A_f == 1 holds
    // to rounding.
    const double d = params.delta();
    const double m = l1 * std::pow(params.macro.tx_power, d);
    const double f = l2 * std::pow(params.femto.tx_power, d);
    const double am = m / (m + f);
    return tier == Tier::Macro ? am : 1.0 - am;
}

PhaseProbabilities phase_probabilities(const NetworkParams& params, Strategy strategy)
{
    const double am = association_probability(params, Tier::Macro);
    const double af = 1.0 - am;
    PhaseProbabilities p;
    switch (strategy) {
    case Strategy::BC:
        p[Phase::MacroServed] = am;
        p[Phase::FemtoServed] = af;
        break;
    case Strategy::FS:
        p[Phase::MacroServed] = am;
        p[Phase::FemtoServed] = 0.5 * af;
        p[Phase::Blackout] = 0.5 * af;
        break;
    case Strategy::FD:
        p[Phase::MacroServed] = am;
        p[Phase::Blackout] = af;
        break;
    case Strategy::MS:
        p[Phase::MacroServed] = 0.5 * am;
        p[Phase::MacroDisregard] = 0.5 * af;
        p[Phase::Blackout] = 0.5;
        break;
    }
    return p;
}

bool phase_reachable(Strategy strategy, Phase phase)
{
    switch (phase) {
    case Phase::MacroServed:
        return true;
    case Phase::FemtoServed:
        return strategy == Strategy::BC || strategy == Strategy::FS;
    case Phase::MacroDisregard:
        return strategy == Strategy::MS;
    case Phase::Blackout:
        return strategy != Strategy::BC;
    }
    return false;
}

NetworkParams reference_network()
{
    NetworkParams p;
    p.macro = {30.0, 1.0};
    p.femto = {70.0, 0.1};
    p.path_loss_exponent = 4.0;
    p.noise_power = 0.0;
    return p;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::BC: return "BC";
    case Strategy::FS: return "FS";
    case Strategy::FD: return "FD";
    case Strategy::MS: return "MS";
    }
    return "?";
}

std::string_view to_string(Phase p)
{
    switch (p) {
    case Phase::MacroServed: return "macro_served";
    case Phase::FemtoServed: return "femto_served";
    case Phase::MacroDisregard: return "macro_disregard";
    case Phase::Blackout: return "blackout";
    }
    return "?";
}

std::string_view to_string(Tier t) { return t == Tier::Macro ? "macro" : "femto"; }

std::optional<Strategy> parse_strategy(std::string_view text)
{
    std::string up;
    for (char c : text)
        up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (Strategy s : kAllStrategies)
        if (up == to_string(s))
            return s;
    return std::nullopt;
}

}  // namespace hoskip
