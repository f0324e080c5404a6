#ifndef HOSKIP_SIM_SINR_HPP
#define HOSKIP_SIM_SINR_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/sim/network.hpp"

#include <optional>
#include <random>
#include <vector>

namespace hoskip::sim {

struct SinrSample {
    Strategy strategy{Strategy::BC};
    Phase phase{Phase::MacroServed};
    bool ic{false};
    double sinr{0.0};
};

/// How the two-BS non-coherent serving power is drawn.
enum class CompModel {
    /// |a1 g1 + a2 g2|^2 with g_i independent standard complex normal.
    ComplexGaussian,
    /// (a1^2 + a2^2) times a fresh unit exponential.
    Exponential,
};

struct SinrOptions {
    CompModel comp{CompModel::ComplexGaussian};
    /// When positive, only BSs inside the centred square of this side exist.
    /// Fading is still drawn for every BS so streams stay aligned.
    double truncation_window{0.0};
};

struct Combo {
    Strategy strategy{Strategy::BC};
    bool ic{false};
};

/// Every strategy, with and without IC (BC once).
std::vector<Combo> all_combos();

/// SINR of the user at the window centre. Fading and the skipping coin flips
/// are drawn once from `rng` and shared by all combos; nullopt marks a combo
/// whose serving set is empty in this realization.
std::vector<std::optional<SinrSample>> stationary_sinr_all(const NetworkRealization& realization,
                                                           const NetworkParams& params,
                                                           const std::vector<Combo>& combos, std::mt19937_64& rng,
                                                           const SinrOptions& opt = {});

std::optional<SinrSample> stationary_sinr(const NetworkRealization& realization, const NetworkParams& params,
                                          Strategy strategy, bool ic, std::mt19937_64& rng,
                                          const SinrOptions& opt = {});

}  // namespace hoskip::sim

#endif
