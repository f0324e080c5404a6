#ifndef HOSKIP_CORE_MODEL_HPP
#define HOSKIP_CORE_MODEL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hoskip {

// Units: km for distance, BS/km^2 for intensity, W for power, s for delay.
// Velocities are carried in km/h and converted to km/s where rates are formed.

enum class Tier { Macro, Femto };

enum class Strategy { BC, FS, FD, MS };

inline constexpr std::array<Strategy, 4> kAllStrategies{Strategy::BC, Strategy::FS, Strategy::FD,
                                                        Strategy::MS};

/// Service state of the test user.
///
/// MacroDisregard is the macro skipping sub-state in which the strongest femto
/// is ignored and the nearest macro serves even though the femto would be
/// stronger. It only carries weight under MS.
enum class Phase { MacroServed, FemtoServed, MacroDisregard, Blackout };

inline constexpr std::array<Phase, 4> kAllPhases{Phase::MacroServed, Phase::FemtoServed,
                                                 Phase::MacroDisregard, Phase::Blackout};

struct TierParams {
    double intensity{0.0};  // BS per km^2
    double tx_power{1.0};   // W
};

struct NetworkParams {
    TierParams macro;
    TierParams femto;
    double path_loss_exponent{4.0};
    double noise_power{0.0};

    const TierParams& tier(Tier t) const { return t == Tier::Macro ? macro : femto; }

    /// lambda_1 P_1^{2/eta} + lambda_2 P_2^{2/eta}; always derived, never cached.
    double total_mapped_intensity() const;

    /// 2 / eta.
    double delta() const { return 2.0 / path_loss_exponent; }

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

struct MobilityProfile {
    double velocity_kmh{0.0};
    double macro_ho_delay_s{0.0};
    double femto_ho_delay_s{0.0};

    double velocity_km_per_s() const { return velocity_kmh / 3600.0; }
    void validate() const;
};

/// Weight of each phase under a strategy. Indexed by Phase.
class PhaseProbabilities {
public:
    double operator[](Phase p) const { return w_[static_cast<std::size_t>(p)]; }
    double& operator[](Phase p) { return w_[static_cast<std::size_t>(p)]; }
    double total() const;

private:
    std::array<double, 4> w_{};
};

/// Probability that the strongest average received power comes from `tier`.
double association_probability(const NetworkParams& params, Tier tier);

PhaseProbabilities phase_probabilities(const NetworkParams& params, Strategy strategy);

/// False for FemtoServed under FD/MS, Blackout under BC, MacroDisregard outside MS.
bool phase_reachable(Strategy strategy, Phase phase);

/// Macro 30/km^2 at 1 W, femto 70/km^2 at 0.1 W, eta = 4, no noise.
NetworkParams reference_network();

double db_to_linear(double db);
double linear_to_db(double linear);

std::string_view to_string(Strategy s);
std::string_view to_string(Phase p);
std::string_view to_string(Tier t);
std::optional<Strategy> parse_strategy(std::string_view text);

}  // namespace hoskip

#endif
