#ifndef HOSKIP_COVERAGE_HPP
#define HOSKIP_COVERAGE_HPP

#include "hoskip/core_model.hpp"
#include "hoskip/specfun.hpp"

#include <vector>

namespace hoskip {

/// Coverage of one service phase and the share of time spent in it.
struct PhaseTerm {
    Phase phase{Phase::MacroServed};
    double weight{0.0};
    double conditional{0.0};
    double error{0.0};
    bool converged{true};
};

struct CoverageResult {
    double value{0.0};
    double numeric_error{0.0};
    bool converged{true};
    std::vector<PhaseTerm> breakdown;

    /// Weight and conditional of `phase`; a zero term when absent.
    PhaseTerm term(Phase phase) const;
};

struct CoverageOptions {
    /// Use the eta = 4 closed-form transforms inside the integrals. Rejected
    /// for any other exponent.
    bool use_closed_forms{false};
    IntegrationConfig cfg_1d{IntegrationConfig::for_dimension(1)};
    IntegrationConfig cfg_2d{IntegrationConfig::for_dimension(2)};
    IntegrationConfig cfg_3d{IntegrationConfig::for_dimension(3)};
};

// All thresholds are linear. Results for a single phase carry weight 1 and a
// one-entry breakdown.

/// Best-connected coverage; breakdown holds the macro and femto phases.
CoverageResult coverage_bc(const NetworkParams& params, double threshold, const CoverageOptions& opt = {});

/// Femto skipping blackout: the strongest BS was a femto and is skipped; the
/// second and third strongest BSs of either tier serve non-coherently.
CoverageResult coverage_fs_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt = {});
CoverageResult coverage_fs(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt = {});

/// Femto disregard blackout: the two nearest macros serve while the stronger
/// femto is ignored.
CoverageResult coverage_fd_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt = {});
CoverageResult coverage_fd(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt = {});

/// Macro skipping, non-blackout: the nearest macro serves although the nearest
/// femto is stronger; that femto keeps interfering.
CoverageResult coverage_ms_nonblackout_disregard(const NetworkParams& params, double threshold,
                                                 const CoverageOptions& opt = {});
/// Macro skipping blackout: second and third nearest macros serve, the nearest
/// one is skipped.
CoverageResult coverage_ms_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt = {});
CoverageResult coverage_ms(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt = {});

/// Dispatch over strategies. BC ignores `ic`.
CoverageResult coverage(Strategy strategy, const NetworkParams& params, double threshold, bool ic,
                        const CoverageOptions& opt = {});

/// Coverage conditioned on being in `phase` under `strategy`, weighted by the
/// phase probability. Throws std::invalid_argument for unreachable phases.
PhaseTerm conditional_coverage(Strategy strategy, Phase phase, const NetworkParams& params, double threshold,
                               bool ic, const CoverageOptions& opt = {});

/// 1 / (1 + sqrt(T) atan(sqrt(T))): best-connected coverage at eta = 4
/// without noise, for any tier parameters.
double coverage_bc_closed_form(double threshold);

}  // namespace hoskip

#endif
