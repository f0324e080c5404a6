#ifndef HOSKIP_LAPLACE_HPP
#define HOSKIP_LAPLACE_HPP

#include "hoskip/core_model.hpp"

#include <functional>

namespace hoskip {

// Laplace transforms of the interference seen by the test user, each
// evaluated at the s implied by the serving link(s) and threshold T. Every
// function has a general-eta form; `*_eta4` variants are the closed forms
// that hold only at eta = 4 and exist as an independent check.

/// int_R^inf v * a v^-eta / (1 + a v^-eta) dv. R = 0 gives the full-plane value.
double pgfl_tail(double eta, double a, double exclusion_radius);

/// Best-connected interference: which tier interferes, and which tier serves.
enum class BcLink { MacroServedMacroTier, MacroServedFemtoTier, FemtoServedMacroTier, FemtoServedFemtoTier };

double lt_bc(const NetworkParams& params, BcLink link, double serving_distance, double threshold);
double lt_bc_eta4(const NetworkParams& params, BcLink link, double serving_distance, double threshold);

// Femto skipping blackout; x <= y are mapped coordinates of the two cooperating BSs.
double lt_fs_skipped(const NetworkParams& params, double x, double y, double threshold);
double lt_fs_skipped_eta4(double x, double y, double threshold);
double lt_fs_aggregate(const NetworkParams& params, double x, double y, double threshold);
double lt_fs_aggregate_eta4(const NetworkParams& params, double x, double y, double threshold);

// Femto disregard blackout; r_m1 <= r_m2 serving macros, r_f the skipped femto.
double lt_fd_macro(const NetworkParams& params, double r_m1, double r_m2, double threshold);
double lt_fd_macro_eta4(const NetworkParams& params, double r_m1, double r_m2, double threshold);
/// Averaged over the skipped femto's conditional distance.
double lt_fd_skipped(const NetworkParams& params, double r_m1, double r_m2, double threshold);
double lt_fd_femto(const NetworkParams& params, double r_m1, double r_m2, double r_f, double threshold);
double lt_fd_femto_eta4(const NetworkParams& params, double r_m1, double r_m2, double r_f, double threshold);

// Macro skipping blackout; r_m2 <= r_m3 cooperating macros, nearest macro skipped.
double lt_ms_skipped(const NetworkParams& params, double r_m2, double r_m3, double threshold);
double lt_ms_skipped_eta4(double r_m2, double r_m3, double threshold);
double lt_ms_macro(const NetworkParams& params, double r_m2, double r_m3, double threshold);
double lt_ms_macro_eta4(const NetworkParams& params, double r_m2, double r_m3, double threshold);
double lt_ms_femto(const NetworkParams& params, double r_m2, double r_m3, double threshold);
double lt_ms_femto_eta4(const NetworkParams& params, double r_m2, double r_m3, double threshold);

/// Macro skipping, non-blackout with the nearest femto disregarded: femto
/// interference from beyond the disregarded femto at r_f.
double lt_ms_disregard_femto(const NetworkParams& params, double r_macro, double r_f, double threshold);
double lt_ms_disregard_femto_eta4(const NetworkParams& params, double r_macro, double r_f, double threshold);

enum class LtKind {
    BcMacroServedMacroTier,
    BcMacroServedFemtoTier,
    BcFemtoServedMacroTier,
    BcFemtoServedFemtoTier,
    FsSkipped,
    FsAggregate,
    FdMacroTier,
    FdSkippedFemto,
    FdFemtoTier,
    MsSkippedMacro,
    MsMacroTier,
    MsFemtoTier,
    MsDisregardFemtoTier,
};

/// Serving geometry for a kernel: up to three distances, meaning per kind
/// (BC: d1 = serving; FS: d1 = x, d2 = y; FD: d1 = R1, d2 = R2, d3 = r1;
/// MS blackout: d1 = R2, d2 = R3; MS disregard: d1 = R1, d3 = r1).
struct ServingGeometry {
    double d1{0.0};
    double d2{0.0};
    double d3{0.0};
};

/// One of the transforms above bound to its parameters and geometry; maps a
/// threshold T to the transform value.
struct LaplaceTransformKernel {
    LtKind kind;
    std::function<double(double)> evaluate;

    double operator()(double threshold) const { return evaluate(threshold); }
};

LaplaceTransformKernel make_lt_kernel(LtKind kind, const NetworkParams& params, ServingGeometry geometry);

}  // namespace hoskip

#endif
