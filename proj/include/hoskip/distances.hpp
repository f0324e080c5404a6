#ifndef HOSKIP_DISTANCES_HPP
#define HOSKIP_DISTANCES_HPP

#include "hoskip/core_model.hpp"

namespace hoskip {

// Service and skipped-BS distance densities for every strategy. Arguments
// outside a density's support give 0.

/// Distance to the serving BS under best-connected association, given that
/// `tier` serves.
double service_distance_pdf_bc(const NetworkParams& params, Tier tier, double r);

/// Intensity of the received-power-ordered 1D process, y = d^eta / P_k.
double mapped_intensity(const NetworkParams& params, double y);

/// pi * lambda_t * y^{2/eta}: expected count of mapped points in [0, y].
double mapped_intensity_measure(const NetworkParams& params, double y);

/// Femto skipping blackout, in mapped coordinates. r1 is the skipped (first)
/// point, x and y the two cooperating points, r1 <= x <= y.
class FsBlackoutDistances {
public:
    explicit FsBlackoutDistances(const NetworkParams& params);

    /// Density of r1 given x. Normalized over [0, x].
    double skipped_given_second(double r1, double x) const;

    /// Joint density of the second and third mapped points.
    double cooperating_joint(double x, double y) const;

private:
    double delta_;
    double lambda_t_;
};

FsBlackoutDistances blackout_distance_pdfs_fs(const NetworkParams& params);

/// Femto disregard blackout: R1 <= R2 are the two nearest macros, r1 the
/// nearest femto which lies inside (P2/P1)^{1/eta} R1.
class FdBlackoutDistances {
public:
    explicit FdBlackoutDistances(const NetworkParams& params);

    double skipped_support(double r_macro) const { return ratio_ * r_macro; }

    double skipped_given_macro(double r1, double r_macro) const;
    double joint(double r_macro1, double r_macro2, double r1) const;
    double serving_joint(double r_macro1, double r_macro2) const;

private:
    double l1_, l2_, ratio_, blackout_prob_;
};

FdBlackoutDistances blackout_distance_pdfs_fd(const NetworkParams& params);

/// Macro skipping. Blackout: R1 <= R2 <= R3 nearest macros, R1 skipped.
/// Non-blackout disregard: nearest macro R1 serves while the nearest femto
/// r1 < (P2/P1)^{1/eta} R1 is ignored.
class MsDistances {
public:
    explicit MsDistances(const NetworkParams& params);

    double blackout_joint(double r1, double r2, double r3) const;
    double serving_joint(double r2, double r3) const;
    double skipped_given_second(double r1, double r2) const;
    double disregard_joint(double r_macro, double r_femto) const;
    double disregard_marginal(double r_macro) const;

private:
    double l1_, l2_, ratio_, femto_prob_;
};

MsDistances blackout_distance_pdfs_ms(const NetworkParams& params);

}  // namespace hoskip

#endif
