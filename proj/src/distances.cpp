#include "hoskip/distances.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoskip {

namespace {
constexpr double kPi = std::numbers::pi;
}

double service_distance_pdf_bc(const NetworkParams& params, Tier tier, double r)
{
    if (r < 0.0)
        return 0.0;
    const double a = association_probability(params, tier);
    if (a == 0.0)
        return 0.0;
    const TierParams& own = params.tier(tier);
    const TierParams& other = params.tier(tier == Tier::Macro ? Tier::Femto : Tier::Macro);
    const double eff = own.intensity + other.intensity * std::pow(other.tx_power / own.tx_power, params.delta());
    return 2.0 * kPi * own.intensity * r / a * std::exp(-kPi * r * r * eff);
}

double mapped_intensity(const NetworkParams& params, double y)
{
    params.validate();
    if (!(y > 0.0))
        throw std::domain_error("mapped coordinate must be positive");
    const double d = params.delta();
    return 2.0 * kPi / params.path_loss_exponent * params.total_mapped_intensity() * std::pow(y, d - 1.0);
}

double mapped_intensity_measure(const NetworkParams& params, double y)
{
    if (y <= 0.0)
        return 0.0;
    return kPi * params.total_mapped_intensity() * std::pow(y, params.delta());
}

FsBlackoutDistances::FsBlackoutDistances(const NetworkParams& params)
    : delta_(params.delta()), lambda_t_(params.total_mapped_intensity())
{
    params.validate();
}

double FsBlackoutDistances::skipped_given_second(double r1, double x) const
{
    if (!(r1 > 0.0) || r1 > x)
        return 0.0;
    return delta_ * std::pow(r1, delta_ - 1.0) / std::pow(x, delta_);
}

double FsBlackoutDistances::cooperating_joint(double x, double y) const
{
    if (!(x > 0.0) || x > y)
        return 0.0;
    const double pl = kPi * lambda_t_;
    return delta_ * delta_ * pl * pl * pl * std::pow(x, 2.0 * delta_ - 1.0) * std::pow(y, delta_ - 1.0) *
           std::exp(-pl * std::pow(y, delta_));
}

FsBlackoutDistances blackout_distance_pdfs_fs(const NetworkParams& params) { return FsBlackoutDistances(params); }

FdBlackoutDistances::FdBlackoutDistances(const NetworkParams& params)
    : l1_(params.macro.intensity),
      l2_(params.femto.intensity),
      ratio_(std::pow(params.femto.tx_power / params.macro.tx_power, 1.0 / params.path_loss_exponent)),
      blackout_prob_(association_probability(params, Tier::Femto))
{
}

double FdBlackoutDistances::skipped_given_macro(double r1, double r_macro) const
{
    const double edge = ratio_ * r_macro;
    if (r1 < 0.0 || r1 > edge || edge <= 0.0)
        return 0.0;
    const double mass = -std::expm1(-kPi * l2_ * edge * edge);
    if (mass == 0.0)
        return 2.0 * r1 / (edge * edge);  // lambda_2 -> 0 limit: r1^2 uniform
    return 2.0 * kPi * l2_ * r1 * std::exp(-kPi * l2_ * r1 * r1) / mass;
}

double FdBlackoutDistances::joint(double x, double y, double z) const
{
    if (x < 0.0 || y < x || z < 0.0 || z > ratio_ * x || blackout_prob_ == 0.0)
        return 0.0;
    const double tp = 2.0 * kPi;
    return tp * tp * tp * l1_ * l1_ * l2_ * x * y * z * std::exp(-kPi * (l1_ * y * y + l2_ * z * z)) /
           blackout_prob_;
}

double FdBlackoutDistances::serving_joint(double x, double y) const
{
    if (x < 0.0 || y < x || blackout_prob_ == 0.0)
        return 0.0;
    const double tl = 2.0 * kPi * l1_;
    const double edge = ratio_ * x;
    return tl * tl * x * y * std::exp(-kPi * l1_ * y * y) * -std::expm1(-kPi * l2_ * edge * edge) /
           blackout_prob_;
}

FdBlackoutDistances blackout_distance_pdfs_fd(const NetworkParams& params) { return FdBlackoutDistances(params); }

MsDistances::MsDistances(const NetworkParams& params)
    : l1_(params.macro.intensity),
      l2_(params.femto.intensity),
      ratio_(std::pow(params.femto.tx_power / params.macro.tx_power, 1.0 / params.path_loss_exponent)),
      femto_prob_(association_probability(params, Tier::Femto))
{
}

double MsDistances::blackout_joint(double x, double y, double z) const
{
    if (x < 0.0 || y < x || z < y)
        return 0.0;
    const double tl = 2.0 * kPi * l1_;
    return tl * tl * tl * x * y * z * std::exp(-kPi * l1_ * z * z);
}

double MsDistances::serving_joint(double y, double z) const
{
    if (y < 0.0 || z < y)
        return 0.0;
    const double pl = kPi * l1_;
    return 4.0 * pl * pl * pl * y * y * y * z * std::exp(-pl * z * z);
}

double MsDistances::skipped_given_second(double x, double y) const
{
    if (x < 0.0 || x > y || y <= 0.0)
        return 0.0;
    return 2.0 * x / (y * y);
}

double MsDistances::disregard_joint(double x, double y) const
{
    if (x < 0.0 || y < 0.0 || y > ratio_ * x || femto_prob_ == 0.0)
        return 0.0;
    const double tp = 2.0 * kPi;
    return tp * tp * l1_ * l2_ * x * y * std::exp(-kPi * (l1_ * x * x + l2_ * y * y)) / femto_prob_;
}

double MsDistances::disregard_marginal(double x) const
{
    if (x < 0.0 || femto_prob_ == 0.0)
        return 0.0;
    const double c = ratio_ * ratio_;
    return 2.0 * kPi * l1_ * x / femto_prob_ * (std::exp(-kPi * l1_ * x * x) - std::exp(-kPi * x * x * (l1_ + l2_ * c)));
}

MsDistances blackout_distance_pdfs_ms(const NetworkParams& params) { return MsDistances(params); }

}  // namespace hoskip
