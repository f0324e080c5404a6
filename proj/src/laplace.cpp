#include "hoskip/laplace.hpp"

#include "hoskip/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoskip {

namespace {

constexpr double kPi = std::numbers::pi;

IntegrationConfig inner_lt_config()
{
    IntegrationConfig cfg;
    cfg.rel_tol = 1e-11;
    cfg.abs_tol = 1e-15;
    cfg.max_subdivisions = 200;
    return cfg;
}

void check_threshold(double t)
{
    if (!(t >= 0.0))
        throw std::domain_error("threshold must be non-negative");
}

struct BcTiers {
    const TierParams& serving;
    const TierParams& interfering;
};

BcTiers bc_tiers(const NetworkParams& p, BcLink link)
{
    switch (link) {
    case BcLink::MacroServedMacroTier: return {p.macro, p.macro};
    case BcLink::MacroServedFemtoTier: return {p.macro, p.femto};
    case BcLink::FemtoServedMacroTier: return {p.femto, p.macro};
    case BcLink::FemtoServedFemtoTier: return {p.femto, p.femto};
    }
    throw std::logic_error("unknown link");
}

// s * P1 for two cooperating macros at distances r_a, r_b.
double coop_gain(double eta, double r_a, double r_b, double t)
{
    return t / (std::pow(r_a, -eta) + std::pow(r_b, -eta));
}

}  // namespace

double pgfl_tail(double eta, double a, double r)
{
    if (!(eta > 2.0))
        throw std::domain_error("path loss exponent must exceed 2");
    if (a == 0.0)
        return 0.0;
    if (r <= 0.0)
        return std::pow(a, 2.0 / eta) * kPi / eta * cosecant(2.0 * kPi / eta);
    const double z = a * std::pow(r, -eta);
    return a * std::pow(r, 2.0 - eta) / (eta - 2.0) * hyp2f1_coverage(eta, z);
}

double lt_bc(const NetworkParams& params, BcLink link, double d, double t)
{
    check_threshold(t);
    const auto [serving, interfering] = bc_tiers(params, link);
    const double eta = params.path_loss_exponent;
    // s = T d^eta / P_serving; interferers of the tier lie beyond d (P_k / P_s)^{1/eta}.
    const double ratio = interfering.tx_power / serving.tx_power;
    const double a = t * std::pow(d, eta) * ratio;
    const double excl = d * std::pow(ratio, 1.0 / eta);
    return std::exp(-2.0 * kPi * interfering.intensity * pgfl_tail(eta, a, excl));
}

double lt_bc_eta4(const NetworkParams& params, BcLink link, double d, double t)
{
    const auto [serving, interfering] = bc_tiers(params, link);
    const double st = std::sqrt(t);
    return std::exp(-kPi * interfering.intensity * d * d * std::sqrt(t * interfering.tx_power / serving.tx_power) *
                    std::atan(st));
}

double lt_fs_skipped(const NetworkParams& params, double x, double y, double t)
{
    check_threshold(t);
    if (t == 0.0)
        return 1.0;
    const double s = t / (1.0 / x + 1.0 / y);
    const double half_eta = params.path_loss_exponent / 2.0;
    // (r1 / x)^{2/eta} is uniform on [0, 1] given x.
    const Fn1 f = [&](double w) {
        const double p = x * std::pow(w, half_eta);
        return p / (p + s);
    };
    return integrate_1d(f, 0.0, 1.0, inner_lt_config()).value;
}

double lt_fs_skipped_eta4(double x, double y, double t)
{
    if (t == 0.0)
        return 1.0;
    const double q = t * y / (x + y);
    return 1.0 - std::sqrt(q) * std::atan(std::sqrt(1.0 / q));
}

double lt_fs_aggregate(const NetworkParams& params, double x, double y, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double s = t / (1.0 / x + 1.0 / y);
    // Mapped process seen as a plane process of unit power: z = v^eta.
    return std::exp(-2.0 * kPi * params.total_mapped_intensity() * pgfl_tail(eta, s, std::pow(y, 1.0 / eta)));
}

double lt_fs_aggregate_eta4(const NetworkParams& params, double x, double y, double t)
{
    return std::exp(-kPi * params.total_mapped_intensity() * std::sqrt(t / (1.0 / x + 1.0 / y)) *
                    std::atan(std::sqrt(t * x / (x + y))));
}

double lt_fd_macro(const NetworkParams& params, double r1, double r2, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double a = coop_gain(eta, r1, r2, t);
    return std::exp(-2.0 * kPi * params.macro.intensity * pgfl_tail(eta, a, r2));
}

double lt_fd_macro_eta4(const NetworkParams& params, double r1, double r2, double t)
{
    const double r14 = std::pow(r1, 4.0), r24 = std::pow(r2, 4.0);
    return std::exp(-kPi * params.macro.intensity * std::sqrt(t / (1.0 / r14 + 1.0 / r24)) *
                    std::atan(std::sqrt(t * r14 / (r14 + r24))));
}

double lt_fd_skipped(const NetworkParams& params, double r1, double r2, double t)
{
    check_threshold(t);
    if (t == 0.0)
        return 1.0;
    const double eta = params.path_loss_exponent;
    const double ap = coop_gain(eta, r1, r2, t) * params.femto.tx_power / params.macro.tx_power;
    const double edge = r1 * std::pow(params.femto.tx_power / params.macro.tx_power, 1.0 / eta);
    const double l2 = params.femto.intensity;
    const double cmax = kPi * l2 * edge * edge;
    const auto factor = [&](double rf) { return 1.0 / (1.0 + ap * std::pow(rf, -eta)); };
    if (cmax < 1e-12) {
        // lambda_2 -> 0: r_f^2 uniform over the disc.
        const Fn1 g = [&](double u) { return factor(edge * std::sqrt(u)); };
        return integrate_1d(g, 0.0, 1.0, inner_lt_config()).value;
    }
    // c = pi lambda_2 r_f^2 has density e^-c / (1 - e^-cmax) on [0, cmax].
    const double mass = -std::expm1(-cmax);
    const Fn1 g = [&](double c) { return std::exp(-c) * factor(std::sqrt(c / (kPi * l2))); };
    return integrate_1d(g, 0.0, cmax, inner_lt_config()).value / mass;
}

double lt_fd_femto(const NetworkParams& params, double r1, double r2, double rf, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double ap = coop_gain(eta, r1, r2, t) * params.femto.tx_power / params.macro.tx_power;
    return std::exp(-2.0 * kPi * params.femto.intensity * pgfl_tail(eta, ap, rf));
}

double lt_fd_femto_eta4(const NetworkParams& params, double r1, double r2, double rf, double t)
{
    const double g = params.femto.tx_power / params.macro.tx_power * t / (std::pow(r1, -4.0) + std::pow(r2, -4.0));
    return std::exp(-kPi * params.femto.intensity * std::sqrt(g) * std::atan(std::sqrt(g * std::pow(rf, -4.0))));
}

double lt_ms_skipped(const NetworkParams& params, double r2, double r3, double t)
{
    check_threshold(t);
    if (t == 0.0)
        return 1.0;
    const double eta = params.path_loss_exponent;
    const double a = coop_gain(eta, r2, r3, t);
    // R1^2 / R2^2 is uniform on [0, 1] given R2.
    const Fn1 g = [&](double u) {
        const double p = std::pow(u * r2 * r2, eta / 2.0);
        return p / (p + a);
    };
    return integrate_1d(g, 0.0, 1.0, inner_lt_config()).value;
}

double lt_ms_skipped_eta4(double r2, double r3, double t)
{
    if (t == 0.0)
        return 1.0;
    const double k = 1.0 + std::pow(r2, 4.0) * std::pow(r3, -4.0);
    return 1.0 - std::sqrt(t / k) * std::atan(std::sqrt(k / t));
}

double lt_ms_macro(const NetworkParams& params, double r2, double r3, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double a = coop_gain(eta, r2, r3, t);
    return std::exp(-2.0 * kPi * params.macro.intensity * pgfl_tail(eta, a, r3));
}

double lt_ms_macro_eta4(const NetworkParams& params, double r2, double r3, double t)
{
    const double r24 = std::pow(r2, 4.0), r34 = std::pow(r3, 4.0);
    return std::exp(-kPi * params.macro.intensity * std::sqrt(t / (1.0 / r24 + 1.0 / r34)) *
                    std::atan(std::sqrt(t * r24 / (r24 + r34))));
}

double lt_ms_femto(const NetworkParams& params, double r2, double r3, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double sp2 = coop_gain(eta, r2, r3, t) / params.macro.tx_power * params.femto.tx_power;
    return std::exp(-2.0 * kPi * kPi * params.femto.intensity * std::pow(sp2, 2.0 / eta) / eta *
                    cosecant(2.0 * kPi / eta));
}

double lt_ms_femto_eta4(const NetworkParams& params, double r2, double r3, double t)
{
    return std::exp(-kPi * kPi * params.femto.intensity / 2.0 *
                    std::sqrt(t * params.femto.tx_power /
                              (params.macro.tx_power * (std::pow(r2, -4.0) + std::pow(r3, -4.0)))));
}

double lt_ms_disregard_femto(const NetworkParams& params, double r_macro, double rf, double t)
{
    check_threshold(t);
    const double eta = params.path_loss_exponent;
    const double ap = t * std::pow(r_macro, eta) * params.femto.tx_power / params.macro.tx_power;
    return std::exp(-2.0 * kPi * params.femto.intensity * pgfl_tail(eta, ap, rf));
}

double lt_ms_disregard_femto_eta4(const NetworkParams& params, double r_macro, double rf, double t)
{
    const double ap = t * std::pow(r_macro, 4.0) * params.femto.tx_power / params.macro.tx_power;
    return std::exp(-kPi * params.femto.intensity * std::sqrt(ap) * std::atan(std::sqrt(ap) / (rf * rf)));
}

LaplaceTransformKernel make_lt_kernel(LtKind kind, const NetworkParams& params, ServingGeometry g)
{
    params.validate();
    const NetworkParams p = params;
    switch (kind) {
    case LtKind::BcMacroServedMacroTier:
        return {kind, [p, g](double t) { return lt_bc(p, BcLink::MacroServedMacroTier, g.d1, t); }};
    case LtKind::BcMacroServedFemtoTier:
        return {kind, [p, g](double t) { return lt_bc(p, BcLink::MacroServedFemtoTier, g.d1, t); }};
    case LtKind::BcFemtoServedMacroTier:
        return {kind, [p, g](double t) { return lt_bc(p, BcLink::FemtoServedMacroTier, g.d1, t); }};
    case LtKind::BcFemtoServedFemtoTier:
        return {kind, [p, g](double t) { return lt_bc(p, BcLink::FemtoServedFemtoTier, g.d1, t); }};
    case LtKind::FsSkipped:
        return {kind, [p, g](double t) { return lt_fs_skipped(p, g.d1, g.d2, t); }};
    case LtKind::FsAggregate:
        return {kind, [p, g](double t) { return lt_fs_aggregate(p, g.d1, g.d2, t); }};
    case LtKind::FdMacroTier:
        return {kind, [p, g](double t) { return lt_fd_macro(p, g.d1, g.d2, t); }};
    case LtKind::FdSkippedFemto:
        return {kind, [p, g](double t) { return lt_fd_skipped(p, g.d1, g.d2, t); }};
    case LtKind::FdFemtoTier:
        return {kind, [p, g](double t) { return lt_fd_femto(p, g.d1, g.d2, g.d3, t); }};
    case LtKind::MsSkippedMacro:
        return {kind, [p, g](double t) { return lt_ms_skipped(p, g.d1, g.d2, t); }};
    case LtKind::MsMacroTier:
        return {kind, [p, g](double t) { return lt_ms_macro(p, g.d1, g.d2, t); }};
    case LtKind::MsFemtoTier:
        return {kind, [p, g](double t) { return lt_ms_femto(p, g.d1, g.d2, t); }};
    case LtKind::MsDisregardFemtoTier:
        return {kind, [p, g](double t) { return lt_ms_disregard_femto(p, g.d1, g.d3, t); }};
    }
    throw std::logic_error("unknown Laplace transform kind");
}

}  // namespace hoskip
