#include "hoskip/coverage.hpp"

#include "hoskip/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoskip {

namespace {

constexpr double kPi = std::numbers::pi;

// Integrals run in "count" variables a = pi lambda r^2, where densities carry
// e^-a. Cut where e^-a < 1e-14; marginals with polynomial prefactors get a
// little more room.
const double kTail = std::log(1e14);
constexpr double kTailPoly = 40.0;

void check_inputs(const NetworkParams& params, double t, const CoverageOptions& opt)
{
    params.validate();
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("threshold must be finite and non-negative");
    if (opt.use_closed_forms && params.path_loss_exponent != 4.0)
        throw std::invalid_argument("closed-form transforms require eta = 4");
}

PhaseTerm make_term(Phase phase, const QuadResult& q)
{
    PhaseTerm t;
    t.phase = phase;
    t.weight = 1.0;
    t.conditional = q.value;
    t.error = q.error;
    t.converged = q.converged;
    return t;
}

CoverageResult single(const PhaseTerm& t)
{
    CoverageResult r;
    r.value = t.conditional;
    r.numeric_error = t.error;
    r.converged = t.converged;
    r.breakdown.push_back(t);
    return r;
}

CoverageResult combine(const NetworkParams& params, Strategy strategy, std::vector<PhaseTerm> terms)
{
    const PhaseProbabilities w = phase_probabilities(params, strategy);
    CoverageResult r;
    for (PhaseTerm& t : terms) {
        t.weight = w[t.phase];
        r.value += t.weight * t.conditional;
        r.numeric_error += t.weight * t.error;
        r.converged = r.converged && t.converged;
    }
    r.breakdown = std::move(terms);
    return r;
}

// Conditional coverage when `tier` is strongest and serves alone.
PhaseTerm bc_phase(const NetworkParams& p, Tier tier, double t, const CoverageOptions& opt)
{
    const Phase phase = tier == Tier::Macro ? Phase::MacroServed : Phase::FemtoServed;
    const TierParams& own = p.tier(tier);
    const TierParams& other = p.tier(tier == Tier::Macro ? Tier::Femto : Tier::Macro);
    if (own.intensity == 0.0)
        return make_term(phase, QuadResult{});
    const double eff = own.intensity + other.intensity * std::pow(other.tx_power / own.tx_power, p.delta());
    const double eta = p.path_loss_exponent;
    const BcLink same = tier == Tier::Macro ? BcLink::MacroServedMacroTier : BcLink::FemtoServedFemtoTier;
    const BcLink cross = tier == Tier::Macro ? BcLink::MacroServedFemtoTier : BcLink::FemtoServedMacroTier;
    const auto lt = opt.use_closed_forms ? lt_bc_eta4 : lt_bc;

    // a = pi * eff * r^2 has density e^-a.
    const Fn1 f = [&](double a) {
        const double r = std::sqrt(a / (kPi * eff));
        const double noise = p.noise_power == 0.0 ? 1.0 : std::exp(-t * std::pow(r, eta) * p.noise_power / own.tx_power);
        return std::exp(-a) * noise * lt(p, same, r, t) * lt(p, cross, r, t);
    };
    return make_term(phase, integrate_1d(f, 0.0, kTail, opt.cfg_1d));
}

PhaseTerm fs_blackout_phase(const NetworkParams& p, double t, bool ic, const CoverageOptions& opt)
{
    const double lt_total = p.total_mapped_intensity();
    const double delta = p.delta();
    const double scale = kPi * lt_total;
    const bool closed = opt.use_closed_forms;

    // u, v = pi lambda_t x^{2/eta}, pi lambda_t y^{2/eta}: joint density u e^-v on u <= v.
    const Fn2 f = [&](double v, double u) {
        const double x = std::pow(u / scale, 1.0 / delta);
        const double y = std::pow(v / scale, 1.0 / delta);
        double g = u * std::exp(-v);
        if (g == 0.0)
            return 0.0;
        if (p.noise_power != 0.0)
            g *= std::exp(-t / (1.0 / x + 1.0 / y) * p.noise_power);
        g *= closed ? lt_fs_aggregate_eta4(p, x, y, t) : lt_fs_aggregate(p, x, y, t);
        if (!ic)
            g *= closed ? lt_fs_skipped_eta4(x, y, t) : lt_fs_skipped(p, x, y, t);
        return g;
    };
    const Fn1 lo = [](double) { return 0.0; };
    const Fn1 hi = [](double v) { return v; };
    return make_term(Phase::Blackout, integrate_2d(f, 0.0, kTailPoly, lo, hi, opt.cfg_2d));
}

PhaseTerm fd_blackout_phase(const NetworkParams& p, double t, bool ic, const CoverageOptions& opt)
{
    const double l1 = p.macro.intensity;
    const double l2 = p.femto.intensity;
    const double af = association_probability(p, Tier::Femto);
    // No macro to fall back on, or no femto to disregard.
    if (l1 == 0.0 || af == 0.0)
        return make_term(Phase::Blackout, QuadResult{});

    const double eta = p.path_loss_exponent;
    const double kappa = l2 * std::pow(p.femto.tx_power / p.macro.tx_power, p.delta()) / l1;
    const double p_ratio = p.femto.tx_power / p.macro.tx_power;
    const bool closed = opt.use_closed_forms;

    // a = pi l1 R1^2, b = a + b' with b' = pi l1 (R2^2 - R1^2), c = pi l2 r1^2 <= kappa a.
    const Fn3 f = [&](double a, double bp, double c) {
        const double w = std::exp(-(a + bp) - c);
        if (w == 0.0)
            return 0.0;
        const double r1 = std::sqrt(a / (kPi * l1));
        const double r2 = std::sqrt((a + bp) / (kPi * l1));
        const double rf = std::sqrt(c / (kPi * l2));
        const double gain = std::pow(r1, -eta) + std::pow(r2, -eta);
        double g = w;
        if (p.noise_power != 0.0)
            g *= std::exp(-t * p.noise_power / (p.macro.tx_power * gain));
        g *= closed ? lt_fd_macro_eta4(p, r1, r2, t) : lt_fd_macro(p, r1, r2, t);
        g *= closed ? lt_fd_femto_eta4(p, r1, r2, rf, t) : lt_fd_femto(p, r1, r2, rf, t);
        if (!ic)
            g /= 1.0 + t / gain * p_ratio * std::pow(rf, -eta);
        return g;
    };
    const Fn1 ylo = [](double) { return 0.0; };
    const Fn1 yhi = [](double) { return kTail; };
    const Fn2 zlo = [](double, double) { return 0.0; };
    const Fn2 zhi = [kappa](double a, double) { return std::min(kappa * a, kTail); };
    QuadResult q = integrate_3d(f, 0.0, kTail, ylo, yhi, zlo, zhi, opt.cfg_3d);
    q.value /= af;
    q.error /= af;
    return make_term(Phase::Blackout, q);
}

PhaseTerm ms_disregard_phase(const NetworkParams& p, double t, const CoverageOptions& opt)
{
    const double l1 = p.macro.intensity;
    const double l2 = p.femto.intensity;
    const double af = association_probability(p, Tier::Femto);
    if (l1 == 0.0 || af == 0.0)
        return make_term(Phase::MacroDisregard, QuadResult{});

    const double eta = p.path_loss_exponent;
    const double p_ratio = p.femto.tx_power / p.macro.tx_power;
    const double kappa = l2 * std::pow(p_ratio, p.delta()) / l1;
    const bool closed = opt.use_closed_forms;

    // a = pi l1 R1^2, c = pi l2 r1^2 <= kappa a; density e^-(a + c) / A_f.
    const Fn2 f = [&](double a, double c) {
        const double w = std::exp(-a - c);
        if (w == 0.0)
            return 0.0;
        const double r = std::sqrt(a / (kPi * l1));
        const double rf = std::sqrt(c / (kPi * l2));
        const double sp = t * std::pow(r, eta);  // s P1
        double g = w;
        if (p.noise_power != 0.0)
            g *= std::exp(-sp * p.noise_power / p.macro.tx_power);
        g *= closed ? lt_bc_eta4(p, BcLink::MacroServedMacroTier, r, t) : lt_bc(p, BcLink::MacroServedMacroTier, r, t);
        g *= closed ? lt_ms_disregard_femto_eta4(p, r, rf, t) : lt_ms_disregard_femto(p, r, rf, t);
        // The ignored femto still transmits.
        g /= 1.0 + sp * p_ratio * std::pow(rf, -eta);
        return g;
    };
    const Fn1 lo = [](double) { return 0.0; };
    const Fn1 hi = [kappa](double a) { return std::min(kappa * a, kTail); };
    QuadResult q = integrate_2d(f, 0.0, kTail, lo, hi, opt.cfg_2d);
    q.value /= af;
    q.error /= af;
    return make_term(Phase::MacroDisregard, q);
}

PhaseTerm ms_blackout_phase(const NetworkParams& p, double t, bool ic, const CoverageOptions& opt)
{
    const double l1 = p.macro.intensity;
    if (l1 == 0.0)
        return make_term(Phase::Blackout, QuadResult{});
    const double eta = p.path_loss_exponent;
    const bool closed = opt.use_closed_forms;

    // a = pi l1 R2^2, b = a + b' = pi l1 R3^2; density a e^-b.
    const Fn2 f = [&](double a, double bp) {
        const double w = a * std::exp(-(a + bp));
        if (w == 0.0)
            return 0.0;
        const double r2 = std::sqrt(a / (kPi * l1));
        const double r3 = std::sqrt((a + bp) / (kPi * l1));
        double g = w;
        if (p.noise_power != 0.0)
            g *= std::exp(-t * p.noise_power / (p.macro.tx_power * (std::pow(r2, -eta) + std::pow(r3, -eta))));
        g *= closed ? lt_ms_macro_eta4(p, r2, r3, t) : lt_ms_macro(p, r2, r3, t);
        g *= closed ? lt_ms_femto_eta4(p, r2, r3, t) : lt_ms_femto(p, r2, r3, t);
        if (!ic)
            g *= closed ? lt_ms_skipped_eta4(r2, r3, t) : lt_ms_skipped(p, r2, r3, t);
        return g;
    };
    const Fn1 lo = [](double) { return 0.0; };
    const Fn1 hi = [](double) { return kTail; };
    return make_term(Phase::Blackout, integrate_2d(f, 0.0, kTailPoly, lo, hi, opt.cfg_2d));
}

}  // namespace

PhaseTerm CoverageResult::term(Phase phase) const
{
    for (const PhaseTerm& t : breakdown)
        if (t.phase == phase)
            return t;
    PhaseTerm none;
    none.phase = phase;
    return none;
}

double coverage_bc_closed_form(double threshold)
{
    const double r = std::sqrt(threshold);
    return 1.0 / (1.0 + r * std::atan(r));
}

CoverageResult coverage_bc(const NetworkParams& params, double threshold, const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    return combine(params, Strategy::BC,
                   {bc_phase(params, Tier::Macro, threshold, opt), bc_phase(params, Tier::Femto, threshold, opt)});
}

CoverageResult coverage_fs_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    return single(fs_blackout_phase(params, threshold, ic, opt));
}

CoverageResult coverage_fs(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    std::vector<PhaseTerm> terms{bc_phase(params, Tier::Macro, threshold, opt),
                                 bc_phase(params, Tier::Femto, threshold, opt)};
    if (params.femto.intensity > 0.0)
        terms.push_back(fs_blackout_phase(params, threshold, ic, opt));
    return combine(params, Strategy::FS, std::move(terms));
}

CoverageResult coverage_fd_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    return single(fd_blackout_phase(params, threshold, ic, opt));
}

CoverageResult coverage_fd(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    std::vector<PhaseTerm> terms{bc_phase(params, Tier::Macro, threshold, opt)};
    if (params.femto.intensity > 0.0)
        terms.push_back(fd_blackout_phase(params, threshold, ic, opt));
    return combine(params, Strategy::FD, std::move(terms));
}

CoverageResult coverage_ms_nonblackout_disregard(const NetworkParams& params, double threshold,
                                                 const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    return single(ms_disregard_phase(params, threshold, opt));
}

CoverageResult coverage_ms_blackout(const NetworkParams& params, double threshold, bool ic,
                                    const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    return single(ms_blackout_phase(params, threshold, ic, opt));
}

CoverageResult coverage_ms(const NetworkParams& params, double threshold, bool ic, const CoverageOptions& opt)
{
    check_inputs(params, threshold, opt);
    std::vector<PhaseTerm> terms{bc_phase(params, Tier::Macro, threshold, opt)};
    if (params.femto.intensity > 0.0)
        terms.push_back(ms_disregard_phase(params, threshold, opt));
    terms.push_back(ms_blackout_phase(params, threshold, ic, opt));
    return combine(params, Strategy::MS, std::move(terms));
}

CoverageResult coverage(Strategy strategy, const NetworkParams& params, double threshold, bool ic,
                        const CoverageOptions& opt)
{
    switch (strategy) {
    case Strategy::BC: return coverage_bc(params, threshold, opt);
    case Strategy::FS: return coverage_fs(params, threshold, ic, opt);
    case Strategy::FD: return coverage_fd(params, threshold, ic, opt);
    case Strategy::MS: return coverage_ms(params, threshold, ic, opt);
    }
    throw std::logic_error("unknown strategy");
}

PhaseTerm conditional_coverage(Strategy strategy, Phase phase, const NetworkParams& params, double threshold,
                               bool ic, const CoverageOptions& opt)
{
    if (!phase_reachable(strategy, phase))
        throw std::invalid_argument("phase unreachable under this strategy");
    check_inputs(params, threshold, opt);
    PhaseTerm t;
    switch (phase) {
    case Phase::MacroServed: t = bc_phase(params, Tier::Macro, threshold, opt); break;
    case Phase::FemtoServed: t = bc_phase(params, Tier::Femto, threshold, opt); break;
    case Phase::MacroDisregard: t = ms_disregard_phase(params, threshold, opt); break;
    case Phase::Blackout:
        switch (strategy) {
        case Strategy::FS: t = fs_blackout_phase(params, threshold, ic, opt); break;
        case Strategy::FD: t = fd_blackout_phase(params, threshold, ic, opt); break;
        case Strategy::MS: t = ms_blackout_phase(params, threshold, ic, opt); break;
        case Strategy::BC: break;
        }
        break;
    }
    t.weight = phase_probabilities(params, strategy)[phase];
    return t;
}

}  // namespace hoskip
