#include "hoskip/sim/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hoskip::sim {

namespace {

struct Station {
    double power;  // P d^-eta
    double fade;   // |g|^2
    double phase;  // arg g, drawn only for serving candidates
    Tier tier;
};

struct Draw {
    std::vector<Station> bs;
    std::vector<int> by_power;  // top three overall
    std::vector<int> macros;    // top three macros
    int nearest_femto{-1};
    double total{0.0};
    bool fs_skip{false};
    bool ms_blackout{false};
    double fresh_exp{0.0};
};

void keep_top(std::vector<int>& top, int idx, const std::vector<Station>& bs)
{
    auto it = std::find_if(top.begin(), top.end(), [&](int k) { return bs[idx].power > bs[k].power; });
    top.insert(it, idx);
    if (top.size() > 3)
        top.pop_back();
}

Draw draw(const NetworkRealization& r, const NetworkParams& p, std::mt19937_64& rng, const SinrOptions& opt)
{
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double half_eta = p.path_loss_exponent / 2.0;
    const double half_window = opt.truncation_window > 0.0 ? 0.5 * opt.truncation_window : 0.0;

    Draw d;
    d.bs.reserve(r.macro.size() + r.femto.size());
    for (Tier t : {Tier::Macro, Tier::Femto}) {
        const double tx = p.tier(t).tx_power;
        for (const Point& pt : r.tier(t)) {
            const double fade = expo(rng);
            if (half_window > 0.0 && (std::abs(pt.x) > half_window || std::abs(pt.y) > half_window))
                continue;
            const double d2 = pt.x * pt.x + pt.y * pt.y;
            d.bs.push_back({tx * std::pow(d2, -half_eta), fade, 0.0, t});
        }
    }
    for (int k = 0; k < static_cast<int>(d.bs.size()); ++k) {
        const Station& s = d.bs[k];
        d.total += s.power * s.fade;
        keep_top(d.by_power, k, d.bs);
        if (s.tier == Tier::Macro)
            keep_top(d.macros, k, d.bs);
        else if (d.nearest_femto < 0 || s.power > d.bs[d.nearest_femto].power)
            d.nearest_femto = k;
    }
    // Phases for the few stations that can serve cooperatively.
    for (int k : d.by_power)
        d.bs[k].phase = 2.0 * std::numbers::pi * unit(rng);
    for (int k : d.macros)
        d.bs[k].phase = 2.0 * std::numbers::pi * unit(rng);
    d.fs_skip = unit(rng) < 0.5;
    d.ms_blackout = unit(rng) < 0.5;
    d.fresh_exp = expo(rng);
    return d;
}

double single_link(const Draw& d, int k, double noise, int cancelled)
{
    const Station& s = d.bs[k];
    double interference = d.total - s.power * s.fade;
    if (cancelled >= 0)
        interference -= d.bs[cancelled].power * d.bs[cancelled].fade;
    return s.power * s.fade / (std::max(interference, 0.0) + noise);
}

double joint_link(const Draw& d, int i, int j, double noise, int cancelled, CompModel comp)
{
    const Station& a = d.bs[i];
    const Station& b = d.bs[j];
    double signal;
    if (comp == CompModel::Exponential) {
        signal = (a.power + b.power) * d.fresh_exp;
    } else {
        signal = a.power * a.fade + b.power * b.fade +
                 2.0 * std::sqrt(a.power * a.fade * b.power * b.fade) * std::cos(a.phase - b.phase);
    }
    double interference = d.total - a.power * a.fade - b.power * b.fade;
    if (cancelled >= 0)
        interference -= d.bs[cancelled].power * d.bs[cancelled].fade;
    return std::max(signal, 0.0) / (std::max(interference, 0.0) + noise);
}

std::optional<SinrSample> evaluate(const Draw& d, const NetworkParams& p, Combo c, CompModel comp)
{
    const double noise = p.noise_power;
    SinrSample out;
    out.strategy = c.strategy;
    out.ic = c.strategy == Strategy::BC ? false : c.ic;
    if (d.by_power.empty())
        return std::nullopt;
    const int best = d.by_power[0];
    const bool femto_best = d.bs[best].tier == Tier::Femto;

    switch (c.strategy) {
    case Strategy::BC:
        out.phase = femto_best ? Phase::FemtoServed : Phase::MacroServed;
        out.sinr = single_link(d, best, noise, -1);
        return out;
    case Strategy::FS:
        if (!femto_best || !d.fs_skip) {
            out.phase = femto_best ? Phase::FemtoServed : Phase::MacroServed;
            out.sinr = single_link(d, best, noise, -1);
            return out;
        }
        if (d.by_power.size() < 3)
            return std::nullopt;
        out.phase = Phase::Blackout;
        out.sinr = joint_link(d, d.by_power[1], d.by_power[2], noise, c.ic ? best : -1, comp);
        return out;
    case Strategy::FD:
        if (!femto_best) {
            out.phase = Phase::MacroServed;
            out.sinr = single_link(d, best, noise, -1);
            return out;
        }
        if (d.macros.size() < 2)
            return std::nullopt;
        out.phase = Phase::Blackout;
        out.sinr = joint_link(d, d.macros[0], d.macros[1], noise, c.ic ? d.nearest_femto : -1, comp);
        return out;
    case Strategy::MS:
        if (d.ms_blackout) {
            if (d.macros.size() < 3)
                return std::nullopt;
            out.phase = Phase::Blackout;
            out.sinr = joint_link(d, d.macros[1], d.macros[2], noise, c.ic ? d.macros[0] : -1, comp);
            return out;
        }
        if (d.macros.empty())
            return std::nullopt;
        out.phase = femto_best ? Phase::MacroDisregard : Phase::MacroServed;
        out.sinr = single_link(d, d.macros[0], noise, -1);
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Combo> all_combos()
{
    std::vector<Combo> c{{Strategy::BC, false}};
    for (Strategy s : {Strategy::FS, Strategy::FD, Strategy::MS})
        for (bool ic : {false, true})
            c.push_back({s, ic});
    return c;
}

std::vector<std::optional<SinrSample>> stationary_sinr_all(const NetworkRealization& realization,
                                                           const NetworkParams& params,
                                                           const std::vector<Combo>& combos, std::mt19937_64& rng,
                                                           const SinrOptions& opt)
{
    const Draw d = draw(realization, params, rng, opt);
    std::vector<std::optional<SinrSample>> out;
    out.reserve(combos.size());
    for (const Combo& c : combos)
        out.push_back(evaluate(d, params, c, opt.comp));
    return out;
}

std::optional<SinrSample> stationary_sinr(const NetworkRealization& realization, const NetworkParams& params,
                                          Strategy strategy, bool ic, std::mt19937_64& rng, const SinrOptions& opt)
{
    return stationary_sinr_all(realization, params, {{strategy, ic}}, rng, opt).front();
}

}  // namespace hoskip::sim
