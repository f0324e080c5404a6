#include "hoskip/cli/runner.hpp"

#include "hoskip/coverage.hpp"
#include "hoskip/distances.hpp"
#include "hoskip/handover_cost.hpp"
#include "hoskip/laplace.hpp"
#include "hoskip/sim/coverage_mc.hpp"
#include "hoskip/specfun.hpp"
#include "hoskip/throughput.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace hoskip::cli {

namespace {

struct ComboKey {
    Strategy strategy;
    bool ic;
    bool operator<(const ComboKey& o) const
    {
        return std::tie(strategy, ic) < std::tie(o.strategy, o.ic);
    }
};

std::vector<ComboKey> combos(const RunConfig& cfg)
{
    std::vector<ComboKey> out;
    for (Strategy s : cfg.strategies) {
        if (s == Strategy::BC) {
            out.push_back({s, false});
            continue;
        }
        for (bool ic : cfg.ic_flags)
            out.push_back({s, ic});
    }
    std::vector<ComboKey> unique;
    for (const ComboKey& c : out)
        if (std::none_of(unique.begin(), unique.end(),
                         [&](const ComboKey& u) { return u.strategy == c.strategy && u.ic == c.ic; }))
            unique.push_back(c);
    return unique;
}

std::string num(double d)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", d);
    return buf;
}

}  // namespace

bool SweepResult::any_failure() const
{
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok(); });
}

SweepResult run(const RunConfig& cfg)
{
    cfg.validate();
    SweepResult result;
    result.config_hash = config_hash(cfg);
    const std::vector<ComboKey> keys = combos(cfg);

    std::vector<double> thresholds;
    for (double db : cfg.theta_db)
        thresholds.push_back(db_to_linear(db));

    std::map<ComboKey, sim::EmpiricalCoverage> mc;
    if (cfg.mc_samples > 0) {
        std::vector<sim::Combo> sc;
        for (const ComboKey& k : keys)
            sc.push_back({k.strategy, k.ic});
        sim::McOptions opt;
        opt.samples = cfg.mc_samples;
        opt.seed = cfg.seed;
        const auto emp = sim::empirical_coverage(cfg.network, sc, thresholds, opt);
        for (std::size_t i = 0; i < keys.size(); ++i)
            mc.emplace(keys[i], emp[i]);
    }

    CoverageCache cache(cfg.network);
    for (const ComboKey& k : keys) {
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
            const CoverageResult& cov = cache.get(k.strategy, thresholds[t], k.ic);
            for (double df : cfg.femto_ho_delays_s) {
                for (double v : cfg.velocities_kmh) {
                    SweepRow row;
                    row.strategy = k.strategy;
                    row.ic = k.ic;
                    row.theta_db = cfg.theta_db[t];
                    row.velocity_kmh = v;
                    row.femto_delay_s = df;
                    row.coverage_analytic = cov.value;
                    row.coverage_error = cov.numeric_error;
                    row.converged = cov.converged;

                    const MobilityProfile m{v, cfg.macro_ho_delay_s, df};
                    const ThroughputResult tp =
                        cache.throughput(k.strategy, m, cfg.bandwidth_hz, thresholds[t], k.ic);
                    row.d_ho = tp.handover.value;
                    row.ho_infeasible = tp.handover.infeasible;
                    row.rate = tp.achievable_rate;
                    row.throughput = tp.average_throughput;

                    if (auto it = mc.find(k); it != mc.end()) {
                        const sim::EmpiricalCoverage& e = it->second;
                        row.coverage_mc = e.fraction(t);
                        std::tie(row.mc_ci_low, row.mc_ci_high) = e.confidence_interval(t);
                        row.mc_std_error = e.std_error(t);
                        const double tol = std::max(cfg.mc_tolerance_floor, 3.0 * row.mc_std_error);
                        row.mc_ok = std::abs(*row.coverage_mc - row.coverage_analytic) <= tol;
                    }
                    if (auto it = cfg.expected_rates.find(rate_key(k.strategy, k.ic)); it != cfg.expected_rates.end()) {
                        row.expected_rate = it->second;
                        row.rate_ok = std::abs(row.rate - it->second) <= cfg.rate_tolerance;
                    }
                    result.rows.push_back(row);
                }
            }
        }
    }
    return result;
}

void write_csv(std::ostream& os, const SweepResult& r)
{
    os << "# config_hash=" << r.config_hash
       << "; coverage in [0,1]; rate in nats/s/Hz; throughput in nats/s; d_ho is the clamped time fraction; "
          "mc columns empty when Monte Carlo is off\n";
    os << "config_hash,strategy,ic,theta_db,v_kmh,d_f_s,coverage_analytic,coverage_error,converged,"
          "coverage_mc,mc_ci_low,mc_ci_high,mc_ok,d_ho,ho_infeasible,rate,throughput,expected_rate,rate_ok\n";
    for (const SweepRow& row : r.rows) {
        os << r.config_hash << ',' << to_string(row.strategy) << ',' << (row.ic ? 1 : 0) << ',' << num(row.theta_db)
           << ',' << num(row.velocity_kmh) << ',' << num(row.femto_delay_s) << ',' << num(row.coverage_analytic) << ','
           << num(row.coverage_error) << ',' << (row.converged ? 1 : 0) << ',';
        if (row.coverage_mc)
            os << num(*row.coverage_mc) << ',' << num(row.mc_ci_low) << ',' << num(row.mc_ci_high) << ',';
        else
            os << ",,,";
        os << (row.mc_ok ? 1 : 0) << ',' << num(row.d_ho) << ',' << (row.ho_infeasible ? 1 : 0) << ','
           << num(row.rate) << ',' << num(row.throughput) << ',';
        if (row.expected_rate)
            os << num(*row.expected_rate);
        os << ',' << (row.rate_ok ? 1 : 0) << '\n';
    }
}

void write_json(std::ostream& os, const SweepResult& r)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& row : r.rows) {
        nlohmann::ordered_json j;
        j["config_hash"] = r.config_hash;
        j["strategy"] = std::string(to_string(row.strategy));
        j["ic"] = row.ic;
        j["theta_db"] = row.theta_db;
        j["v_kmh"] = row.velocity_kmh;
        j["d_f_s"] = row.femto_delay_s;
        j["coverage_analytic"] = row.coverage_analytic;
        j["coverage_error"] = row.coverage_error;
        j["converged"] = row.converged;
        if (row.coverage_mc) {
            j["coverage_mc"] = *row.coverage_mc;
            j["mc_ci"] = {row.mc_ci_low, row.mc_ci_high};
        } else {
            j["coverage_mc"] = nullptr;
            j["mc_ci"] = nullptr;
        }
        j["mc_ok"] = row.mc_ok;
        j["d_ho"] = row.d_ho;
        j["ho_infeasible"] = row.ho_infeasible;
        j["rate"] = row.rate;
        j["throughput"] = row.throughput;
        j["expected_rate"] = row.expected_rate ? nlohmann::ordered_json(*row.expected_rate) : nullptr;
        j["rate_ok"] = row.rate_ok;
        rows.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["config_hash"] = r.config_hash;
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

bool ValidationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ValidationReport validate(const RunConfig& cfg)
{
    cfg.validate();
    const NetworkParams& p = cfg.network;
    const double eta = p.path_loss_exponent;
    ValidationReport rep;
    const auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        const double s = association_probability(p, Tier::Macro) + association_probability(p, Tier::Femto);
        add("association probabilities sum to 1", std::abs(s - 1.0) <= 1e-12, "sum=" + num(s));
        double worst = 0.0;
        for (Strategy st : kAllStrategies)
            worst = std::max(worst, std::abs(phase_probabilities(p, st).total() - 1.0));
        add("phase probabilities sum to 1", worst <= 1e-12, "max deviation=" + num(worst));
    }

    {
        double worst = 0.0;
        for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 10.0, 30.0, 100.0}) {
            const double lhs = 2.0 * t / (eta - 2.0) * hyp2f1_coverage(eta, t);
            const double rhs = 2.0 * std::pow(t, 2.0 / eta) * tail_interference_integral(eta, std::pow(t, -1.0 / eta));
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        add("hypergeometric kernel matches tail integral", worst <= 1e-8, "max rel diff=" + num(worst));
    }

    if (eta == 4.0 && p.noise_power == 0.0) {
        double worst = 0.0;
        for (double db : {-5.0, 0.0, 6.0, 10.0}) {
            const double t = db_to_linear(db);
            worst = std::max(worst, std::abs(coverage_bc(p, t).value - coverage_bc_closed_form(t)));
        }
        add("best-connected coverage equals closed form", worst <= 1e-6, "max abs diff=" + num(worst));
    }

    if (eta == 4.0) {
        double worst = 0.0;
        for (double r : {0.03, 0.1, 0.3})
            for (double t : {0.1, 1.0, 4.0, 20.0}) {
                const double r2 = 1.7 * r, r3 = 2.3 * r;
                const std::array<std::pair<double, double>, 8> pairs{{
                    {lt_bc(p, BcLink::MacroServedFemtoTier, r, t), lt_bc_eta4(p, BcLink::MacroServedFemtoTier, r, t)},
                    {lt_bc(p, BcLink::FemtoServedMacroTier, r, t), lt_bc_eta4(p, BcLink::FemtoServedMacroTier, r, t)},
                    {lt_fs_skipped(p, r, r2, t), lt_fs_skipped_eta4(r, r2, t)},
                    {lt_fs_aggregate(p, r, r2, t), lt_fs_aggregate_eta4(p, r, r2, t)},
                    {lt_fd_macro(p, r, r2, t), lt_fd_macro_eta4(p, r, r2, t)},
                    {lt_fd_femto(p, r, r2, 0.5 * r, t), lt_fd_femto_eta4(p, r, r2, 0.5 * r, t)},
                    {lt_ms_skipped(p, r2, r3, t), lt_ms_skipped_eta4(r2, r3, t)},
                    {lt_ms_femto(p, r2, r3, t), lt_ms_femto_eta4(p, r2, r3, t)},
                }};
                for (const auto& [g, c] : pairs)
                    worst = std::max(worst, std::abs(g - c));
            }
        add("closed-form transforms match general forms", worst <= 1e-9, "max abs diff=" + num(worst));
    }

    {
        IntegrationConfig c1;
        c1.rel_tol = 1e-10;
        const double inf = std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (Tier t : {Tier::Macro, Tier::Femto})
            if (association_probability(p, t) > 0.0)
                worst = std::max(worst, std::abs(integrate_1d([&](double r) { return service_distance_pdf_bc(p, t, r); },
                                                              0.0, inf, c1)
                                                     .value -
                                                 1.0));
        const auto fs = blackout_distance_pdfs_fs(p);
        const auto ms = blackout_distance_pdfs_ms(p);
        IntegrationConfig c2 = IntegrationConfig::for_dimension(2);
        c2.rel_tol = 1e-9;
        const Fn1 zero = [](double) { return 0.0; };
        const Fn1 ident = [](double x) { return x; };
        const Fn1 to_inf = [&](double) { return inf; };
        worst = std::max(worst, std::abs(integrate_2d([&](double y, double x) { return fs.cooperating_joint(x, y); },
                                                      0.0, inf, zero, ident, c2)
                                             .value -
                                         1.0));
        worst = std::max(worst, std::abs(integrate_2d([&](double x, double y) { return ms.serving_joint(x, y); }, 0.0,
                                                      inf, ident, to_inf, c2)
                                             .value -
                                         1.0));
        if (p.macro.intensity > 0.0 && association_probability(p, Tier::Femto) > 0.0) {
            const auto fd = blackout_distance_pdfs_fd(p);
            worst = std::max(worst, std::abs(integrate_2d([&](double x, double y) { return fd.serving_joint(x, y); },
                                                          0.0, inf, ident, to_inf, c2)
                                                 .value -
                                             1.0));
            worst = std::max(
                worst,
                std::abs(integrate_1d([&](double x) { return ms.disregard_marginal(x); }, 0.0, inf, c1).value - 1.0));
        }
        add("distance densities integrate to 1", worst <= 1e-6, "max deviation=" + num(worst));
    }

    std::vector<double> thresholds;
    for (double db : cfg.theta_db)
        thresholds.push_back(db_to_linear(db));
    std::sort(thresholds.begin(), thresholds.end());

    {
        bool bounded = true, monotone = true, dominance = true, converged = true;
        for (Strategy s : kAllStrategies) {
            std::map<bool, std::vector<double>> vals;
            for (bool ic : {false, true}) {
                double prev = 2.0;
                for (double t : thresholds) {
                    const CoverageResult c = coverage(s, p, t, ic);
                    converged = converged && c.converged;
                    bounded = bounded && c.value >= -c.numeric_error && c.value <= 1.0 + c.numeric_error;
                    monotone = monotone && c.value <= prev + c.numeric_error;
                    prev = c.value;
                    vals[ic].push_back(c.value);
                }
            }
            for (std::size_t i = 0; i < thresholds.size(); ++i)
                dominance = dominance && vals[true][i] >= vals[false][i] - 1e-9;
        }
        add("coverage integrals converge", converged, "");
        add("coverage within [0, 1]", bounded, "");
        add("coverage non-increasing in threshold", monotone, "");
        add("interference cancellation never lowers coverage", dominance, "");
    }

    {
        bool ordered = true;
        double worst_lin = 0.0;
        for (double df : cfg.femto_ho_delays_s)
            for (double v = 0.0; v <= 200.0; v += 10.0) {
                const MobilityProfile m{v, cfg.macro_ho_delay_s, df};
                const MobilityProfile m2{2.0 * v, cfg.macro_ho_delay_s, df};
                std::array<double, 4> d{};
                for (std::size_t i = 0; i < 4; ++i) {
                    d[i] = handover_cost(kAllStrategies[i], p, m).raw;
                    const double d2 = handover_cost(kAllStrategies[i], p, m2).raw;
                    if (d[i] > 0.0)
                        worst_lin = std::max(worst_lin, std::abs(d2 / (2.0 * d[i]) - 1.0));
                }
                // kAllStrategies order: BC, FS, FD, MS.
                ordered = ordered && d[3] <= d[2] && d[2] <= d[1] && d[1] <= d[0];
            }
        add("handover cost ordering MS <= FD <= FS <= BC", ordered, "");
        add("handover cost linear in velocity", worst_lin <= 1e-12, "max rel deviation=" + num(worst_lin));
    }

    {
        sim::McOptions opt;
        opt.samples = cfg.mc_samples > 0 ? cfg.mc_samples : 20000;
        opt.seed = cfg.seed;
        const auto combos_all = sim::all_combos();
        const auto emp = sim::empirical_coverage(p, combos_all, thresholds, opt);
        double worst = 0.0;
        std::string where;
        for (const auto& e : emp)
            for (std::size_t i = 0; i < thresholds.size(); ++i) {
                const double a = coverage(e.strategy, p, thresholds[i], e.ic).value;
                const double tol = std::max(cfg.mc_tolerance_floor, 3.0 * e.std_error(i));
                const double ratio = std::abs(e.fraction(i) - a) / tol;
                if (ratio > worst) {
                    worst = ratio;
                    where = rate_key(e.strategy, e.ic) + " at " + num(linear_to_db(thresholds[i])) + " dB";
                }
            }
        add("analysis matches Monte Carlo", worst <= 1.0,
            "n=" + std::to_string(opt.samples) + ", worst |diff|/tol=" + num(worst) + " (" + where + ")");
    }
    return rep;
}

}  // namespace hoskip::cli
