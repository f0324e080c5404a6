#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoskip/core_model.hpp"
#include "hoskip/handover_cost.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace hoskip;

namespace {
constexpr double kPi = std::numbers::pi;

// int_0^pi sqrt(x^2 + 1 - 2x cos t) dt = 2 (1 + x) E(2 sqrt(x) / (1 + x)).
double shape_oracle(double x)
{
    const double k = 2.0 * std::sqrt(x) / (1.0 + x);
    return 2.0 * (1.0 + x) * std::comp_ellint_2(k) / (x * x);
}

NetworkParams single_tier(double lambda)
{
    NetworkParams p = reference_network();
    p.macro.intensity = lambda;
    p.femto.intensity = 0.0;
    return p;
}

bool rel_close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("shape factor")
{
    CHECK(boundary_shape_factor(1.0) == 4.0);
    for (double x : {0.05, 0.3, 0.5, 0.99, 1.01, 2.0, 3.16, 20.0})
        CHECK(boundary_shape_factor(x) == doctest::Approx(shape_oracle(x)).epsilon(1e-11));
    // Swapping the ratio: F(1/x) = x^3 F(x).
    for (double x : {0.5, 2.0, 3.7})
        CHECK(boundary_shape_factor(1.0 / x) == doctest::Approx(x * x * x * boundary_shape_factor(x)).epsilon(1e-11));
    CHECK(boundary_shape_factor(1.0 + 1e-9) == doctest::Approx(4.0).epsilon(1e-8));
    CHECK_THROWS_AS(boundary_shape_factor(0.0), std::domain_error);
    CHECK_THROWS_AS(boundary_shape_factor(-1.0), std::domain_error);
}

TEST_CASE("single-tier boundary length is 2 sqrt(lambda)")
{
    for (double lambda : {1.0, 30.0, 250.0}) {
        const NetworkParams p = single_tier(lambda);
        CHECK(boundary_length_density(p, Tier::Macro, Tier::Macro) == doctest::Approx(2.0 * std::sqrt(lambda)));
        CHECK(boundary_length_density(p, Tier::Macro, Tier::Femto) == 0.0);
        CHECK(boundary_length_density(p, Tier::Femto, Tier::Femto) == 0.0);
    }
}

TEST_CASE("single-tier crossing rate")
{
    const HandoverRates h = handover_rates(single_tier(30.0), 100.0);
    const double expected = 4.0 * (100.0 / 3600.0) * std::sqrt(30.0) / kPi;
    CHECK(h(Tier::Macro, Tier::Macro) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(h(Tier::Macro, Tier::Macro) == doctest::Approx(0.1937).epsilon(2e-4));
    CHECK(h(Tier::Femto, Tier::Macro) == 0.0);
}

TEST_CASE("boundary density is symmetric and rates are non-negative")
{
    const NetworkParams p = reference_network();
    CHECK(boundary_length_density(p, Tier::Macro, Tier::Femto) ==
          boundary_length_density(p, Tier::Femto, Tier::Macro));
    const HandoverRates h = handover_rates(p, 60.0);
    for (Tier i : {Tier::Macro, Tier::Femto})
        for (Tier j : {Tier::Macro, Tier::Femto})
            CHECK(h(i, j) > 0.0);
    CHECK(h(Tier::Macro, Tier::Femto) == h(Tier::Femto, Tier::Macro));
    CHECK_THROWS_AS(handover_rates(p, -1.0), std::invalid_argument);
}

TEST_CASE("equal tiers behave as one merged tier")
{
    NetworkParams p = reference_network();
    p.macro = {20.0, 1.0};
    p.femto = {20.0, 1.0};
    const HandoverRates h = handover_rates(p, 100.0);
    double total = 0.0;
    for (Tier i : {Tier::Macro, Tier::Femto})
        for (Tier j : {Tier::Macro, Tier::Femto})
            total += h(i, j);
    const HandoverRates merged = handover_rates(single_tier(40.0), 100.0);
    CHECK(total == doctest::Approx(merged(Tier::Macro, Tier::Macro)).epsilon(1e-12));
}

TEST_CASE("cost ordering and structure")
{
    const NetworkParams p = reference_network();
    for (double v = 0.0; v <= 200.0; v += 5.0) {
        const MobilityProfile m{v, 0.35, 0.7};
        const double bc = handover_cost(Strategy::BC, p, m).raw;
        const double fs = handover_cost(Strategy::FS, p, m).raw;
        const double fd = handover_cost(Strategy::FD, p, m).raw;
        const double ms = handover_cost(Strategy::MS, p, m).raw;
        CHECK(ms <= fd);
        CHECK(fd <= fs);
        CHECK(fs <= bc);
        CHECK(ms == 0.5 * fd);
    }
    const MobilityProfile still{0.0, 0.35, 0.7};
    for (Strategy s : kAllStrategies)
        CHECK(handover_cost(s, p, still).value == 0.0);
}

TEST_CASE("cost is linear in velocity")
{
    const NetworkParams p = reference_network();
    for (Strategy s : kAllStrategies) {
        const double slope = handover_cost(s, p, {1.0, 0.35, 0.7}).raw;
        for (double v : {7.0, 50.0, 120.0, 200.0})
            CHECK(rel_close(handover_cost(s, p, {v, 0.35, 0.7}).raw, v * slope, 1e-12));
    }
}

TEST_CASE("cost scales with the delays")
{
    const NetworkParams p = reference_network();
    const HandoverRates h = handover_rates(p, 80.0);
    const double h11 = h(Tier::Macro, Tier::Macro);
    const double femto = h(Tier::Macro, Tier::Femto) + h(Tier::Femto, Tier::Macro) + h(Tier::Femto, Tier::Femto);
    const MobilityProfile m{80.0, 0.3, 0.9};
    CHECK(handover_cost(Strategy::BC, p, m).raw == doctest::Approx(0.3 * h11 + 0.9 * femto).epsilon(1e-14));
    CHECK(handover_cost(Strategy::FS, p, m).raw == doctest::Approx(0.3 * h11 + 0.45 * femto).epsilon(1e-14));
    CHECK(handover_cost(Strategy::FD, p, m).raw == doctest::Approx(0.3 * h11).epsilon(1e-14));
}

TEST_CASE("infeasible cost is clamped and flagged")
{
    const NetworkParams p = reference_network();
    const HandoverCost c = handover_cost(Strategy::BC, p, {2000.0, 2.0, 5.0});
    CHECK(c.raw > 1.0);
    CHECK(c.value == 1.0);
    CHECK(c.infeasible);
    const HandoverCost ok = handover_cost(Strategy::MS, p, {50.0, 0.35, 0.7});
    CHECK_FALSE(ok.infeasible);
    CHECK(ok.value == ok.raw);
    CHECK_THROWS_AS(handover_cost(Strategy::BC, p, {50.0, 0.7, 0.35}), std::invalid_argument);
}
