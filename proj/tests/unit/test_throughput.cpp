#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoskip/core_model.hpp"
#include "hoskip/coverage.hpp"
#include "hoskip/handover_cost.hpp"
#include "hoskip/throughput.hpp"

#include <cmath>
#include <vector>

using namespace hoskip;

namespace {
const double kTheta = db_to_linear(6.0);
const double kW = 10e6;

struct RateEntry {
    Strategy s;
    bool ic;
    double reference;
};
}  // namespace

TEST_CASE("achievable rates at 6 dB")
{
    const NetworkParams p = reference_network();
    const RateEntry entries[] = {
        {Strategy::BC, false, 0.50}, {Strategy::FS, false, 0.40}, {Strategy::FS, true, 0.46},
        {Strategy::FD, false, 0.29}, {Strategy::FD, true, 0.36}, {Strategy::MS, false, 0.15},
        {Strategy::MS, true, 0.20},
    };
    for (const RateEntry& e : entries) {
        CAPTURE(to_string(e.s));
        CAPTURE(e.ic);
        const double r = achievable_rate(e.s, p, kTheta, e.ic);
        CHECK(std::abs(r - e.reference) <= 0.02);
        CHECK(r == doctest::Approx(std::log1p(kTheta) * coverage(e.s, p, kTheta, e.ic).value).epsilon(1e-14));
    }
    CHECK(achievable_rate(Strategy::BC, p, kTheta, false) ==
          doctest::Approx(std::log1p(kTheta) * coverage_bc_closed_form(kTheta)).epsilon(1e-6));
}

TEST_CASE("zero threshold carries no rate")
{
    for (Strategy s : kAllStrategies)
        CHECK(achievable_rate(s, reference_network(), 0.0, true) == 0.0);
}

TEST_CASE("average throughput")
{
    const NetworkParams p = reference_network();
    const ThroughputResult still = average_throughput(Strategy::FS, p, {0.0, 0.35, 0.7}, kW, kTheta, true);
    CHECK(still.average_throughput == doctest::Approx(kW * still.achievable_rate).epsilon(1e-14));
    CHECK(still.handover.value == 0.0);
    CHECK(still.strategy == Strategy::FS);
    CHECK(still.ic);

    const ThroughputResult moving = average_throughput(Strategy::BC, p, {90.0, 0.35, 0.7}, kW, kTheta, false);
    CHECK(moving.average_throughput ==
          doctest::Approx(kW * moving.achievable_rate * (1.0 - moving.handover.value)).epsilon(1e-14));
    CHECK(moving.velocity_kmh == 90.0);

    const ThroughputResult stuck = average_throughput(Strategy::BC, p, {3000.0, 1.0, 5.0}, kW, kTheta, false);
    CHECK(stuck.handover.infeasible);
    CHECK(stuck.average_throughput == 0.0);
}

TEST_CASE("cache reuses coverage across velocities")
{
    CoverageCache cache(reference_network());
    const CoverageResult& a = cache.get(Strategy::FD, kTheta, true);
    const CoverageResult& b = cache.get(Strategy::FD, kTheta, true);
    CHECK(&a == &b);
    // Best connected ignores the cancellation flag.
    CHECK(&cache.get(Strategy::BC, kTheta, true) == &cache.get(Strategy::BC, kTheta, false));
    const ThroughputResult t = cache.throughput(Strategy::FD, {70.0, 0.35, 0.7}, kW, kTheta, true);
    const ThroughputResult d = average_throughput(Strategy::FD, reference_network(), {70.0, 0.35, 0.7}, kW, kTheta, true);
    CHECK(t.average_throughput == doctest::Approx(d.average_throughput).epsilon(1e-14));
}

TEST_CASE("best strategy across velocities")
{
    CoverageCache cache(reference_network());
    std::vector<MobilityProfile> grid;
    for (double v = 0.0; v <= 200.0; v += 20.0)
        grid.push_back({v, 0.35, 1.05});
    // Where the femto disregard cost reaches 0.9, only macro skipping is left.
    const double fd_slope = handover_cost(Strategy::FD, cache.params(), {1.0, 0.35, 1.05}).raw;
    grid.push_back({0.9 / fd_slope, 0.35, 1.05});
    const std::vector<BestStrategyRow> rows = best_strategy(cache, grid, kW, kTheta, true);
    REQUIRE(rows.size() == grid.size());

    CHECK(rows.front().best == Strategy::BC);
    CHECK(rows.back().best == Strategy::MS);
    for (const BestStrategyRow& row : rows) {
        REQUIRE(row.all.size() == kAllStrategies.size());
        double top = 0.0;
        for (const ThroughputResult& t : row.all)
            top = std::max(top, t.average_throughput);
        CHECK(row.all[static_cast<std::size_t>(row.best)].average_throughput == top);
    }

    // Femto skipping overtakes best connected exactly once on this grid.
    int sign_changes = 0;
    double prev = 0.0;
    for (const BestStrategyRow& row : rows) {
        const double diff = row.all[1].average_throughput - row.all[0].average_throughput;
        if (prev < 0.0 && diff > 0.0)
            ++sign_changes;
        CHECK_FALSE((prev > 0.0 && diff < 0.0));
        if (diff != 0.0)
            prev = diff;
    }
    CHECK(sign_changes == 1);
}
