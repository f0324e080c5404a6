#include "hoskip/sim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hoskip::sim {

namespace {

int tier_index(Tier t) { return t == Tier::Macro ? 0 : 1; }

struct Site {
    int id;
    Tier tier;
    double w;        // P^{-2/eta}
    double a, b, c;  // q(t) = a t^2 + b t + c = w |p(t) - site|^2
};

// Smallest t > t0 at which q_k - q_o turns negative, or +inf.
double first_takeover(double da, double db, double dc, double t0)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double eps = 1e-12;
    double best = inf;
    const auto consider = [&](double r) {
        if (r > t0 + eps && 2.0 * da * r + db < 0.0)
            best = std::min(best, r);
    };
    if (da == 0.0) {
        if (db < 0.0)
            consider(-dc / db);
        return best;
    }
    const double disc = db * db - 4.0 * da * dc;
    if (disc < 0.0)
        return inf;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (db + (db >= 0.0 ? sq : -sq));
    if (q != 0.0) {
        consider(q / da);
        consider(dc / q);
    } else {
        consider(0.0);
    }
    return best;
}

void check_inside(const NetworkRealization& r, const NetworkParams& params, const Trajectory& tr)
{
    if (!(tr.length_km > 0.0))
        throw std::invalid_argument("trajectory length must be positive");
    if (!(tr.velocity_kmh > 0.0))
        throw std::invalid_argument("trajectory velocity must be positive");
    const double limit = 0.5 * r.window - guard_margin(params) + 1e-9;
    for (const Point& p : {tr.start, tr.at(tr.length_km)})
        if (std::abs(p.x) > limit || std::abs(p.y) > limit)
            throw std::invalid_argument("trajectory leaves the guard-reduced window");
}

}  // namespace

Point Trajectory::at(double s_km) const
{
    return {start.x + s_km * std::cos(heading), start.y + s_km * std::sin(heading)};
}

long TrajectoryStats::total_handovers() const
{
    return handovers[0][0] + handovers[0][1] + handovers[1][0] + handovers[1][1];
}

long TrajectoryStats::total_crossings() const
{
    return crossings[0][0] + crossings[0][1] + crossings[1][0] + crossings[1][1];
}

std::vector<CellVisit> cell_sequence(const NetworkRealization& realization, const NetworkParams& params,
                                     const Trajectory& tr, bool macro_only)
{
    params.validate();
    check_inside(realization, params, tr);
    const double ux = std::cos(tr.heading), uy = std::sin(tr.heading);
    const double len = tr.length_km;
    const int n_macro = static_cast<int>(realization.macro.size());

    double w_min = std::numeric_limits<double>::infinity();
    double density = 0.0;
    for (Tier t : {Tier::Macro, Tier::Femto}) {
        if (macro_only && t == Tier::Femto)
            continue;
        if (!realization.tier(t).empty())
            w_min = std::min(w_min, std::pow(params.tier(t).tx_power, -params.delta()));
        density += params.tier(t).intensity;
    }
    if (!std::isfinite(w_min))
        throw std::invalid_argument("no base stations to associate with");

    // Only sites within `half_width` of the path are examined; the result is
    // accepted once no excluded site could beat any owner along the way.
    double half_width = 3.0 / std::sqrt(density);
    const double max_width = 2.0 * realization.window;
    for (;;) {
        std::vector<Site> sites;
        for (Tier t : {Tier::Macro, Tier::Femto}) {
            if (macro_only && t == Tier::Femto)
                continue;
            const double w = std::pow(params.tier(t).tx_power, -params.delta());
            const auto& pts = realization.tier(t);
            for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
                const double dx = tr.start.x - pts[i].x;
                const double dy = tr.start.y - pts[i].y;
                const double along = -(dx * ux + dy * uy);
                const double across = std::abs(dx * uy - dy * ux);
                if (across > half_width || along < -half_width || along > len + half_width)
                    continue;
                const int id = t == Tier::Macro ? i : n_macro + i;
                sites.push_back({id, t, w, w, 2.0 * w * (dx * ux + dy * uy), w * (dx * dx + dy * dy)});
            }
        }
        if (sites.empty()) {
            half_width *= 2.0;
            continue;
        }

        std::size_t owner = 0;
        for (std::size_t k = 1; k < sites.size(); ++k)
            if (sites[k].c < sites[owner].c)
                owner = k;

        std::vector<CellVisit> visits;
        double t = 0.0;
        double worst_q = sites[owner].c;
        for (;;) {
            const Site& o = sites[owner];
            double next_t = std::numeric_limits<double>::infinity();
            std::size_t next = owner;
            for (std::size_t k = 0; k < sites.size(); ++k) {
                if (k == owner)
                    continue;
                const Site& s = sites[k];
                const double r = first_takeover(s.a - o.a, s.b - o.b, s.c - o.c, t);
                if (r < next_t) {
                    next_t = r;
                    next = k;
                }
            }
            const double end = std::min(next_t, len);
            visits.push_back({o.id, o.tier, t, end});
            worst_q = std::max(worst_q, o.a * end * end + o.b * end + o.c);
            if (next_t >= len)
                break;
            t = next_t;
            owner = next;
        }
        if (worst_q < w_min * half_width * half_width || half_width >= max_width)
            return visits;
        half_width *= 2.0;
    }
}

TrajectoryStats simulate_trajectory(const NetworkRealization& realization, const NetworkParams& params,
                                    const Trajectory& tr, Strategy strategy)
{
    const std::vector<CellVisit> cells = cell_sequence(realization, params, tr);
    TrajectoryStats st;
    st.length_km = tr.length_km;
    st.duration_s = tr.duration_s();
    for (std::size_t i = 1; i < cells.size(); ++i)
        ++st.crossings[tier_index(cells[i - 1].tier)][tier_index(cells[i].tier)];

    const auto add = [&](Phase p, double span) { st.occupancy[static_cast<std::size_t>(p)] += span / tr.length_km; };
    const auto count_changes = [&](const std::vector<const CellVisit*>& serving) {
        for (std::size_t i = 1; i < serving.size(); ++i)
            if (serving[i]->site != serving[i - 1]->site)
                ++st.handovers[tier_index(serving[i - 1]->tier)][tier_index(serving[i]->tier)];
    };

    switch (strategy) {
    case Strategy::BC:
        st.handovers = st.crossings;
        for (const CellVisit& c : cells)
            add(c.tier == Tier::Macro ? Phase::MacroServed : Phase::FemtoServed, c.exit_km - c.enter_km);
        break;
    case Strategy::FS: {
        // The starting cell is connected; after that femto cells alternate
        // skipped, connected, skipped, ...
        std::vector<const CellVisit*> serving;
        bool skip_next_femto = true;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const CellVisit& c = cells[i];
            bool skipped = false;
            if (c.tier == Tier::Femto && i > 0) {
                skipped = skip_next_femto;
                skip_next_femto = !skip_next_femto;
            }
            const double span = c.exit_km - c.enter_km;
            if (skipped) {
                add(Phase::Blackout, span);
                continue;
            }
            add(c.tier == Tier::Macro ? Phase::MacroServed : Phase::FemtoServed, span);
            serving.push_back(&c);
        }
        count_changes(serving);
        break;
    }
    case Strategy::FD: {
        std::vector<const CellVisit*> serving;
        for (const CellVisit& c : cells) {
            const double span = c.exit_km - c.enter_km;
            if (c.tier == Tier::Femto) {
                add(Phase::Blackout, span);
                continue;
            }
            add(Phase::MacroServed, span);
            serving.push_back(&c);
        }
        count_changes(serving);
        break;
    }
    case Strategy::MS: {
        // Nearest-macro cells, every other one skipped after the first.
        const std::vector<CellVisit> macro_cells = cell_sequence(realization, params, tr, true);
        std::size_t j = 0;
        for (std::size_t i = 0; i < macro_cells.size(); ++i) {
            const CellVisit& m = macro_cells[i];
            if (i % 2 == 1) {
                add(Phase::Blackout, m.exit_km - m.enter_km);
                continue;
            }
            if (i >= 2)
                ++st.handovers[0][0];
            // Split the connected stretch by which tier is strongest.
            while (j < cells.size() && cells[j].exit_km <= m.enter_km)
                ++j;
            for (std::size_t k = j; k < cells.size() && cells[k].enter_km < m.exit_km; ++k) {
                const double span = std::min(cells[k].exit_km, m.exit_km) - std::max(cells[k].enter_km, m.enter_km);
                if (span > 0.0)
                    add(cells[k].tier == Tier::Macro ? Phase::MacroServed : Phase::MacroDisregard, span);
            }
        }
        break;
    }
    }
    return st;
}

double trajectory_window(const NetworkParams& params, double length_km)
{
    return length_km + 2.0 * guard_margin(params);
}

Trajectory random_trajectory(double length_km, double velocity_kmh, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Trajectory tr;
    tr.heading = angle(rng);
    tr.length_km = length_km;
    tr.velocity_kmh = velocity_kmh;
    tr.start = {-0.5 * length_km * std::cos(tr.heading), -0.5 * length_km * std::sin(tr.heading)};
    return tr;
}

}  // namespace hoskip::sim
