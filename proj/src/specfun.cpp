#include "hoskip/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hoskip {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Fn1& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        resk += kWgk[j] * s;
        if (j % 2 == 1)
            resg += kWg[j / 2] * s;
    }
    resk *= h;
    resg *= h;
    const double err = std::abs(resk - resg);
    return {a, b, resk, err};
}

QuadResult integrate_finite(const Fn1& f, double a, double b, const IntegrationConfig& cfg)
{
    QuadResult out;
    if (a == b)
        return out;

    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double total_err = first.error;
    heap.push(first);

    int subdivisions = 0;
    const double min_width = std::abs(b - a) * 1e-13;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (subdivisions >= cfg.max_subdivisions) {
            out.converged = false;
            break;
        }
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) < min_width) {
            out.converged = false;
            break;
        }
        heap.pop();
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the drift from incremental updates.
    double v = 0.0, e = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    out.value = v;
    out.error = e;
    if (!std::isfinite(v))
        out.converged = false;
    return out;
}

}  // namespace

IntegrationConfig IntegrationConfig::for_dimension(int dim)
{
    IntegrationConfig cfg;
    switch (dim) {
    case 1: cfg.rel_tol = 1e-8; break;
    case 2: cfg.rel_tol = 1e-6; break;
    default: cfg.rel_tol = 1e-5; break;
    }
    return cfg;
}

void IntegrationConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("integration tolerances must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max subdivisions must be at least 1");
}

QuadResult integrate_1d(const Fn1& f, double a, double b, const IntegrationConfig& cfg)
{
    cfg.validate();
    if (std::isinf(b)) {
        if (b < 0.0 || std::isinf(a))
            throw std::invalid_argument("only [a, +inf) semi-infinite ranges are supported");
        if (!cfg.map_infinite_tail)
            throw std::invalid_argument("infinite upper limit requires map_infinite_tail");
        const Fn1 mapped = [&f, a](double t) {
            const double one_minus = 1.0 - t;
            const double x = a + t / one_minus;
            const double v = f(x);
            return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
        };
        return integrate_finite(mapped, 0.0, 1.0, cfg);
    }
    if (b < a) {
        QuadResult r = integrate_finite(f, b, a, cfg);
        r.value = -r.value;
        return r;
    }
    return integrate_finite(f, a, b, cfg);
}

QuadResult integrate_2d(const Fn2& f, double a, double b, const Fn1& ylo, const Fn1& yhi,
                        const IntegrationConfig& cfg)
{
    IntegrationConfig inner_cfg = cfg;
    inner_cfg.rel_tol = cfg.rel_tol * 0.1;
    inner_cfg.abs_tol = cfg.abs_tol * 0.1;

    bool inner_ok = true;
    double inner_err_sum = 0.0;
    double inner_abs_sum = 0.0;
    long inner_evals = 0;
    const Fn1 outer = [&](double x) {
        const Fn1 g = [&f, x](double y) { return f(x, y); };
        const QuadResult r = integrate_1d(g, ylo(x), yhi(x), inner_cfg);
        inner_ok = inner_ok && r.converged;
        inner_evals += r.evaluations;
        inner_err_sum += r.error;
        inner_abs_sum += std::abs(r.value);
        return r.value;
    };
    QuadResult res = integrate_1d(outer, a, b, cfg);
    // Inner errors enter as their value-weighted mean relative error.
    if (inner_abs_sum > 0.0)
        res.error += inner_err_sum / inner_abs_sum * std::abs(res.value);
    res.converged = res.converged && inner_ok;
    res.evaluations = inner_evals;
    return res;
}

QuadResult integrate_3d(const Fn3& f, double a, double b, const Fn1& ylo, const Fn1& yhi,
                        const Fn2& zlo, const Fn2& zhi, const IntegrationConfig& cfg)
{
    IntegrationConfig inner_cfg = cfg;
    inner_cfg.rel_tol = cfg.rel_tol * 0.1;
    inner_cfg.abs_tol = cfg.abs_tol * 0.1;

    bool inner_ok = true;
    double inner_err_sum = 0.0;
    double inner_abs_sum = 0.0;
    long inner_evals = 0;
    const Fn1 outer = [&](double x) {
        const Fn2 g = [&f, x](double y, double z) { return f(x, y, z); };
        const Fn1 zl = [&zlo, x](double y) { return zlo(x, y); };
        const Fn1 zh = [&zhi, x](double y) { return zhi(x, y); };
        const QuadResult r = integrate_2d(g, ylo(x), yhi(x), zl, zh, inner_cfg);
        inner_ok = inner_ok && r.converged;
        inner_evals += r.evaluations;
        inner_err_sum += r.error;
        inner_abs_sum += std::abs(r.value);
        return r.value;
    };
    QuadResult res = integrate_1d(outer, a, b, cfg);
    // Inner errors enter as their value-weighted mean relative error.
    if (inner_abs_sum > 0.0)
        res.error += inner_err_sum / inner_abs_sum * std::abs(res.value);
    res.converged = res.converged && inner_ok;
    res.evaluations = inner_evals;
    return res;
}

double hyp2f1_coverage(double eta, double z)
{
    if (!(eta > 2.0))
        throw std::domain_error("path loss exponent must exceed 2");
    if (!(z >= 0.0))
        throw std::domain_error("hypergeometric argument -z requires z >= 0");
    if (z == 0.0)
        return 1.0;

    if (eta == 4.0) {
        if (z < 1e-8)
            return 1.0 - z / 3.0 + z * z / 5.0;
        const double r = std::sqrt(z);
        return std::atan(r) / r;
    }

    const double b = 1.0 - 2.0 / eta;  // second parameter; c = b + 1
    constexpr double eps = std::numeric_limits<double>::epsilon() * 0.25;

    if (z <= 2.0) {
        // Pfaff: 2F1(1, b; b+1; -z) = (1+z)^-1 2F1(1, 1; b+1; w), w = z/(1+z) <= 2/3.
        const double w = z / (1.0 + z);
        const double c = b + 1.0;
        double term = 1.0;
        double sum = 1.0;
        for (int n = 0; n < 2000; ++n) {
            term *= (n + 1.0) / (c + n) * w;
            sum += term;
            if (term < eps * sum)
                break;
        }
        return sum / (1.0 + z);
    }

    // b z^-b pi / sin(pi b) - b sum_n (-1)^n z^{-1-n} / (n + 1 - b), z > 2.
    const double lead = b * std::pow(z, -b) * std::numbers::pi / std::sin(std::numbers::pi * b);
    double zpow = 1.0 / z;
    double sum = 0.0;
    for (int n = 0; n < 2000; ++n) {
        const double t = zpow / (n + 1.0 - b);
        sum += (n % 2 == 0) ? t : -t;
        if (t < eps * std::abs(sum))
            break;
        zpow /= z;
    }
    return lead - b * sum;
}

double tail_interference_integral(double eta, double a)
{
    if (!(eta > 2.0))
        throw std::domain_error("path loss exponent must exceed 2");
    if (!(a >= 0.0))
        throw std::domain_error("lower limit must be non-negative");
    IntegrationConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-300;
    cfg.max_subdivisions = 2000;
    const Fn1 f = [eta](double w) { return w / (1.0 + std::pow(w, eta)); };
    // Beyond w = 1 substitute u = w^{2-eta}: the tail becomes a smooth
    // integral over (0, a^{2-eta}] instead of a slowly decaying power law.
    const double k = eta / (eta - 2.0);
    const auto tail = [&](double lo) {
        const double hi = std::pow(lo, 2.0 - eta);
        return integrate_1d([k](double u) { return 1.0 / (1.0 + std::pow(u, k)); }, 0.0, hi, cfg).value /
               (eta - 2.0);
    };
    if (a < 1.0)
        return integrate_1d(f, a, 1.0, cfg).value + tail(1.0);
    return tail(a);
}

double cosecant(double x)
{
    const double s = std::sin(x);
    // sin(k pi) in floating point is ~1e-16 * k rather than 0.
    const double k = std::round(x / std::numbers::pi);
    if (s == 0.0 || (k != 0.0 && std::abs(x - k * std::numbers::pi) < 1e-12 * std::max(1.0, std::abs(x))) ||
        (k == 0.0 && x == 0.0))
        throw std::domain_error("cosecant undefined at integer multiples of pi");
    return 1.0 / s;
}

}  // namespace hoskip
