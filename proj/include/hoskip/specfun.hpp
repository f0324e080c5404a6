#ifndef HOSKIP_SPECFUN_HPP
#define HOSKIP_SPECFUN_HPP

#include <functional>

namespace hoskip {

struct IntegrationConfig {
    double rel_tol{1e-8};
    double abs_tol{1e-14};
    int max_subdivisions{400};
    /// Map [a, inf) onto [0, 1) with x = a + t / (1 - t). When false an
    /// infinite upper limit is rejected.
    bool map_infinite_tail{true};

    /// Defaults by integral dimension: rel 1e-8, 1e-6, 1e-5 for 1, 2, 3.
    static IntegrationConfig for_dimension(int dim);

    void validate() const;
};

struct QuadResult {
    double value{0.0};
    double error{0.0};
    bool converged{true};
    long evaluations{0};
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;
using Fn3 = std::function<double(double, double, double)>;

/// Adaptive Gauss-Kronrod (7/15) with global bisection. `b` may be +inf.
/// Non-convergence within cfg.max_subdivisions is reported through
/// QuadResult::converged, never hidden.
QuadResult integrate_1d(const Fn1& f, double a, double b, const IntegrationConfig& cfg);

/// Iterated integral  int_a^b dx int_{ylo(x)}^{yhi(x)} dy f(x, y).
QuadResult integrate_2d(const Fn2& f, double a, double b, const Fn1& ylo, const Fn1& yhi,
                        const IntegrationConfig& cfg);

/// Iterated integral over x in [a, b], y in [ylo(x), yhi(x)], z in [zlo(x, y), zhi(x, y)].
QuadResult integrate_3d(const Fn3& f, double a, double b, const Fn1& ylo, const Fn1& yhi,
                        const Fn2& zlo, const Fn2& zhi, const IntegrationConfig& cfg);

/// 2F1(1, 1 - 2/eta; 2 - 2/eta; -z) for z >= 0.
///
/// eta == 4 uses atan(sqrt z)/sqrt z. Otherwise a Pfaff-transformed series is
/// used for z <= 2 and the large-argument expansion of the Euler integral for
/// z > 2. Relative accuracy is near machine precision on both branches.
double hyp2f1_coverage(double eta, double z);

/// int_a^inf w / (1 + w^eta) dw, by quadrature. Independent route to the
/// hypergeometric value above.
double tail_interference_integral(double eta, double a);

/// 1 / sin(x); throws std::domain_error when sin(x) == 0.
double cosecant(double x);

}  // namespace hoskip

#endif
