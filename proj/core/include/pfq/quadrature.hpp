#pragma once

#include <functional>
#include <variant>

namespace pfq {

struct Finite {
    double a;
    double b;
};
struct HalfLine {
    double a = 0.0;  // integrate over (a, infinity)
};
struct RealLine {};

using Domain = std::variant<Finite, HalfLine, RealLine>;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (7, 15) bisection. Half-infinite domains are
/// mapped onto (0, 1) via t = (x-a)/(1+x-a); the real line onto (-1, 1) via
/// x = t/(1-t^2). All nodes are interior, so endpoints are never evaluated
/// and integrable endpoint singularities are admissible. Recursion depth is
/// capped at 60 per panel.
///
/// Throws NonFiniteError if the integrand returns a non-finite value and
/// NoConvergenceError when the depth cap is hit with the total error still
/// above max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f,
                           const Domain& domain, double rel_tol = 1e-10,
                           double abs_tol = 1e-12);

/// int_0^1 t^{p-1} (1-t)^{q-1} f(t) dt for p, q > 0 and smooth f. The
/// algebraic endpoint weights are absorbed by power substitutions before
/// the adaptive rule runs, so small exponents stay accurate.
QuadratureResult beta_weighted_integral(double p, double q,
                                        const std::function<double(double)>& f,
                                        double rel_tol = 1e-11,
                                        double abs_tol = 1e-14);

}  // namespace pfq
