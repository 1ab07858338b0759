#include "pfq/odes.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "pfq/errors.hpp"
#include "pfq/special.hpp"
#include "pfq/umbral.hpp"

namespace pfq {

namespace {

OdeResidualReport make_report(std::string id, double x,
                              std::initializer_list<double> parts) {
    double residual = 0.0;
    double scale = 0.0;
    for (double p : parts) {
        residual += p;
        scale = std::max(scale, std::abs(p));
    }
    OdeResidualReport report{std::move(id), x, residual, scale, 0.0};
    if (scale < 1e-300)
        report.normalized_residual =
            residual == 0.0 ? 0.0
                            : std::numeric_limits<double>::infinity();
    else
        report.normalized_residual = std::abs(residual) / scale;
    return report;
}

}  // namespace

double series_derivative_pfq(const HypergeometricParams& params, double x,
                             int order, const SeriesControl& control) {
    if (order < 1 || order > 2)
        throw DomainError("series_derivative_pfq: order must be 1 or 2");
    const double prefactor =
        vacuum_moment(UmbralSymbol(params), static_cast<double>(order));
    HypergeometricParams shifted = params;
    for (double& a : shifted.upper) a += order;
    for (double& b : shifted.lower) b += order;
    return prefactor * eval_pfq(shifted, x, control).value;
}

OdeResidualReport tricomi_eigen_residual(double nu, double lambda, double x,
                                         const SeriesControl& control) {
    // C_nu'(y) = -C_{nu+1}(y), so the derivatives stay termwise exact.
    const double value = tricomi_c(nu, lambda * x, control);
    const double d1 = -lambda * tricomi_c(nu + 1.0, lambda * x, control);
    const double d2 = lambda * lambda * tricomi_c(nu + 2.0, lambda * x, control);
    return make_report("tricomi_eigen", x,
                       {d1, x * d2, nu * d1, lambda * value});
}

OdeResidualReport kummer_ode_residual(double a, double b, double x,
                                      const SeriesControl& control) {
    const HypergeometricParams params{{a}, {b}};
    const double value = eval_pfq(params, x, control).value;
    const double d1 = series_derivative_pfq(params, x, 1, control);
    const double d2 = series_derivative_pfq(params, x, 2, control);
    return make_report("kummer_ode", x, {x * d2, -x * d1, b * d1, -a * value});
}

OdeResidualReport kummer_contiguous_residual(double a, double b, double x,
                                             const SeriesControl& control) {
    const HypergeometricParams params{{a}, {b}};
    const double d1 = series_derivative_pfq(params, x, 1, control);
    const double d2 = series_derivative_pfq(params, x, 2, control);
    const double shifted = eval_pfq({{a + 1.0}, {b}}, x, control).value;
    return make_report("kummer_contiguous", x,
                       {x * d2, b * d1, -a * shifted});
}

OdeResidualReport gauss_ode_residual(double a, double b, double c, double x,
                                     const SeriesControl& control) {
    if (!(std::abs(x) < 1.0))
        throw DomainError("gauss_ode_residual: |x| < 1 required");
    const HypergeometricParams params{{a, b}, {c}};
    const double value = eval_pfq(params, x, control).value;
    const double d1 = series_derivative_pfq(params, x, 1, control);
    const double d2 = series_derivative_pfq(params, x, 2, control);
    return make_report(
        "gauss_ode", x,
        {x * (1.0 - x) * d2, (c - (a + b + 1.0) * x) * d1, -a * b * value});
}

OdeResidualReport cosine_ode_residual(double x, const SeriesControl& control) {
    const HypergeometricParams params{{}, {0.5}};
    const double y = -0.25 * x * x;
    const double u = eval_pfq(params, y, control).value;
    const double u1 = series_derivative_pfq(params, y, 1, control);
    const double u2 = series_derivative_pfq(params, y, 2, control);
    // F'' = u''(y) (x^2/4) + u'(y) (-1/2) by the chain rule.
    return make_report("cosine_ode", x, {0.25 * x * x * u2, -0.5 * u1, u});
}

}  // namespace pfq
