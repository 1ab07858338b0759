#pragma once

#include <string>

#include "pfq/series.hpp"

namespace pfq {

/// Residual of a differential relation at one point, normalized by the
/// magnitude of the largest additive term of the relation.
struct OdeResidualReport {
    std::string relation_id;
    double x = 0.0;
    double residual = 0.0;
    double scale = 0.0;
    double normalized_residual = 0.0;
};

/// k-th derivative of pFq(params; x) for k in {1, 2}, computed termwise
/// through the parameter-shift rule (exact up to series truncation).
double series_derivative_pfq(const HypergeometricParams& params, double x,
                             int order, const SeriesControl& control = {});

/// (d/dx)(x (d/dx) C_nu(lambda x)) + nu (d/dx) C_nu(lambda x)
///   + lambda C_nu(lambda x)
OdeResidualReport tricomi_eigen_residual(double nu, double lambda, double x,
                                         const SeriesControl& control = {});

/// (x d/dx - x + b)(d/dx) F - a F with F = 1F1(a; b; x).
OdeResidualReport kummer_ode_residual(double a, double b, double x,
                                      const SeriesControl& control = {});

/// (x d/dx + b)(d/dx) 1F1(a; b; x) - a 1F1(a+1; b; x).
OdeResidualReport kummer_contiguous_residual(double a, double b, double x,
                                             const SeriesControl& control = {});

/// x(1-x) F'' + [c - (a+b+1)x] F' - ab F with F = 2F1(a, b; c; x), |x| < 1.
OdeResidualReport gauss_ode_residual(double a, double b, double c, double x,
                                     const SeriesControl& control = {});

/// (d^2/dx^2) 0F1(-; 1/2; -x^2/4) + 0F1(-; 1/2; -x^2/4), derivatives taken
/// in the y = -x^2/4 variable and mapped by the chain rule.
OdeResidualReport cosine_ode_residual(double x,
                                      const SeriesControl& control = {});

}  // namespace pfq
