#pragma once

#include "pfq/series.hpp"
#include "pfq/umbral.hpp"

namespace pfq {

/// int_0^inf t^{nu-1} 2F1(a, b; c; -t) dt = Gamma(nu) (a)_{-nu} (b)_{-nu} /
/// (c)_{-nu}, for 0 < nu < min(a, b).
double mellin_integral(double a, double b, double c, double nu);

/// int_0^inf t^{nu-1} 2F1(a, b; c; -t^mu) dt =
/// (1/mu) Gamma(nu/mu) (a)_{-nu/mu} (b)_{-nu/mu} / (c)_{-nu/mu},
/// for mu > 0 and 0 < nu/mu < min(a, b). mellin_integral is the mu = 1 path.
double mellin_power_integral(double a, double b, double c, double mu,
                             double nu);

/// Closed form of int e^{-alpha x^2} pFq(params; beta x) dx: every parameter
/// d splits into {d/2, (d+1)/2}, the prefactor is sqrt(pi/alpha), and the
/// argument is 4^{p-q} beta^2 / (4 alpha).
struct GaussianReduction {
    HypergeometricParams params;
    double prefactor = 0.0;
    double argument = 0.0;

    double value(const SeriesControl& control = {}) const;
};
GaussianReduction gaussian_integral_pfq(const HypergeometricParams& params,
                                        double alpha, double beta);

/// int e^{-alpha x^2} cos(sqrt(beta x)) dx =
/// sqrt(pi/alpha) 0F2(-; 1/4, 3/4; beta^2 / (256 alpha)), with the integrand
/// read as 0F1(-; 1/2; -beta x / 4).
double gaussian_cosine_integral(double alpha, double beta,
                                const SeriesControl& control = {});

/// int pFq(symbol; -alpha x^2 + beta x) dx =
/// sqrt(pi/alpha) Sum_r moment(r - 1/2) (beta^2/4alpha)^r / r!.
double gaussian_quadratic_arg_integral(const UmbralSymbol& symbol,
                                       double alpha, double beta,
                                       const SeriesControl& control = {});
/// The 1F2(a; b, c; .) instance of the above.
double gaussian_quadratic_arg_integral(double a, double b, double c,
                                       double alpha, double beta,
                                       const SeriesControl& control = {});

/// int dz / (1 + alpha z^2 - beta z) = pi / sqrt(alpha (1 - beta^2/4alpha)),
/// for beta^2 < 4 alpha.
double geometric_gaussian_integral(double alpha, double beta);

/// int_0^x t^alpha e^{-t} 2F1(a, b; c; t) dt for 0 < x < 1, alpha > -1:
/// x^{alpha+1}/(alpha+1) Sum_r (alpha+1)_r (-x)^r / ((alpha+2)_r r!) *
///   Sum_{s<=r} (-r)_s (a)_s (b)_s / ((c)_s s!),
/// the inner sum terminating exactly.
double weighted_exp_integral(double a, double b, double c, double alpha,
                             double x, const SeriesControl& control = {});

/// int e^{-alpha x^2} J0(sqrt(x))^2 dx =
/// (1/sqrt(alpha)) Sum_r Gamma(1/2 + 2r) / ((2r)!^2 r!) (1/4alpha)^r,
/// with J0(sqrt(x))^2 read as 1F2(1/2; 1, 1; -x).
double bessel_squared_gaussian_integral(double alpha,
                                        const SeriesControl& control = {});

/// sqrt(pi/alpha) Gamma(b) Gamma(c) / Gamma(a) *
/// 1Psi2[(a,2); (b,2),(c,2); beta^2/4alpha]; equal to the GaussianReduction
/// of 1F2(a; b, c; beta x).
double fox_wright_gaussian_form(double a, double b, double c, double alpha,
                                double beta, const SeriesControl& control = {});

/// Gamma(b)/(Gamma(a)Gamma(b-a)) int_0^1 t^{a-1}(1-t)^{b-a-1} e^{xt} dt,
/// for 0 < a < b; equals 1F1(a; b; x).
double euler_integral_1f1(double a, double b, double x);

/// Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 t^{a-1}(1-t)^{c-a-1} (1-xt)^{-b} dt,
/// for 0 < a < c and |x| < 1; equals 2F1(a, b; c; x).
double euler_integral_2f1(double a, double b, double c, double x);

/// Gamma(b)/(Gamma(a)Gamma(b-a)) int_0^1 t^{a-1}(1-t)^{b-a-1}
///   e^{(beta^2/4alpha) t^2} dt,
/// for 0 < a < b, alpha > 0; equals
/// 2F2(a/2, (a+1)/2; b/2, (b+1)/2; beta^2/4alpha).
double kummer_gauss_transform(double a, double b, double alpha, double beta);

}  // namespace pfq
