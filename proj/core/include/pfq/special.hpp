#pragma once

#include "pfq/series.hpp"

namespace pfq {

/// J0(x) = 0F1(-; 1; -x^2/4).
double bessel_j0(double x, const SeriesControl& control = {});

/// Tricomi (Bessel-Clifford) function
/// C_nu(x) = Sum_r (-x)^r / (r! Gamma(nu + r + 1)).
/// Terms whose Gamma factor is a pole contribute 0 (reciprocal-Gamma
/// convention), making C_nu entire in nu.
double tricomi_c(double nu, double x, const SeriesControl& control = {});

/// cos(x) and sin(x) through their 0F1 forms.
double cos_hyp(double x, const SeriesControl& control = {});
double sin_hyp(double x, const SeriesControl& control = {});

/// cos_{1/2}(x) = Sum_r Gamma(r/2 + 1) / (r!)^2 x^r (entire).
double cos_half(double x, const SeriesControl& control = {});

/// Termwise Gaussian moments of the cos_{1/2} series (odd moments vanish):
/// Sum_k Gamma(k+1/2)/sqrt(pi) * Gamma(k+1)/((2k)!)^2 * (-4x^2)^k.
/// Equals cos(x).
double gauss_transform_cos_half(double x, const SeriesControl& control = {});

/// J0(x)^2 = 1F2(1/2; 1, 1; -x^2).
double j0_squared(double x, const SeriesControl& control = {});

/// Radial profile parameters: the 1F1 factor carries
/// upper = -lambda + (|m_l|+1)/2 and lower = 1 + |m_l|.
struct LandauParams {
    double lambda = 0.0;
    double m_l = 0.0;

    double upper_param() const;
    double lower_param() const;
};

/// R(xi) = e^{-xi/2} xi^{|m_l|/2} 1F1(upper; lower; xi), xi >= 0.
double landau_radial(const LandauParams& params, double xi,
                     const SeriesControl& control = {});

}  // namespace pfq
