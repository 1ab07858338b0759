#pragma once

#include <vector>

#include "pfq/series.hpp"

namespace pfq {

/// A vacuum contract: the symbol's nu-th moment is
/// prod_i (upper_i)_nu / prod_j (lower_j)_nu for arbitrary real nu.
/// Products of independent symbols are represented by concatenating the
/// parameter lists, since all moments are taken at a common index.
struct UmbralSymbol {
    std::vector<double> upper;
    std::vector<double> lower;

    UmbralSymbol() = default;
    UmbralSymbol(std::vector<double> up, std::vector<double> low)
        : upper(std::move(up)), lower(std::move(low)) {}
    explicit UmbralSymbol(const HypergeometricParams& p)
        : upper(p.upper), lower(p.lower) {}

    HypergeometricParams params() const { return {upper, lower}; }
};

/// prod (a_i)_nu / prod (b_j)_nu; nu may be negative or fractional.
double vacuum_moment(const UmbralSymbol& symbol, double nu);

/// Sum_r moment(r) x^r / r!, each term computed from the moment map itself
/// (exact products for small r, signed log-Gamma beyond) rather than by the
/// eval_pfq term recursion. Agrees with eval_pfq on the same parameters.
EvalResult umbral_exp_eval(const UmbralSymbol& symbol, double x,
                           const SeriesControl& control = {});

/// A parameter-shift rule: f maps to prefactor * pFq(params; x).
struct ParameterShift {
    double prefactor;
    HypergeometricParams params;
};

/// d/dx pFq(params; x) = (prod upper / prod lower) * pFq(params + 1; x).
ParameterShift differentiate_pfq(const HypergeometricParams& params);

/// Antiderivative of pFq(params; x):
/// (prod (lower-1) / prod (upper-1)) * pFq(params - 1; x) + constant.
ParameterShift antidifferentiate_pfq(const HypergeometricParams& params);

/// Closed form of int_0^x t^exponent pFq(params; t) dt:
/// x^{exponent+1}/(exponent+1) * p+1Fq+1(upper u {exponent+1};
///                                       lower u {exponent+2}; x).
struct PowerWeightedAntiderivative {
    HypergeometricParams params;
    double exponent;

    double prefactor(double x) const;
    double value(double x, const SeriesControl& control = {}) const;
};

PowerWeightedAntiderivative power_weighted_antiderivative(
    const HypergeometricParams& params, double alpha);

}  // namespace pfq
