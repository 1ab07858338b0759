#pragma once

#include <vector>

namespace pfq {

/// Upper (numerator) and lower (denominator) parameters of a pFq series.
struct HypergeometricParams {
    std::vector<double> upper;
    std::vector<double> lower;
};

/// One (a, A) entry of a Fox-Wright series: contributes Gamma(a + r*A) with
/// step A > 0.
struct WeightedParam {
    double value = 0.0;
    double step = 1.0;
};

struct FoxWrightParams {
    std::vector<WeightedParam> upper;
    std::vector<WeightedParam> lower;
};

/// Truncation policy shared by all series evaluators. Summation stops once
/// two consecutive terms fall below rel_tol relative to the partial sum,
/// after at least min_terms terms; max_terms is a hard cap.
struct SeriesControl {
    double rel_tol = 1e-14;
    int min_terms = 8;
    int max_terms = 10000;
};

struct EvalResult {
    double value = 0.0;
    int terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

enum class SeriesClass { Entire, UnitDisk, Terminating, Divergent };

struct ConvergenceClass {
    SeriesClass kind;
    int terminating_order;  // valid only for Terminating
};

/// Entire when p <= q, unit-disk when p == q+1, terminating of order n when
/// some upper parameter is the non-positive integer -n (regardless of p, q),
/// divergent otherwise.
ConvergenceClass classify_convergence(const HypergeometricParams& params);

/// Sum_r prod(a_i)_r / prod(b_j)_r * x^r / r!, with the terms updated by the
/// rational recursion term_{r+1} = term_r * prod(a_i+r)/prod(b_j+r) * x/(r+1).
EvalResult eval_pfq(const HypergeometricParams& params, double x,
                    const SeriesControl& control = {});

/// Sum_r prod Gamma(a_k + r A_k) / prod Gamma(b_s + r B_s) * x^r / r!, each
/// term assembled in log space.
EvalResult eval_fox_wright(const FoxWrightParams& params, double x,
                           const SeriesControl& control = {});

/// Two-variable Appell-Kampe-de-Feriet series
/// Sum_{m,n} (alpha)_{m+n} (beta)_m x^m y^n /
///           ((gamma)_{m+n} (beta_prime)_n m! n!),
/// summed along wavefronts m+n = t. Accepted domain: |x| + |y| < 1.
EvalResult eval_appell(double alpha, double gamma, double beta,
                       double beta_prime, double x, double y,
                       const SeriesControl& control = {});

}  // namespace pfq
