#include "pfq/integrals.hpp"

#include <cmath>
#include <string>

#include "pfq/errors.hpp"
#include "pfq/pochhammer.hpp"
#include "pfq/quadrature.hpp"

namespace pfq {

namespace {

constexpr double kAbsFloor = 1e-300;

double beta_prefactor(double a, double b_minus_a, double whole) {
    // Gamma(whole) / (Gamma(a) Gamma(b_minus_a)) for positive arguments.
    return std::exp(std::lgamma(whole) - std::lgamma(a) -
                    std::lgamma(b_minus_a));
}

}  // namespace

double mellin_power_integral(double a, double b, double c, double mu,
                             double nu) {
    if (!(mu > 0.0))
        throw DomainError("mellin_power_integral: mu must be positive");
    const double order = nu / mu;
    if (!(order > 0.0 && order < std::min(a, b)))
        throw DomainError(
            "mellin_power_integral: need 0 < nu/mu < min(a, b), got nu/mu = " +
            std::to_string(order));
    return (1.0 / mu) * std::tgamma(order) *
           vacuum_moment(UmbralSymbol({a, b}, {c}), -order);
}

double mellin_integral(double a, double b, double c, double nu) {
    return mellin_power_integral(a, b, c, 1.0, nu);
}

double GaussianReduction::value(const SeriesControl& control) const {
    // Only the r = 0 term survives at argument 0, even for parameter shapes
    // whose series would otherwise be rejected.
    if (argument == 0.0) return prefactor;
    return prefactor * eval_pfq(params, argument, control).value;
}

GaussianReduction gaussian_integral_pfq(const HypergeometricParams& params,
                                        double alpha, double beta) {
    if (!(alpha > 0.0))
        throw DomainError("gaussian_integral_pfq: alpha must be positive");
    const std::size_t p = params.upper.size();
    const std::size_t q = params.lower.size();
    if (p > q + 1)
        throw DomainError("gaussian_integral_pfq: requires p <= q+1");

    GaussianReduction reduction;
    for (double a : params.upper) {
        reduction.params.upper.push_back(0.5 * a);
        reduction.params.upper.push_back(0.5 * (a + 1.0));
    }
    for (double b : params.lower) {
        reduction.params.lower.push_back(0.5 * b);
        reduction.params.lower.push_back(0.5 * (b + 1.0));
    }
    reduction.prefactor = std::sqrt(M_PI / alpha);
    reduction.argument =
        std::pow(4.0, static_cast<double>(p) - static_cast<double>(q)) *
        beta * beta / (4.0 * alpha);

    if (reduction.argument != 0.0) {
        const ConvergenceClass cls = classify_convergence(reduction.params);
        if (cls.kind == SeriesClass::Divergent ||
            (cls.kind == SeriesClass::UnitDisk &&
             std::abs(reduction.argument) >= 1.0))
            throw DomainError(
                "gaussian_integral_pfq: transformed series diverges at its "
                "argument");
    }
    return reduction;
}

double gaussian_cosine_integral(double alpha, double beta,
                                const SeriesControl& control) {
    if (!(alpha > 0.0))
        throw DomainError("gaussian_cosine_integral: alpha must be positive");
    const double argument = beta * beta / (256.0 * alpha);
    return std::sqrt(M_PI / alpha) *
           eval_pfq({{}, {0.25, 0.75}}, argument, control).value;
}

double gaussian_quadratic_arg_integral(const UmbralSymbol& symbol,
                                       double alpha, double beta,
                                       const SeriesControl& control) {
    if (!(alpha > 0.0))
        throw DomainError(
            "gaussian_quadratic_arg_integral: alpha must be positive");
    const double u = beta * beta / (4.0 * alpha);
    double x_factor = 1.0;  // u^r / r!
    double sum = 0.0;
    int terms = 0;
    int consecutive_small = 0;
    for (int r = 0;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "half-integer moment series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        const double term = vacuum_moment(symbol, r - 0.5) * x_factor;
        sum += term;
        ++terms;
        if (u == 0.0) break;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        x_factor *= u / (r + 1.0);
    }
    return std::sqrt(M_PI / alpha) * sum;
}

double gaussian_quadratic_arg_integral(double a, double b, double c,
                                       double alpha, double beta,
                                       const SeriesControl& control) {
    return gaussian_quadratic_arg_integral(UmbralSymbol({a}, {b, c}), alpha,
                                           beta, control);
}

double geometric_gaussian_integral(double alpha, double beta) {
    if (!(alpha > 0.0))
        throw DomainError("geometric_gaussian_integral: alpha must be positive");
    const double discriminant = 1.0 - beta * beta / (4.0 * alpha);
    if (!(discriminant > 0.0))
        throw DomainError(
            "geometric_gaussian_integral: beta^2 >= 4 alpha puts poles on the "
            "real axis");
    return M_PI / std::sqrt(alpha * discriminant);
}

double weighted_exp_integral(double a, double b, double c, double alpha,
                             double x, const SeriesControl& control) {
    if (!(x > 0.0 && x < 1.0))
        throw DomainError("weighted_exp_integral: requires 0 < x < 1");
    if (!(alpha > -1.0))
        throw DomainError("weighted_exp_integral: requires alpha > -1");
    if (is_nonpositive_integer(c))
        throw PoleError("weighted_exp_integral: c is a non-positive integer");

    // outer_r = (alpha+1)_r (-x)^r / ((alpha+2)_r r!); the exponential weight
    // makes the expansion alternate against the power series of 2F1.
    double outer = 1.0;
    double sum = 0.0;
    int terms = 0;
    int consecutive_small = 0;
    for (int r = 0;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "weighted exponential series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        double inner_term = 1.0;
        double inner = 1.0;  // Sum_s (-r)_s (a)_s (b)_s / ((c)_s s!)
        for (int s = 0; s < r; ++s) {
            inner_term *= (s - r) * (a + s) * (b + s) / ((c + s) * (s + 1.0));
            inner += inner_term;
        }
        const double term = outer * inner;
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
        outer *= (alpha + 1.0 + r) * -x / ((alpha + 2.0 + r) * (r + 1.0));
    }
    return std::pow(x, alpha + 1.0) / (alpha + 1.0) * sum;
}

double bessel_squared_gaussian_integral(double alpha,
                                        const SeriesControl& control) {
    if (!(alpha > 0.0))
        throw DomainError(
            "bessel_squared_gaussian_integral: alpha must be positive");
    const double u = 1.0 / (4.0 * alpha);
    double term = std::sqrt(M_PI);  // Gamma(1/2)
    double sum = term;
    int terms = 1;
    int consecutive_small = 0;
    for (int r = 0;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "Bessel-squared series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        const double d1 = 2.0 * r + 1.0;
        const double d2 = 2.0 * r + 2.0;
        term *= (2.0 * r + 0.5) * (2.0 * r + 1.5) * u /
                (d1 * d1 * d2 * d2 * (r + 1.0));
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
    }
    return sum / std::sqrt(alpha);
}

double fox_wright_gaussian_form(double a, double b, double c, double alpha,
                                double beta, const SeriesControl& control) {
    if (!(alpha > 0.0))
        throw DomainError("fox_wright_gaussian_form: alpha must be positive");
    const SignedLogGamma ga = log_gamma_signed(a);
    const SignedLogGamma gb = log_gamma_signed(b);
    const SignedLogGamma gc = log_gamma_signed(c);
    if (ga.pole || gb.pole || gc.pole)
        throw PoleError("fox_wright_gaussian_form: Gamma prefactor pole");
    const double gamma_ratio = gb.sign * gc.sign * ga.sign *
                               std::exp(gb.log_abs + gc.log_abs - ga.log_abs);
    const FoxWrightParams psi{{{a, 2.0}}, {{b, 2.0}, {c, 2.0}}};
    const double argument = beta * beta / (4.0 * alpha);
    return std::sqrt(M_PI / alpha) * gamma_ratio *
           eval_fox_wright(psi, argument, control).value;
}

double euler_integral_1f1(double a, double b, double x) {
    if (!(a > 0.0 && b > a))
        throw DomainError("euler_integral_1f1: requires 0 < a < b");
    const double factor = beta_prefactor(a, b - a, b);
    auto smooth = [x](double t) { return std::exp(x * t); };
    return factor * beta_weighted_integral(a, b - a, smooth).value;
}

double euler_integral_2f1(double a, double b, double c, double x) {
    if (!(a > 0.0 && c > a))
        throw DomainError("euler_integral_2f1: requires 0 < a < c");
    if (!(std::abs(x) < 1.0))
        throw DomainError("euler_integral_2f1: requires |x| < 1");
    const double factor = beta_prefactor(a, c - a, c);
    auto smooth = [b, x](double t) { return std::pow(1.0 - x * t, -b); };
    return factor * beta_weighted_integral(a, c - a, smooth).value;
}

double kummer_gauss_transform(double a, double b, double alpha, double beta) {
    if (!(a > 0.0 && b > a))
        throw DomainError("kummer_gauss_transform: requires 0 < a < b");
    if (!(alpha > 0.0))
        throw DomainError("kummer_gauss_transform: alpha must be positive");
    const double u = beta * beta / (4.0 * alpha);
    const double factor = beta_prefactor(a, b - a, b);
    auto smooth = [u](double t) { return std::exp(u * t * t); };
    return factor * beta_weighted_integral(a, b - a, smooth).value;
}

}  // namespace pfq
