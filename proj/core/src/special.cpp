#include "pfq/special.hpp"

#include <cmath>
#include <string>

#include "pfq/errors.hpp"
#include "pfq/pochhammer.hpp"

namespace pfq {

namespace {

constexpr double kAbsFloor = 1e-300;

}  // namespace

double bessel_j0(double x, const SeriesControl& control) {
    return eval_pfq({{}, {1.0}}, -0.25 * x * x, control).value;
}

double tricomi_c(double nu, double x, const SeriesControl& control) {
    // Leading terms with Gamma(nu + r + 1) at a pole contribute 0, so for
    // nu = -k the sum starts at r = k. After that the recursion
    // t_{r+1} = t_r * (-x) / ((r+1)(nu+r+1)) never crosses a zero.
    int start = 0;
    if (is_nonpositive_integer(nu))
        start = static_cast<int>(std::lround(-nu));

    const SignedLogGamma g = log_gamma_signed(nu + start + 1.0);
    double term = std::pow(-x, start) * g.sign *
                  std::exp(-std::lgamma(static_cast<double>(start) + 1.0) -
                           g.log_abs);
    double sum = term;
    if (x == 0.0) return sum;
    int terms = 1;
    int consecutive_small = 0;
    for (int r = start;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError("Tricomi series did not converge within " +
                                     std::to_string(control.max_terms) +
                                     " terms");
        term *= -x / ((r + 1.0) * (nu + r + 1.0));
        if (term == 0.0) return sum;
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) return sum;
        } else {
            consecutive_small = 0;
        }
    }
}

double cos_hyp(double x, const SeriesControl& control) {
    return eval_pfq({{}, {0.5}}, -0.25 * x * x, control).value;
}

double sin_hyp(double x, const SeriesControl& control) {
    return x * eval_pfq({{}, {1.5}}, -0.25 * x * x, control).value;
}

double cos_half(double x, const SeriesControl& control) {
    if (x == 0.0) return 1.0;
    const double log_abs_x = std::log(std::abs(x));
    double sum = 1.0;
    int terms = 1;
    int consecutive_small = 0;
    for (int r = 1;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "cos_1/2 series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        const double log_term = std::lgamma(0.5 * r + 1.0) -
                                2.0 * std::lgamma(static_cast<double>(r) + 1.0) +
                                r * log_abs_x;
        double term = std::exp(log_term);
        if (x < 0.0 && (r & 1)) term = -term;
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) return sum;
        } else {
            consecutive_small = 0;
        }
    }
}

double gauss_transform_cos_half(double x, const SeriesControl& control) {
    // t_0 = Gamma(1/2)/sqrt(pi) = 1; ratio
    // t_{k+1}/t_k = (k+1/2)(k+1)(-4x^2) / ((2k+1)^2 (2k+2)^2).
    if (x == 0.0) return 1.0;
    const double w = -4.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    int terms = 1;
    int consecutive_small = 0;
    for (int k = 0;; ++k) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "cosine Gaussian-transform series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        const double d1 = 2.0 * k + 1.0;
        const double d2 = 2.0 * k + 2.0;
        term *= (k + 0.5) * (k + 1.0) * w / (d1 * d1 * d2 * d2);
        if (term == 0.0) return sum;
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2) return sum;
        } else {
            consecutive_small = 0;
        }
    }
}

double j0_squared(double x, const SeriesControl& control) {
    return eval_pfq({{0.5}, {1.0, 1.0}}, -x * x, control).value;
}

double LandauParams::upper_param() const {
    return -lambda + 0.5 * (std::abs(m_l) + 1.0);
}

double LandauParams::lower_param() const { return 1.0 + std::abs(m_l); }

double landau_radial(const LandauParams& params, double xi,
                     const SeriesControl& control) {
    if (!(xi >= 0.0)) throw DomainError("landau_radial: xi must be >= 0");
    const double m = std::abs(params.m_l);
    const double kummer =
        eval_pfq({{params.upper_param()}, {params.lower_param()}}, xi, control)
            .value;
    return std::exp(-0.5 * xi) * std::pow(xi, 0.5 * m) * kummer;
}

}  // namespace pfq
