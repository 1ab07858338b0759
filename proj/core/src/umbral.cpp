#include "pfq/umbral.hpp"

#include <cmath>
#include <string>

#include "pfq/errors.hpp"
#include "pfq/pochhammer.hpp"

namespace pfq {

namespace {

constexpr double kAbsFloor = 1e-300;

}  // namespace

double vacuum_moment(const UmbralSymbol& symbol, double nu) {
    double numerator = 1.0;
    for (double a : symbol.upper) numerator *= pochhammer(a, nu);
    double denominator = 1.0;
    for (double b : symbol.lower) denominator *= pochhammer(b, nu);
    if (denominator == 0.0)
        throw PoleError("vacuum moment at nu = " + std::to_string(nu) +
                        ": denominator Pochhammer product vanishes");
    return numerator / denominator;
}

EvalResult umbral_exp_eval(const UmbralSymbol& symbol, double x,
                           const SeriesControl& control) {
    const HypergeometricParams params = symbol.params();
    const ConvergenceClass cls = classify_convergence(params);
    if (cls.kind == SeriesClass::Divergent)
        throw DomainError("umbral exponential diverges for p > q+1");
    if (cls.kind == SeriesClass::UnitDisk && std::abs(x) >= 1.0)
        throw DomainError("umbral exponential with p = q+1 requires |x| < 1");
    for (double b : symbol.lower) {
        if (!is_nonpositive_integer(b)) continue;
        const int m = static_cast<int>(std::lround(-b));
        if (cls.kind != SeriesClass::Terminating || cls.terminating_order > m)
            throw PoleError("umbral lower parameter " + std::to_string(b) +
                            " produces a pole before the series terminates");
    }
    if (x == 0.0) return {1.0, 1, 0.0, true};

    const bool terminating = cls.kind == SeriesClass::Terminating;
    const double log_x = std::log(std::abs(x));
    std::vector<SignedLogGamma> upper_base, lower_base;
    for (double a : symbol.upper) upper_base.push_back(log_gamma_signed(a));
    for (double b : symbol.lower) lower_base.push_back(log_gamma_signed(b));

    auto term_at = [&](int r, double x_factor) {
        if (r <= kProductShiftMax || terminating) {
            double moment = 1.0;
            for (double a : symbol.upper) moment *= pochhammer(a, r);
            for (double b : symbol.lower) moment /= pochhammer(b, r);
            return moment * x_factor;
        }
        double log_term = r * log_x - std::lgamma(static_cast<double>(r) + 1.0);
        double sign = x < 0.0 && (r & 1) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < symbol.upper.size(); ++i) {
            const SignedLogGamma g = log_gamma_signed(symbol.upper[i] + r);
            log_term += g.log_abs - upper_base[i].log_abs;
            sign *= g.sign * upper_base[i].sign;
        }
        for (std::size_t j = 0; j < symbol.lower.size(); ++j) {
            const SignedLogGamma g = log_gamma_signed(symbol.lower[j] + r);
            log_term -= g.log_abs - lower_base[j].log_abs;
            sign *= g.sign * lower_base[j].sign;
        }
        return sign * std::exp(log_term);
    };

    double sum = 1.0;
    int terms = 1;
    int consecutive_small = 0;
    double x_factor = 1.0;  // x^r / r!, maintained for the product-path terms
    for (int r = 1;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "umbral exponential did not converge within " +
                std::to_string(control.max_terms) + " terms");
        x_factor *= x / r;
        const double term = term_at(r, x_factor);
        if (term == 0.0) return {sum, terms, 0.0, true};
        sum += term;
        ++terms;
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(term) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2)
                return {sum, terms, std::abs(term), true};
        } else {
            consecutive_small = 0;
        }
    }
}

ParameterShift differentiate_pfq(const HypergeometricParams& params) {
    double prefactor = 1.0;
    for (double a : params.upper) prefactor *= a;
    for (double b : params.lower) {
        if (std::abs(b) <= kPoleTolerance)
            throw PoleError("differentiate_pfq: lower parameter is zero");
        prefactor /= b;
    }
    ParameterShift shift{prefactor, params};
    for (double& a : shift.params.upper) a += 1.0;
    for (double& b : shift.params.lower) b += 1.0;
    return shift;
}

ParameterShift antidifferentiate_pfq(const HypergeometricParams& params) {
    double prefactor = 1.0;
    for (double b : params.lower) prefactor *= b - 1.0;
    for (double a : params.upper) {
        if (std::abs(a - 1.0) <= kPoleTolerance)
            throw PoleError("antidifferentiate_pfq: upper parameter is one");
        prefactor /= a - 1.0;
    }
    ParameterShift shift{prefactor, params};
    for (double& a : shift.params.upper) a -= 1.0;
    for (double& b : shift.params.lower) b -= 1.0;
    return shift;
}

double PowerWeightedAntiderivative::prefactor(double x) const {
    return std::pow(x, exponent + 1.0) / (exponent + 1.0);
}

double PowerWeightedAntiderivative::value(double x,
                                          const SeriesControl& control) const {
    return prefactor(x) * eval_pfq(params, x, control).value;
}

PowerWeightedAntiderivative power_weighted_antiderivative(
    const HypergeometricParams& params, double alpha) {
    if (std::abs(alpha + 1.0) <= kPoleTolerance)
        throw DomainError("power_weighted_antiderivative: alpha = -1");
    if (is_nonpositive_integer(alpha + 2.0))
        throw DomainError(
            "power_weighted_antiderivative: alpha+2 is a non-positive integer");
    PowerWeightedAntiderivative result{params, alpha};
    result.params.upper.push_back(alpha + 1.0);
    result.params.lower.push_back(alpha + 2.0);
    return result;
}

}  // namespace pfq
