#include "pfq/series.hpp"

#include <cmath>
#include <string>

#include "pfq/errors.hpp"
#include "pfq/pochhammer.hpp"

namespace pfq {

namespace {

constexpr double kAbsFloor = 1e-300;

void validate_control(const SeriesControl& c) {
    if (!(c.rel_tol > 0.0 && c.rel_tol < 1.0))
        throw DomainError("SeriesControl: rel_tol must lie in (0, 1)");
    if (c.min_terms > c.max_terms)
        throw DomainError("SeriesControl: min_terms exceeds max_terms");
}

// Lower parameters at non-positive integers are only admissible when an
// upper parameter terminates the series first.
void validate_lower_poles(const HypergeometricParams& p,
                          const ConvergenceClass& cls) {
    for (double b : p.lower) {
        if (!is_nonpositive_integer(b)) continue;
        const int m = static_cast<int>(std::lround(-b));
        if (cls.kind != SeriesClass::Terminating || cls.terminating_order > m)
            throw PoleError("pFq lower parameter " + std::to_string(b) +
                            " produces a pole before the series terminates");
    }
}

}  // namespace

ConvergenceClass classify_convergence(const HypergeometricParams& params) {
    int order = -1;
    for (double a : params.upper) {
        if (!is_nonpositive_integer(a)) continue;
        const int n = static_cast<int>(std::lround(-a));
        if (order < 0 || n < order) order = n;
    }
    if (order >= 0) return {SeriesClass::Terminating, order};
    if (params.upper.size() <= params.lower.size())
        return {SeriesClass::Entire, -1};
    if (params.upper.size() == params.lower.size() + 1)
        return {SeriesClass::UnitDisk, -1};
    return {SeriesClass::Divergent, -1};
}

EvalResult eval_pfq(const HypergeometricParams& params, double x,
                    const SeriesControl& control) {
    validate_control(control);
    const ConvergenceClass cls = classify_convergence(params);
    if (cls.kind == SeriesClass::Divergent)
        throw DomainError("pFq with p > q+1 and no terminating parameter diverges");
    if (cls.kind == SeriesClass::UnitDisk && std::abs(x) >= 1.0)
        throw DomainError("pFq with p = q+1 requires |x| < 1");
    validate_lower_poles(params, cls);

    if (x == 0.0) return {1.0, 1, 0.0, true};

    if (cls.kind == SeriesClass::Terminating) {
        const int n = cls.terminating_order;
        double term = 1.0;
        double sum = 1.0;
        for (int r = 0; r < n; ++r) {
            double ratio = x / (r + 1);
            for (double a : params.upper) ratio *= a + r;
            for (double b : params.lower) ratio /= b + r;
            term *= ratio;
            sum += term;
        }
        return {sum, n + 1, 0.0, true};
    }

    double term = 1.0;
    double sum = 1.0;
    int terms = 1;
    int consecutive_small = 0;
    for (int r = 0;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError("pFq series did not converge within " +
                                     std::to_string(control.max_terms) +
                                     " terms");
        double ratio = x / (r + 1);
        for (double a : params.upper) ratio *= a + r;
        for (double b : params.lower) ratio /= b + r;
        term *= ratio;
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

EvalResult eval_fox_wright(const FoxWrightParams& params, double x,
                           const SeriesControl& control) {
    validate_control(control);
    for (const WeightedParam& e : params.upper)
        if (!(e.step > 0.0))
            throw DomainError("Fox-Wright upper steps must be positive");
    for (const WeightedParam& e : params.lower)
        if (!(e.step > 0.0))
            throw DomainError("Fox-Wright lower steps must be positive");

    double step_balance = 1.0;
    for (const WeightedParam& e : params.upper) step_balance -= e.step;
    for (const WeightedParam& e : params.lower) step_balance += e.step;
    if (step_balance < -1e-12)
        throw DomainError("Fox-Wright series diverges: step balance below zero");
    if (std::abs(step_balance) <= 1e-12 && x != 0.0) {
        double log_radius = 0.0;
        for (const WeightedParam& e : params.lower)
            log_radius += e.step * std::log(e.step);
        for (const WeightedParam& e : params.upper)
            log_radius -= e.step * std::log(e.step);
        if (!(std::log(std::abs(x)) < log_radius))
            throw DomainError("Fox-Wright argument outside convergence radius");
    }

    auto term_at = [&](int r) {
        double log_term = -std::lgamma(static_cast<double>(r) + 1.0);
        double sign = 1.0;
        for (const WeightedParam& e : params.upper) {
            const SignedLogGamma g = log_gamma_signed(e.value + r * e.step);
            if (g.pole)
                throw PoleError("Fox-Wright numerator Gamma pole at term " +
                                std::to_string(r));
            log_term += g.log_abs;
            sign *= g.sign;
        }
        for (const WeightedParam& e : params.lower) {
            const SignedLogGamma g = log_gamma_signed(e.value + r * e.step);
            if (g.pole)
                throw PoleError("Fox-Wright denominator Gamma pole at term " +
                                std::to_string(r));
            log_term -= g.log_abs;
            sign *= g.sign;
        }
        if (r > 0) {
            log_term += r * std::log(std::abs(x));
            if (x < 0.0 && (r & 1)) sign = -sign;
        }
        return sign * std::exp(log_term);
    };

    double sum = term_at(0);
    if (x == 0.0) return {sum, 1, 0.0, true};

    int terms = 1;
    int consecutive_small = 0;
    for (int r = 1;; ++r) {
        if (terms >= control.max_terms)
            throw NoConvergenceError(
                "Fox-Wright series did not converge within " +
                std::to_string(control.max_terms) + " terms");
        const double term = term_at(r);
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

EvalResult eval_appell(double alpha, double gamma, double beta,
                       double beta_prime, double x, double y,
                       const SeriesControl& control) {
    validate_control(control);
    if (!(std::abs(x) + std::abs(y) < 1.0))
        throw DomainError("Appell series accepted only for |x| + |y| < 1");
    if (is_nonpositive_integer(gamma))
        throw PoleError("Appell gamma parameter is a non-positive integer");
    if (is_nonpositive_integer(beta_prime) && y != 0.0)
        throw PoleError("Appell beta' parameter is a non-positive integer");

    // u_m = (beta)_m x^m / m!, v_n = y^n / ((beta')_n n!),
    // wavefront t: W_t = (alpha)_t/(gamma)_t * sum_{m+n=t} u_m v_n.
    std::vector<double> u{1.0};
    std::vector<double> v{1.0};
    double rho = 1.0;
    double sum = 0.0;
    int consecutive_small = 0;
    for (int t = 0;; ++t) {
        if (t >= control.max_terms)
            throw NoConvergenceError("Appell series did not converge within " +
                                     std::to_string(control.max_terms) +
                                     " wavefronts");
        if (t > 0) {
            u.push_back(u[t - 1] * (beta + t - 1) * x / t);
            v.push_back(v[t - 1] == 0.0
                            ? 0.0
                            : v[t - 1] * y / ((beta_prime + t - 1) * t));
            rho = rho == 0.0 ? 0.0 : rho * (alpha + t - 1) / (gamma + t - 1);
        }
        double front = 0.0;
        for (int m = 0; m <= t; ++m) front += u[m] * v[t - m];
        front *= rho;
        sum += front;
        const int terms = t + 1;
        if (rho == 0.0)  // alpha terminated the series
            return {sum, terms, 0.0, true};
        const double scale = std::max(std::abs(sum), kAbsFloor);
        if (terms >= control.min_terms &&
            std::abs(front) <= control.rel_tol * scale) {
            if (++consecutive_small >= 2)
                return {sum, terms, std::abs(front), true};
        } else {
            consecutive_small = 0;
        }
    }
}

}  // namespace pfq
