#include "pfq/pochhammer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pfq/errors.hpp"

namespace pfq {

bool is_nonpositive_integer(double x) {
    if (!(x < 0.5)) return false;
    return std::abs(x - std::nearbyint(x)) <= kPoleTolerance;
}

SignedLogGamma log_gamma_signed(double x) {
    if (is_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), 0.0, true};
    if (x > 0.0) return {std::lgamma(x), 1.0, false};
    // std::lgamma already returns log|Gamma| for negative arguments; the sign
    // comes from the reflection formula, sign(Gamma(x)) = sign(sin(pi x)).
    const double s = std::sin(M_PI * x);
    return {std::lgamma(x), s >= 0.0 ? 1.0 : -1.0, false};
}

namespace {

double rising_product(double base, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= base + k;
    return p;
}

}  // namespace

double pochhammer(double base, double shift) {
    if (shift == 0.0) return 1.0;

    const double rounded = std::nearbyint(shift);
    const bool integer_shift =
        std::abs(shift - rounded) <= kPoleTolerance && std::abs(rounded) < 1e9;

    if (integer_shift && rounded > 0.0) {
        // The product also covers bases at (or crossing) non-positive
        // integers, where the Gamma ratio is a limit the product computes
        // exactly.
        if (rounded <= kProductShiftMax || is_nonpositive_integer(base))
            return rising_product(base, static_cast<int>(rounded));
    } else if (integer_shift && rounded < 0.0) {
        const int n = static_cast<int>(-rounded);
        const bool base_integral =
            std::abs(base - std::nearbyint(base)) <= kPoleTolerance;
        if (n <= kProductShiftMax || base_integral) {
            const double q = rising_product(1.0 - base, n);
            if (q == 0.0)
                throw PoleError("pochhammer(" + std::to_string(base) + ", " +
                                std::to_string(shift) +
                                "): Gamma pole in the numerator");
            return (n % 2 == 0 ? 1.0 : -1.0) / q;
        }
    }

    const SignedLogGamma num = log_gamma_signed(base + shift);
    const SignedLogGamma den = log_gamma_signed(base);
    if (den.pole && !num.pole) return 0.0;
    if (num.pole)
        throw PoleError("pochhammer(" + std::to_string(base) + ", " +
                        std::to_string(shift) +
                        "): Gamma pole in the numerator");
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

double pochhammer_split(double base, int m, int n) {
    return pochhammer(base, m) * pochhammer(base + m, n);
}

double pochhammer_negate(double base, int r) {
    if (r < 0) throw DomainError("pochhammer_negate: r must be non-negative");
    const double q = rising_product(1.0 - base, r);
    if (q == 0.0)
        throw PoleError("pochhammer_negate(" + std::to_string(base) + ", " +
                        std::to_string(r) + "): (1-base)_r vanishes");
    return (r % 2 == 0 ? 1.0 : -1.0) / q;
}

double pochhammer_duplicate(double base, int r) {
    if (r < 0)
        throw DomainError("pochhammer_duplicate: r must be non-negative");
    return std::ldexp(pochhammer(base / 2.0, r) * pochhammer((base + 1.0) / 2.0, r),
                      2 * r);
}

double pochhammer_falling(int r, int s) {
    if (r < 0 || s < 0)
        throw DomainError("pochhammer_falling: r and s must be non-negative");
    if (s > r) return 0.0;
    double p = 1.0;
    for (int k = 0; k < s; ++k) p *= static_cast<double>(-r + k);
    return p;
}

}  // namespace pfq
