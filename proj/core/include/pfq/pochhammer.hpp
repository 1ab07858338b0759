#pragma once

namespace pfq {

// An argument within this distance of a non-positive integer is treated as a
// Gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

// Integer shifts up to this size go through the exact rising product; larger
// non-degenerate shifts use log-Gamma.
inline constexpr int kProductShiftMax = 50;

bool is_nonpositive_integer(double x);

/// log|Gamma(x)| with the sign of Gamma(x) tracked separately.
/// At a pole, sign is 0 and log_abs is +infinity.
struct SignedLogGamma {
    double log_abs;
    double sign;
    bool pole;
};
SignedLogGamma log_gamma_signed(double x);

/// Rising factorial (base)_shift = Gamma(base + shift) / Gamma(base) for real
/// shift. Non-negative integer shifts use the exact product
/// base (base+1) ... (base+shift-1); everything else goes through signed
/// log-Gamma. Returns 0 when Gamma(base) is a pole and the numerator is
/// finite; throws PoleError when the value is genuinely infinite.
double pochhammer(double base, double shift);

/// (base)_m * (base+m)_n, equal to (base)_{m+n}.
double pochhammer_split(double base, int m, int n);

/// (-1)^r / (1-base)_r, equal to (base)_{-r} for non-negative integer r.
double pochhammer_negate(double base, int r);

/// 2^{2r} (base/2)_r ((base+1)/2)_r, equal to (base)_{2r}.
double pochhammer_duplicate(double base, int r);

/// (-r)_s = (-1)^s r! / (r-s)! for 0 <= s <= r; 0 when s > r (the product
/// crosses zero).
double pochhammer_falling(int r, int s);

}  // namespace pfq
