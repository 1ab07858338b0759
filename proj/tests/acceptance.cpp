// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. The first argument
// is the path to the pfq CLI binary (used by the last criterion).
// Exit code: number of failed criteria.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pfq/errors.hpp"
#include "pfq/identity_suite.hpp"
#include "pfq/integrals.hpp"
#include "pfq/odes.hpp"
#include "pfq/pochhammer.hpp"
#include "pfq/quadrature.hpp"
#include "pfq/special.hpp"
#include "pfq/umbral.hpp"

using namespace pfq;

namespace {

struct Criterion {
    int checks = 0;
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    void expect_rel(double lhs, double rhs, double tol,
                    const std::string& what) {
        const double magnitude = std::max(std::abs(lhs), std::abs(rhs));
        const double rel =
            magnitude < 1e-300 ? 0.0 : std::abs(lhs - rhs) / magnitude;
        std::ostringstream detail;
        detail << what << ": lhs=" << lhs << " rhs=" << rhs << " rel=" << rel
               << " tol=" << tol;
        expect(rel <= tol, detail.str());
    }
    void expect_abs(double lhs, double rhs, double tol,
                    const std::string& what) {
        std::ostringstream detail;
        detail << what << ": lhs=" << lhs << " rhs=" << rhs
               << " abs=" << std::abs(lhs - rhs) << " tol=" << tol;
        expect(std::abs(lhs - rhs) <= tol, detail.str());
    }
};

int g_failed_criteria = 0;

void report(int index, const std::string& name, const Criterion& c) {
    if (c.failures == 0) {
        std::printf("[PASS] %02d %s (%d checks)\n", index, name.c_str(),
                    c.checks);
    } else {
        ++g_failed_criteria;
        std::printf("[FAIL] %02d %s (%d/%d checks failed; first: %s)\n", index,
                    name.c_str(), c.failures, c.checks,
                    c.first_failure.c_str());
    }
    std::fflush(stdout);
}

IdentityReport run_check(const std::string& id, const ParamRecord& point,
                         double tol) {
    return identity_registry().at(id)(point, tol);
}

ParamRecord scalars(
    std::initializer_list<std::pair<const char*, double>> entries) {
    ParamRecord record;
    for (const auto& [key, value] : entries) record[key] = {value};
    return record;
}

void criterion_mellin() {
    Criterion c;
    const std::vector<std::array<double, 4>> grid{{2, 3, 4, 1},
                                                  {3, 5, 2, 0.5},
                                                  {2.5, 4, 3, 1.5},
                                                  {4, 6, 5, 2},
                                                  {2, 2, 3, 0.75}};
    for (const auto& [a, b, cc, nu] : grid) {
        const IdentityReport r = run_check(
            "mellin", scalars({{"a", a}, {"b", b}, {"c", cc}, {"nu", nu}}),
            1e-6);
        c.expect(r.passed, "mellin " + format_params(r.params) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    c.expect_abs(mellin_integral(2, 3, 4, 1), 1.5, 1e-6, "closed (2,3,4,1)");
    report(1, "Mellin transform of 2F1 vs quadrature", c);
}

void criterion_power_mellin() {
    Criterion c;
    const std::vector<std::array<double, 5>> grid{{2, 3, 4, 1, 1},
                                                  {2, 3, 4, 2, 1},
                                                  {3, 5, 2, 1.5, 0.8},
                                                  {2.5, 4, 3, 0.5, 0.6},
                                                  {4, 6, 5, 2, 3}};
    for (const auto& [a, b, cc, mu, nu] : grid) {
        const IdentityReport r = run_check(
            "power_mellin",
            scalars({{"a", a}, {"b", b}, {"c", cc}, {"mu", mu}, {"nu", nu}}),
            1e-6);
        c.expect(r.passed, "power_mellin " + format_params(r.params) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    // mu = 1 must be the plain Mellin code path, bit for bit.
    for (double nu : {0.25, 0.9, 1.5})
        c.expect(mellin_power_integral(2.2, 3.1, 4.3, 1.0, nu) ==
                     mellin_integral(2.2, 3.1, 4.3, nu),
                 "mu=1 degeneracy not bitwise");
    report(2, "power-weighted Mellin transform vs quadrature", c);
}

void criterion_gaussian_theorem() {
    Criterion c;
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>
        families{{{1.0}, {2.0}},
                 {{1.0}, {2.0, 3.0}},
                 {{}, {1.0}},
                 {{1.0, 2.0}, {2.5, 3.0}}};
    const std::vector<std::pair<double, double>> weights{
        {1.0, 0.0}, {1.0, 1.0}, {2.0, 1.5}};
    for (const auto& [upper, lower] : families) {
        for (const auto& [alpha, beta] : weights) {
            ParamRecord point;
            point["upper"] = upper;
            point["lower"] = lower;
            point["alpha"] = {alpha};
            point["beta"] = {beta};
            const IdentityReport r = run_check("gaussian_pfq", point, 1e-6);
            c.expect(r.passed, "gaussian_pfq " + format_params(point) +
                                   ": rel=" + std::to_string(r.rel_diff));
            if (beta == 0.0) {
                const double value =
                    gaussian_integral_pfq({upper, lower}, alpha, beta).value();
                c.expect_abs(value, std::sqrt(M_PI / alpha), 1e-12,
                             "beta=0 exactness");
            }
        }
    }
    report(3, "Gaussian-weight reduction theorem vs quadrature", c);
}

void criterion_fox_wright() {
    Criterion c;
    std::mt19937 rng(20250809);
    std::uniform_real_distribution<double> param(0.5, 4.0);
    std::uniform_real_distribution<double> weight(0.5, 2.5);
    std::uniform_real_distribution<double> amplitude(0.2, 2.8);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = param(rng), b = param(rng), cc = param(rng);
        const double alpha = weight(rng), beta = amplitude(rng);
        const double f24 =
            gaussian_integral_pfq({{a}, {b, cc}}, alpha, beta).value();
        const double psi = fox_wright_gaussian_form(a, b, cc, alpha, beta);
        std::ostringstream what;
        what << "a=" << a << " b=" << b << " c=" << cc << " alpha=" << alpha
             << " beta=" << beta;
        c.expect_rel(f24, psi, 1e-10, what.str());
    }
    report(4, "Fox-Wright form matches the doubled-parameter series", c);
}

void criterion_geometric() {
    Criterion c;
    const double quad_pi =
        integrate([](double z) { return 1.0 / (1.0 + z * z); }, RealLine{},
                  1e-11, 1e-13)
            .value;
    c.expect_abs(quad_pi, M_PI, 1e-10, "Cauchy integral = pi");
    c.expect_abs(geometric_gaussian_integral(1.0, 0.0), M_PI, 1e-10,
                 "closed form at beta=0");
    const std::vector<std::pair<double, double>> grid{
        {1.0, 1.0}, {2.0, 1.0}, {0.5, 1.0}, {1.0, -1.5}, {3.0, 2.0}};
    for (const auto& [alpha, beta] : grid) {
        const IdentityReport r = run_check(
            "geometric_gaussian", scalars({{"alpha", alpha}, {"beta", beta}}),
            1e-8);
        c.expect(r.passed, "geometric " + format_params(r.params) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    bool domain_error = false;
    try {
        geometric_gaussian_integral(1.0, 2.0);
    } catch (const DomainError&) {
        domain_error = true;
    }
    c.expect(domain_error, "beta^2 >= 4 alpha must raise DomainError");
    report(5, "geometric-series integrals", c);
}

void criterion_quadratic_argument() {
    Criterion c;
    // Fully cancelling moment map: the closed series must reproduce the
    // plain Gaussian shift integral sqrt(pi/alpha) e^{beta^2/4alpha}.
    for (const auto& [a, alpha, beta] :
         std::vector<std::array<double, 3>>{{2.0, 1.0, 1.0},
                                            {0.7, 2.0, 1.5}}) {
        const double value = gaussian_quadratic_arg_integral(
            UmbralSymbol({a}, {a}), alpha, beta);
        const double shift =
            std::sqrt(M_PI / alpha) * std::exp(beta * beta / (4.0 * alpha));
        std::ostringstream what;
        what << "cancelling symbol a=" << a << " alpha=" << alpha
             << " beta=" << beta;
        c.expect_rel(value, shift, 1e-10, what.str());
    }
    // Non-degenerate cases against the quadrature oracle.
    for (const auto& point :
         {scalars({{"a", 2}, {"b", 2}, {"c", 7}, {"alpha", 1}, {"beta", 1}}),
          scalars({{"a", 1.5},
                   {"b", 1.5},
                   {"c", 8},
                   {"alpha", 1},
                   {"beta", 0.8}})}) {
        const IdentityReport r = run_check("gaussian_quadratic", point, 1e-8);
        c.expect(r.passed, "quadratic " + format_params(point) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    report(6, "quadratic-argument Gaussian integral", c);
}

void criterion_antiderivatives() {
    Criterion c;
    // Differentiate/antidifferentiate round-trip, exact on dyadic grids.
    const std::vector<HypergeometricParams> dyadic{
        {{2, 2}, {2}}, {{1, 2}, {4}}, {{0.5, 1}, {1}}, {{2, 4}, {1}}};
    for (const HypergeometricParams& params : dyadic) {
        const ParameterShift d = differentiate_pfq(params);
        const ParameterShift a = antidifferentiate_pfq(d.params);
        c.expect(d.prefactor * a.prefactor == 1.0 &&
                     a.params.upper == params.upper &&
                     a.params.lower == params.lower,
                 "round-trip not exact");
    }
    // Power-weighted antiderivative: termwise derivative vs integrand.
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> param(0.5, 3.0);
    std::uniform_real_distribution<double> expo(-0.6, 2.0);
    std::uniform_real_distribution<double> arg(0.05, 0.7);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = param(rng), b = param(rng), cc = param(rng) + 0.3;
        const double alpha = expo(rng), x = arg(rng);
        const HypergeometricParams params{{a, b}, {cc}};
        const auto rule = power_weighted_antiderivative(params, alpha);
        const double f = eval_pfq(rule.params, x).value;
        const double f1 = series_derivative_pfq(rule.params, x, 1);
        const double lhs = std::pow(x, alpha) * f +
                           std::pow(x, alpha + 1.0) / (alpha + 1.0) * f1;
        const double rhs = std::pow(x, alpha) * eval_pfq(params, x).value;
        std::ostringstream what;
        what << "power antiderivative a=" << a << " b=" << b << " c=" << cc
             << " alpha=" << alpha << " x=" << x;
        c.expect_rel(lhs, rhs, 1e-8, what.str());
    }
    // Exponentially weighted antiderivative vs quadrature.
    for (const auto& point :
         {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"alpha", 0}, {"x", 0.5}}),
          scalars({{"a", 1}, {"b", 2}, {"c", 2}, {"alpha", 1}, {"x", 0.3}}),
          scalars({{"a", 0.5},
                   {"b", 1.5},
                   {"c", 2.5},
                   {"alpha", 0.25},
                   {"x", 0.6}}),
          scalars({{"a", 2}, {"b", 1}, {"c", 3}, {"alpha", 1.5}, {"x", 0.4}}),
          scalars(
              {{"a", 1}, {"b", 1}, {"c", 2}, {"alpha", -0.5}, {"x", 0.5}})}) {
        const IdentityReport r = run_check("weighted_exp", point, 1e-6);
        c.expect(r.passed, "weighted_exp " + format_params(point) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    report(7, "antiderivative identities", c);
}

void criterion_euler() {
    Criterion c;
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> base(0.6, 2.0);
    std::uniform_real_distribution<double> gap(0.5, 2.0);
    std::uniform_real_distribution<double> karg(-3.0, 3.0);
    std::uniform_real_distribution<double> garg(-0.85, 0.85);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = base(rng), b = a + gap(rng), x = karg(rng);
        std::ostringstream what;
        what << "euler_1f1 a=" << a << " b=" << b << " x=" << x;
        c.expect_rel(euler_integral_1f1(a, b, x), eval_pfq({{a}, {b}}, x).value,
                     1e-9, what.str());
    }
    for (int trial = 0; trial < 10; ++trial) {
        const double a = base(rng), cc = a + gap(rng), b = base(rng);
        const double x = garg(rng);
        std::ostringstream what;
        what << "euler_2f1 a=" << a << " b=" << b << " c=" << cc << " x=" << x;
        c.expect_rel(euler_integral_2f1(a, b, cc, x),
                     eval_pfq({{a, b}, {cc}}, x).value, 1e-9, what.str());
    }
    for (const auto& [a, b, alpha, beta] :
         std::vector<std::array<double, 4>>{{1, 2, 1, 1},
                                            {0.5, 2.5, 2, 3},
                                            {1.5, 3, 1, 2},
                                            {0.8, 1.9, 0.5, 1},
                                            {2, 4.5, 2, 2.5}}) {
        const double u = beta * beta / (4.0 * alpha);
        const double series =
            eval_pfq({{0.5 * a, 0.5 * (a + 1)}, {0.5 * b, 0.5 * (b + 1)}}, u)
                .value;
        std::ostringstream what;
        what << "kummer_gauss a=" << a << " b=" << b << " alpha=" << alpha
             << " beta=" << beta;
        c.expect_rel(kummer_gauss_transform(a, b, alpha, beta), series, 1e-9,
                     what.str());
    }
    report(8, "Euler integral representations", c);
}

void criterion_ode_residuals() {
    Criterion c;
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> param(0.4, 3.0);
    auto expect_residual = [&c](const OdeResidualReport& r,
                                const std::string& what) {
        c.expect(r.normalized_residual <= 1e-9,
                 what + ": residual=" + std::to_string(r.normalized_residual));
    };
    for (int trial = 0; trial < 10; ++trial) {
        const double a = param(rng), b = param(rng) + 0.3;
        const double cc = param(rng) + 0.5;
        for (int i = 1; i <= 20; ++i) {
            const double x = -0.9 + 1.8 * i / 21.0;
            expect_residual(gauss_ode_residual(a, b, cc, x), "gauss");
            expect_residual(kummer_ode_residual(a, b, 3.0 * x), "kummer");
            expect_residual(kummer_contiguous_residual(a, b, 3.0 * x),
                            "contiguous");
            if (x > 0.0)
                expect_residual(tricomi_eigen_residual(a, b, x), "tricomi");
        }
    }
    for (double x = 0.0; x <= 6.0; x += 0.3)
        expect_residual(cosine_ode_residual(x), "cosine");

    // Negative controls must leave a visible residual.
    {
        const double x = 0.7, nu = 0.0, lambda = 1.0;
        const double f = std::exp(-x), d1 = -f, d2 = f;
        const double residual = (d1 + x * d2) + nu * d1 + lambda * f;
        const double scale = std::max({std::abs(d1), std::abs(x * d2),
                                       std::abs(lambda * f)});
        c.expect(std::abs(residual) / scale > 1e-2, "tricomi control");
    }
    {
        const double x = 0.5, a = 1.0, b = 2.0;
        const double f = std::cos(x), d1 = -std::sin(x), d2 = -std::cos(x);
        const double residual = x * d2 - x * d1 + b * d1 - a * f;
        const double scale = std::max({std::abs(x * d2), std::abs(x * d1),
                                       std::abs(b * d1), std::abs(a * f)});
        c.expect(std::abs(residual) / scale > 1e-2, "kummer control");
    }
    {
        const double x = 0.5, a = 1, b = 2, cc = 3;
        const double f = 1.0 / (1.0 - x);
        const double d1 = f * f, d2 = 2.0 * f * f * f;
        const double residual =
            x * (1 - x) * d2 + (cc - (a + b + 1) * x) * d1 - a * b * f;
        const double scale =
            std::max({std::abs(x * (1 - x) * d2),
                      std::abs((cc - (a + b + 1) * x) * d1),
                      std::abs(a * b * f)});
        c.expect(std::abs(residual) / scale > 1e-2, "gauss control");
    }
    report(9, "differential-relation residual suite", c);
}

void criterion_pochhammer_suite() {
    Criterion c;
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> base(-3.0, 5.0);
    std::uniform_real_distribution<double> positive(0.1, 10.0);
    std::uniform_int_distribution<int> small_shift(0, 12);

    auto rel_ok = [](double lhs, double rhs) {
        const double magnitude = std::max(std::abs(lhs), std::abs(rhs));
        return magnitude < 1e-300 || std::abs(lhs - rhs) <= 1e-10 * magnitude;
    };

    for (int trial = 0; trial < 60; ++trial) {  // addition theorem
        const double k = base(rng), d = base(rng);
        const int r = small_shift(rng);
        double expected = 0.0, binom = 1.0;
        for (int s = 0; s <= r; ++s) {
            expected += binom * pochhammer(d, r - s) * pochhammer(k, s);
            binom *= static_cast<double>(r - s) / (s + 1);
        }
        c.expect(rel_ok(pochhammer(k + d, r), expected), "addition theorem");
    }
    for (int trial = 0; trial < 50; ++trial) {  // split identity
        const double d = positive(rng);
        const int m = small_shift(rng), n = small_shift(rng);
        c.expect(rel_ok(pochhammer_split(d, m, n), pochhammer(d, m + n)),
                 "split identity");
    }
    for (int trial = 0; trial < 40; ++trial) {  // negation identity
        const double d = positive(rng) + 0.1234567;
        const int r = small_shift(rng) % 9;
        c.expect(rel_ok(pochhammer(d, -static_cast<double>(r)),
                        pochhammer_negate(d, r)),
                 "negation identity");
    }
    for (int trial = 0; trial < 40; ++trial) {  // duplication identity
        const double d = positive(rng);
        const int r = small_shift(rng);
        c.expect(rel_ok(pochhammer_duplicate(d, r), pochhammer(d, 2.0 * r)),
                 "duplication identity");
    }
    for (int r = 0; r <= 10; ++r)  // half-shift law
        c.expect(rel_ok(pochhammer(1.0, r - 0.5),
                        std::sqrt(M_PI) * pochhammer(0.5, r)),
                 "half-shift law");
    for (int trial = 0; trial < 30; ++trial) {  // falling-factorial identity
        const int r = small_shift(rng), s = small_shift(rng);
        const double direct =
            s > r ? 0.0
                  : (s % 2 == 0 ? 1.0 : -1.0) *
                        std::exp(std::lgamma(r + 1.0) - std::lgamma(r - s + 1.0));
        c.expect(rel_ok(pochhammer_falling(r, s), direct),
                 "falling factorial");
    }
    report(10, "Pochhammer identity suite (randomized)", c);
}

void criterion_special_functions() {
    Criterion c;
    for (double x : {0.25, 0.75, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 9.0})
        c.expect_rel(tricomi_c(0.0, x), bessel_j0(2.0 * std::sqrt(x)), 1e-9,
                     "tricomi vs j0 at x=" + std::to_string(x));
    for (double x = 0.0; x <= 5.0; x += 0.37) {
        const double j = bessel_j0(x);
        c.expect_abs(j0_squared(x), j * j,
                     1e-9 * std::max(1.0, std::abs(j * j)),
                     "j0 squared at x=" + std::to_string(x));
    }
    for (double x = 0.0; x <= 4.0; x += 0.25)
        c.expect_rel(gauss_transform_cos_half(x), cos_hyp(x), 1e-9,
                     "cosine transform at x=" + std::to_string(x));
    for (double x = -10.0; x <= 10.0; x += 0.5) {
        const double cv = cos_hyp(x), sv = sin_hyp(x);
        c.expect_abs(cv * cv + sv * sv, 1.0, 1e-9,
                     "pythagorean at x=" + std::to_string(x));
    }
    for (double alpha : {1.0, 2.0, 0.5}) {
        const IdentityReport r = run_check("bessel_squared_gaussian",
                                           scalars({{"alpha", alpha}}), 1e-6);
        c.expect(r.passed, "bessel_squared alpha=" + std::to_string(alpha) +
                               ": rel=" + std::to_string(r.rel_diff));
    }
    report(11, "special-function cross-identities", c);
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void criterion_cli(const std::string& cli) {
    Criterion c;
    if (cli.empty()) {
        c.expect(false, "CLI binary path not provided");
        report(12, "command-line interface", c);
        return;
    }
    const std::string quoted = "'" + cli + "'";

    const CommandResult verify = run_command(quoted + " verify");
    c.expect(verify.exit_code == 0,
             "default verify exit=" + std::to_string(verify.exit_code));
    c.expect(verify.output.find(" passed / ") != std::string::npos,
             "verify summary missing");

    const CommandResult verify_again = run_command(quoted + " verify");
    c.expect(verify.output == verify_again.output,
             "verify output not byte-identical across runs");

    const std::string table_cmd =
        quoted + " table cos_hyp --from 0 --to 3.2 --step 0.1";
    const CommandResult table = run_command(table_cmd);
    c.expect(table.exit_code == 0, "table exit code");
    c.expect(table.output == run_command(table_cmd).output,
             "table output not byte-identical");
    int rows = 0;
    for (char ch : table.output) rows += ch == '\n' ? 1 : 0;
    c.expect(rows == 34, "table row count " + std::to_string(rows) +
                             " (expected header + 33 rows)");

    const CommandResult eval =
        run_command(quoted + " eval pfq --upper 1,1 --lower 2 --x 0.5");
    c.expect(eval.exit_code == 0, "eval exit code");
    c.expect(eval.output.rfind("1.38629436111989\n", 0) == 0,
             "eval value formatting: " + eval.output);

    c.expect(run_command(quoted + " eval no_such_function --x 1").exit_code ==
                 2,
             "unknown function should exit 2");
    c.expect(run_command(quoted + " eval pfq --upper 1,1").exit_code == 2,
             "missing --lower/--x should exit 2");
    c.expect(run_command(quoted + " frobnicate").exit_code == 2,
             "unknown subcommand should exit 2");
    c.expect(run_command(quoted +
                         " eval pfq --upper 1,1 --lower 2 --x 1.5")
                     .exit_code == 3,
             "unit-disk violation should exit 3");
    c.expect(run_command(quoted + " eval mellin --a 2 --b 3 --c 4 --nu 9")
                     .exit_code == 3,
             "Mellin window violation should exit 3");
    c.expect(run_command(quoted +
                         " eval pfq --upper 1,1 --lower 2 --x 0.999 "
                         "--max-terms 50")
                     .exit_code == 4,
             "term-budget exhaustion should exit 4");

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path bad = dir / "pfq_acceptance_bad_suite.json";
    {
        std::ofstream out(bad);
        out << "{ not json";
    }
    c.expect(run_command(quoted + " verify --suite " + bad.string())
                     .exit_code == 2,
             "malformed suite should exit 2");
    const fs::path strict = dir / "pfq_acceptance_strict_suite.json";
    {
        std::ofstream out(strict);
        out << R"({"identities":[{"id":"derivative_recurrence",)"
            << R"("grid":[{"a":1,"b":1,"c":2,"x":0.3}],"tolerance":1e-30}]})";
    }
    const CommandResult failing =
        run_command(quoted + " verify --suite " + strict.string());
    c.expect(failing.exit_code == 5,
             "unattainable tolerance should exit 5, got " +
                 std::to_string(failing.exit_code));
    report(12, "command-line interface", c);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion_mellin();
    criterion_power_mellin();
    criterion_gaussian_theorem();
    criterion_fox_wright();
    criterion_geometric();
    criterion_quadratic_argument();
    criterion_antiderivatives();
    criterion_euler();
    criterion_ode_residuals();
    criterion_pochhammer_suite();
    criterion_special_functions();
    criterion_cli(cli);
    if (g_failed_criteria == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria failed\n", g_failed_criteria);
    return g_failed_criteria;
}
