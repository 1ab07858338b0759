#include "pfq/identity_suite.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "pfq/errors.hpp"
#include "pfq/integrals.hpp"
#include "pfq/odes.hpp"
#include "pfq/pochhammer.hpp"
#include "pfq/quadrature.hpp"
#include "pfq/special.hpp"
#include "pfq/umbral.hpp"

namespace pfq {

namespace oracle {

namespace {

// 2F1(a', b''; c; u) through its Euler integral, for c > b'' > 0. Stays
// cheap and well conditioned as u -> 1, where the series needs O(1/(1-u))
// terms.
double hyp2f1_by_euler(double a_prime, double b_second, double c, double u) {
    const double factor = std::exp(std::lgamma(c) - std::lgamma(b_second) -
                                   std::lgamma(c - b_second));
    auto kernel = [a_prime, u](double v) {
        return std::pow(1.0 - u * v, -a_prime);
    };
    return factor *
           beta_weighted_integral(b_second, c - b_second, kernel, 1e-11, 1e-30)
               .value;
}

}  // namespace

double hyp2f1_at_negative(double a, double b, double c, double t) {
    // Pfaff reflection in either parameter: the series argument u = t/(1+t)
    // stays inside the unit disk for all t >= 0. Prefer a reflected form
    // that terminates; otherwise sum the series while u is moderate and
    // switch to the Euler integral near u = 1.
    const SeriesControl control{1e-12, 8, 200000};
    const double u = t / (1.0 + t);
    if (is_nonpositive_integer(c - b))
        return std::pow(1.0 + t, -a) *
               eval_pfq({{a, c - b}, {c}}, u, control).value;
    if (is_nonpositive_integer(c - a))
        return std::pow(1.0 + t, -b) *
               eval_pfq({{b, c - a}, {c}}, u, control).value;
    if (u <= 0.95)
        return std::pow(1.0 + t, -a) *
               eval_pfq({{a, c - b}, {c}}, u, control).value;
    if (c - b > 0.0)
        return std::pow(1.0 + t, -a) * hyp2f1_by_euler(a, c - b, c, u);
    if (c - a > 0.0)
        return std::pow(1.0 + t, -b) * hyp2f1_by_euler(b, c - a, c, u);
    return std::pow(1.0 + t, -a) *
           eval_pfq({{a, c - b}, {c}}, u, {1e-12, 8, 2000000}).value;
}

double hyp0f1_entire(double b, double w) {
    if (w >= -50.0)
        return eval_pfq({{}, {b}}, w, {1e-14, 8, 100000}).value;
    const double y = -w;
    const double order = b - 1.0;
    return std::exp(std::lgamma(b) - 0.5 * order * std::log(y)) *
           std::cyl_bessel_j(order, 2.0 * std::sqrt(y));
}

}  // namespace oracle

namespace {

const SeriesControl kIntegrandControl{1e-12, 8, 100000};

double get(const ParamRecord& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end() || it->second.size() != 1)
        throw DomainError("identity parameter '" + key +
                          "' missing or not scalar");
    return it->second.front();
}

std::vector<double> get_list(const ParamRecord& params,
                             const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw DomainError("identity parameter list '" + key + "' missing");
    return it->second;
}

double gaussian_weighted_quad(const HypergeometricParams& p, double alpha,
                              double beta, double rel_tol) {
    auto integrand = [&](double x) {
        const double weight = std::exp(-alpha * x * x);
        if (weight == 0.0) return 0.0;
        return weight * eval_pfq(p, beta * x, kIntegrandControl).value;
    };
    return integrate(integrand, RealLine{}, rel_tol, 1e-13).value;
}

double residual_lhs(const OdeResidualReport& report) {
    return report.normalized_residual;
}

double appell_double_sum(double alpha, double gamma, double beta,
                         double beta_prime, double x, double y) {
    double total = 0.0;
    for (int m = 0; m <= 60; ++m) {
        for (int n = 0; n <= 60; ++n) {
            total += pochhammer(alpha, m + n) * pochhammer(beta, m) /
                     (pochhammer(gamma, m + n) * pochhammer(beta_prime, n)) *
                     std::pow(x, m) * std::pow(y, n) /
                     (std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
        }
    }
    return total;
}

using R = IdentityReport;
using P = ParamRecord;

R check_mellin(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double nu = get(p, "nu");
    const double rhs = mellin_integral(a, b, c, nu);
    auto f = [&](double t) {
        return std::pow(t, nu - 1.0) * oracle::hyp2f1_at_negative(a, b, c, t);
    };
    const double lhs = integrate(f, HalfLine{0.0}, 1e-8, 1e-12).value;
    return make_identity_report("mellin", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_power_mellin(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double mu = get(p, "mu"), nu = get(p, "nu");
    const double rhs = mellin_power_integral(a, b, c, mu, nu);
    auto f = [&](double t) {
        return std::pow(t, nu - 1.0) *
               oracle::hyp2f1_at_negative(a, b, c, std::pow(t, mu));
    };
    const double lhs = integrate(f, HalfLine{0.0}, 1e-8, 1e-12).value;
    return make_identity_report("power_mellin", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_gaussian_pfq(const P& p, double tol) {
    const HypergeometricParams params{get_list(p, "upper"),
                                      get_list(p, "lower")};
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double rhs = gaussian_integral_pfq(params, alpha, beta).value();
    const double lhs = gaussian_weighted_quad(params, alpha, beta, 1e-8);
    return make_identity_report("gaussian_pfq", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_gaussian_cosine(const P& p, double tol) {
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double rhs = gaussian_cosine_integral(alpha, beta);
    // cos(sqrt(beta x)) realized as 0F1(-; 1/2; -beta x / 4).
    const double lhs =
        gaussian_weighted_quad({{}, {0.5}}, alpha, -0.25 * beta, 1e-8);
    return make_identity_report("gaussian_cosine", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_gaussian_quadratic(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double rhs = gaussian_quadratic_arg_integral(a, b, c, alpha, beta);
    auto integrand = [&](double x) {
        const double w = -alpha * x * x + beta * x;
        // With b = a the 1F2 collapses to 0F1(-; c; w), which the oracle can
        // follow far into the oscillatory region; the raw series route is
        // only safe for moderate |w|.
        if (a == b) return oracle::hyp0f1_entire(c, w);
        return eval_pfq({{a}, {b, c}}, w, kIntegrandControl).value;
    };
    const double lhs = integrate(integrand, RealLine{}, 1e-8, 1e-12).value;
    return make_identity_report("gaussian_quadratic", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_geometric_gaussian(const P& p, double tol) {
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double rhs = geometric_gaussian_integral(alpha, beta);
    auto f = [&](double z) { return 1.0 / (1.0 + alpha * z * z - beta * z); };
    const double lhs = integrate(f, RealLine{}, 1e-11, 1e-13).value;
    return make_identity_report("geometric_gaussian", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_weighted_exp(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double alpha = get(p, "alpha"), x = get(p, "x");
    const double rhs = weighted_exp_integral(a, b, c, alpha, x);
    // Substitute t = x w so the power weight is handled analytically.
    auto f = [&](double w) {
        const double t = x * w;
        return std::exp(-t) * eval_pfq({{a, b}, {c}}, t, kIntegrandControl).value;
    };
    const double lhs = std::pow(x, alpha + 1.0) *
                       beta_weighted_integral(alpha + 1.0, 1.0, f, 1e-9).value;
    return make_identity_report("weighted_exp", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_bessel_squared_gaussian(const P& p, double tol) {
    const double alpha = get(p, "alpha");
    const double rhs = bessel_squared_gaussian_integral(alpha);
    const double lhs =
        gaussian_weighted_quad({{0.5}, {1.0, 1.0}}, alpha, -1.0, 1e-8);
    return make_identity_report("bessel_squared_gaussian", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_fox_wright_equivalence(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double lhs = gaussian_integral_pfq({{a}, {b, c}}, alpha, beta)
                           .value(kIntegrandControl);
    const double rhs = fox_wright_gaussian_form(a, b, c, alpha, beta,
                                                kIntegrandControl);
    return make_identity_report("fox_wright_equivalence", p, lhs, rhs, tol,
                                LhsSource::series);
}

R check_euler_1f1(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), x = get(p, "x");
    const double lhs = euler_integral_1f1(a, b, x);
    const double rhs = eval_pfq({{a}, {b}}, x).value;
    return make_identity_report("euler_1f1", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_euler_2f1(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double x = get(p, "x");
    const double lhs = euler_integral_2f1(a, b, c, x);
    const double rhs = eval_pfq({{a, b}, {c}}, x).value;
    return make_identity_report("euler_2f1", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_kummer_gauss(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b");
    const double alpha = get(p, "alpha"), beta = get(p, "beta");
    const double lhs = kummer_gauss_transform(a, b, alpha, beta);
    const double u = beta * beta / (4.0 * alpha);
    const double rhs =
        eval_pfq({{0.5 * a, 0.5 * (a + 1.0)}, {0.5 * b, 0.5 * (b + 1.0)}}, u)
            .value;
    return make_identity_report("kummer_gauss", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_power_antiderivative(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double alpha = get(p, "alpha"), x = get(p, "x");
    const auto rule = power_weighted_antiderivative({{a, b}, {c}}, alpha);
    const double rhs = rule.value(x);
    auto f = [&](double w) {
        return eval_pfq({{a, b}, {c}}, x * w, kIntegrandControl).value;
    };
    const double lhs = std::pow(x, alpha + 1.0) *
                       beta_weighted_integral(alpha + 1.0, 1.0, f, 1e-9).value;
    return make_identity_report("power_antiderivative", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_antiderivative(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double x = get(p, "x");
    const ParameterShift rule = antidifferentiate_pfq({{a, b}, {c}});
    const double rhs =
        rule.prefactor * (eval_pfq(rule.params, x).value - 1.0);
    auto f = [&](double t) {
        return eval_pfq({{a, b}, {c}}, t, kIntegrandControl).value;
    };
    const double lo = std::min(0.0, x), hi = std::max(0.0, x);
    double lhs = integrate(f, Finite{lo, hi}, 1e-9, 1e-14).value;
    if (x < 0.0) lhs = -lhs;
    return make_identity_report("antiderivative", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_derivative_recurrence(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double x = get(p, "x");
    const double h = 1e-5;
    const HypergeometricParams params{{a, b}, {c}};
    const double lhs = (eval_pfq(params, x + h).value -
                        eval_pfq(params, x - h).value) /
                       (2.0 * h);
    const ParameterShift rule = differentiate_pfq(params);
    const double rhs = rule.prefactor * eval_pfq(rule.params, x).value;
    return make_identity_report("derivative_recurrence", p, lhs, rhs, tol,
                                LhsSource::series);
}

R check_tricomi_eigen(const P& p, double tol) {
    const double nu = get(p, "nu"), lambda = get(p, "lambda");
    const double x = get(p, "x");
    const double lhs = residual_lhs(tricomi_eigen_residual(nu, lambda, x));
    return make_identity_report("tricomi_eigen", p, lhs, 0.0, tol,
                                LhsSource::series);
}

R check_kummer_ode(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), x = get(p, "x");
    const double lhs = residual_lhs(kummer_ode_residual(a, b, x));
    return make_identity_report("kummer_ode", p, lhs, 0.0, tol,
                                LhsSource::series);
}

R check_kummer_contiguous(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), x = get(p, "x");
    const double lhs = residual_lhs(kummer_contiguous_residual(a, b, x));
    return make_identity_report("kummer_contiguous", p, lhs, 0.0, tol,
                                LhsSource::series);
}

R check_gauss_ode(const P& p, double tol) {
    const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
    const double x = get(p, "x");
    const double lhs = residual_lhs(gauss_ode_residual(a, b, c, x));
    return make_identity_report("gauss_ode", p, lhs, 0.0, tol,
                                LhsSource::series);
}

R check_cosine_ode(const P& p, double tol) {
    const double x = get(p, "x");
    const double lhs = residual_lhs(cosine_ode_residual(x));
    return make_identity_report("cosine_ode", p, lhs, 0.0, tol,
                                LhsSource::series);
}

R check_tricomi_bessel(const P& p, double tol) {
    const double x = get(p, "x");
    const double lhs = tricomi_c(0.0, x);
    const double rhs = bessel_j0(2.0 * std::sqrt(x));
    return make_identity_report("tricomi_bessel", p, lhs, rhs, tol,
                                LhsSource::series);
}

R check_j0_squared(const P& p, double tol) {
    const double x = get(p, "x");
    const double lhs = j0_squared(x);
    const double j = bessel_j0(x);
    return make_identity_report("j0_squared", p, lhs, j * j, tol,
                                LhsSource::series);
}

R check_cos_gauss_transform(const P& p, double tol) {
    const double x = get(p, "x");
    const double lhs = gauss_transform_cos_half(x);
    const double rhs = cos_hyp(x);
    return make_identity_report("cos_gauss_transform", p, lhs, rhs, tol,
                                LhsSource::series);
}

R check_pythagorean(const P& p, double tol) {
    const double x = get(p, "x");
    const double c = cos_hyp(x), s = sin_hyp(x);
    return make_identity_report("pythagorean", p, c * c + s * s, 1.0, tol,
                                LhsSource::series);
}

R check_landau_radial(const P& p, double tol) {
    const LandauParams params{get(p, "lambda"), get(p, "m_l")};
    const double xi = get(p, "xi");
    const double rhs = landau_radial(params, xi);
    const double m = std::abs(params.m_l);
    const double lhs =
        std::exp(-0.5 * xi) * std::pow(xi, 0.5 * m) *
        euler_integral_1f1(params.upper_param(), params.lower_param(), xi);
    return make_identity_report("landau_radial", p, lhs, rhs, tol,
                                LhsSource::quadrature);
}

R check_pochhammer_duplication(const P& p, double tol) {
    const double d = get(p, "d");
    const int r = static_cast<int>(std::lround(get(p, "r")));
    const double lhs = pochhammer_duplicate(d, r);
    const double rhs = pochhammer(d, 2.0 * r);
    return make_identity_report("pochhammer_duplication", p, lhs, rhs, tol,
                                LhsSource::series);
}

R check_appell(const P& p, double tol) {
    const double alpha = get(p, "alpha"), gamma = get(p, "gamma");
    const double beta = get(p, "beta"), beta_prime = get(p, "beta_prime");
    const double x = get(p, "x"), y = get(p, "y");
    const double lhs = eval_appell(alpha, gamma, beta, beta_prime, x, y).value;
    const double rhs =
        appell_double_sum(alpha, gamma, beta, beta_prime, x, y);
    return make_identity_report("appell_double_sum", p, lhs, rhs, tol,
                                LhsSource::series);
}

P scalars(std::initializer_list<std::pair<const char*, double>> entries) {
    P record;
    for (const auto& [key, value] : entries) record[key] = {value};
    return record;
}

}  // namespace

IdentityReport make_identity_report(std::string id, ParamRecord params,
                                    double lhs, double rhs, double tolerance,
                                    LhsSource source) {
    IdentityReport report;
    report.identity_id = std::move(id);
    report.params = std::move(params);
    report.lhs = lhs;
    report.rhs = rhs;
    report.abs_diff = std::abs(lhs - rhs);
    const double magnitude = std::max(std::abs(lhs), std::abs(rhs));
    report.rel_diff = magnitude < 1e-300 ? 0.0 : report.abs_diff / magnitude;
    report.tolerance = tolerance;
    report.lhs_source = source;
    report.passed = std::abs(rhs) < 1e-12 ? report.abs_diff <= tolerance
                                          : report.rel_diff <= tolerance;
    return report;
}

const std::map<std::string, IdentityCheck>& identity_registry() {
    static const std::map<std::string, IdentityCheck> registry{
        {"mellin", check_mellin},
        {"power_mellin", check_power_mellin},
        {"gaussian_pfq", check_gaussian_pfq},
        {"gaussian_cosine", check_gaussian_cosine},
        {"gaussian_quadratic", check_gaussian_quadratic},
        {"geometric_gaussian", check_geometric_gaussian},
        {"weighted_exp", check_weighted_exp},
        {"bessel_squared_gaussian", check_bessel_squared_gaussian},
        {"fox_wright_equivalence", check_fox_wright_equivalence},
        {"euler_1f1", check_euler_1f1},
        {"euler_2f1", check_euler_2f1},
        {"kummer_gauss", check_kummer_gauss},
        {"power_antiderivative", check_power_antiderivative},
        {"antiderivative", check_antiderivative},
        {"derivative_recurrence", check_derivative_recurrence},
        {"tricomi_eigen", check_tricomi_eigen},
        {"kummer_ode", check_kummer_ode},
        {"kummer_contiguous", check_kummer_contiguous},
        {"gauss_ode", check_gauss_ode},
        {"cosine_ode", check_cosine_ode},
        {"tricomi_bessel", check_tricomi_bessel},
        {"j0_squared", check_j0_squared},
        {"cos_gauss_transform", check_cos_gauss_transform},
        {"pythagorean", check_pythagorean},
        {"landau_radial", check_landau_radial},
        {"pochhammer_duplication", check_pochhammer_duplication},
        {"appell_double_sum", check_appell},
    };
    return registry;
}

std::vector<IdentityReport> run_suite(const IdentitySuite& suite) {
    const auto& registry = identity_registry();
    std::vector<IdentityReport> reports;
    for (const IdentityCase& identity : suite.identities) {
        const auto it = registry.find(identity.id);
        if (it == registry.end())
            throw DomainError("unknown identity id '" + identity.id + "'");
        for (const ParamRecord& point : identity.grid) {
            try {
                reports.push_back(it->second(point, identity.tolerance));
            } catch (const std::exception&) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                reports.push_back(make_identity_report(
                    identity.id, point, nan, nan, identity.tolerance,
                    LhsSource::series));
            }
        }
    }
    return reports;
}

IdentitySuite default_suite() {
    IdentitySuite suite;
    auto add = [&suite](std::string id, double tol,
                        std::vector<ParamRecord> grid) {
        suite.identities.push_back({std::move(id), std::move(grid), tol});
    };

    add("mellin", 1e-6,
        {scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"nu", 1}}),
         scalars({{"a", 3}, {"b", 5}, {"c", 2}, {"nu", 0.5}}),
         scalars({{"a", 2.5}, {"b", 4}, {"c", 3}, {"nu", 1.5}}),
         scalars({{"a", 4}, {"b", 6}, {"c", 5}, {"nu", 2}}),
         scalars({{"a", 2}, {"b", 2}, {"c", 3}, {"nu", 0.75}})});
    add("power_mellin", 1e-6,
        {scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"mu", 1}, {"nu", 1}}),
         scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"mu", 2}, {"nu", 1}}),
         scalars({{"a", 3}, {"b", 5}, {"c", 2}, {"mu", 1.5}, {"nu", 0.8}}),
         scalars({{"a", 2.5}, {"b", 4}, {"c", 3}, {"mu", 0.5}, {"nu", 0.6}}),
         scalars({{"a", 4}, {"b", 6}, {"c", 5}, {"mu", 2}, {"nu", 3}})});

    std::vector<ParamRecord> gaussian_grid;
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>
        families{{{1.0}, {2.0}},
                 {{1.0}, {2.0, 3.0}},
                 {{}, {1.0}},
                 {{1.0, 2.0}, {2.5, 3.0}}};
    for (const auto& [upper, lower] : families) {
        for (const auto& [alpha, beta] :
             std::vector<std::pair<double, double>>{{1.0, 0.0}, {1.0, 1.0},
                                                    {2.0, 1.5}}) {
            ParamRecord rec;
            rec["upper"] = upper;
            rec["lower"] = lower;
            rec["alpha"] = {alpha};
            rec["beta"] = {beta};
            gaussian_grid.push_back(std::move(rec));
        }
    }
    add("gaussian_pfq", 1e-6, std::move(gaussian_grid));

    add("gaussian_cosine", 1e-6,
        {scalars({{"alpha", 1}, {"beta", 0}}),
         scalars({{"alpha", 1}, {"beta", 1}}),
         scalars({{"alpha", 4}, {"beta", 1}}),
         scalars({{"alpha", 2}, {"beta", 3}})});
    add("gaussian_quadratic", 1e-8,
        {scalars({{"a", 2}, {"b", 2}, {"c", 7}, {"alpha", 1}, {"beta", 1}}),
         scalars(
             {{"a", 1.5}, {"b", 1.5}, {"c", 8}, {"alpha", 1}, {"beta", 0.8}})});
    add("geometric_gaussian", 1e-8,
        {scalars({{"alpha", 1}, {"beta", 0}}),
         scalars({{"alpha", 1}, {"beta", 1}}),
         scalars({{"alpha", 2}, {"beta", 1}}),
         scalars({{"alpha", 0.5}, {"beta", 1}}),
         scalars({{"alpha", 1}, {"beta", -1.5}})});
    add("weighted_exp", 1e-6,
        {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"alpha", 0}, {"x", 0.5}}),
         scalars({{"a", 1}, {"b", 2}, {"c", 2}, {"alpha", 1}, {"x", 0.3}}),
         scalars(
             {{"a", 0.5}, {"b", 1.5}, {"c", 2.5}, {"alpha", 0.25}, {"x", 0.6}}),
         scalars({{"a", 2}, {"b", 1}, {"c", 3}, {"alpha", 1.5}, {"x", 0.4}}),
         scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"alpha", -0.5}, {"x", 0.5}})});
    add("bessel_squared_gaussian", 1e-6,
        {scalars({{"alpha", 1}}), scalars({{"alpha", 2}}),
         scalars({{"alpha", 0.5}})});
    add("fox_wright_equivalence", 1e-10,
        {scalars({{"a", 1}, {"b", 2}, {"c", 3}, {"alpha", 1}, {"beta", 2}}),
         scalars(
             {{"a", 0.5}, {"b", 1.5}, {"c", 2.5}, {"alpha", 1}, {"beta", 1}}),
         scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"alpha", 2}, {"beta", 3}}),
         scalars(
             {{"a", 1.2}, {"b", 0.8}, {"c", 2.2}, {"alpha", 0.7}, {"beta", 1.1}}),
         scalars(
             {{"a", 3}, {"b", 2}, {"c", 5}, {"alpha", 1.5}, {"beta", 2.5}})});
    add("euler_1f1", 1e-9,
        {scalars({{"a", 1}, {"b", 2}, {"x", 1}}),
         scalars({{"a", 0.5}, {"b", 1.5}, {"x", -2}}),
         scalars({{"a", 2}, {"b", 3.5}, {"x", 0.7}}),
         scalars({{"a", 0.8}, {"b", 2.2}, {"x", -1.3}}),
         scalars({{"a", 1.5}, {"b", 4}, {"x", 2.5}})});
    add("euler_2f1", 1e-9,
        {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"x", 0.5}}),
         scalars({{"a", 0.7}, {"b", 2.1}, {"c", 3.3}, {"x", -0.8}}),
         scalars({{"a", 1.5}, {"b", 0.5}, {"c", 2.5}, {"x", 0.3}}),
         scalars({{"a", 2}, {"b", 1.2}, {"c", 3.7}, {"x", -0.5}}),
         scalars({{"a", 0.9}, {"b", 1.8}, {"c", 2.4}, {"x", 0.6}})});
    add("kummer_gauss", 1e-9,
        {scalars({{"a", 1}, {"b", 2}, {"alpha", 1}, {"beta", 1}}),
         scalars({{"a", 0.5}, {"b", 2.5}, {"alpha", 2}, {"beta", 3}}),
         scalars({{"a", 1.5}, {"b", 3}, {"alpha", 1}, {"beta", 2}}),
         scalars({{"a", 0.8}, {"b", 1.9}, {"alpha", 0.5}, {"beta", 1}}),
         scalars({{"a", 2}, {"b", 4.5}, {"alpha", 2}, {"beta", 2.5}})});
    add("power_antiderivative", 1e-6,
        {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"alpha", 0}, {"x", 0.25}}),
         scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"alpha", 1}, {"x", 0.5}}),
         scalars(
             {{"a", 0.5}, {"b", 1.5}, {"c", 2}, {"alpha", 0.5}, {"x", 0.3}}),
         scalars({{"a", 1}, {"b", 2}, {"c", 3}, {"alpha", -0.5}, {"x", 0.4}}),
         scalars(
             {{"a", 1.5}, {"b", 2.5}, {"c", 3.5}, {"alpha", 2}, {"x", 0.6}})});
    add("antiderivative", 1e-6,
        {scalars({{"a", 2}, {"b", 3}, {"c", 4}, {"x", 0.5}}),
         scalars({{"a", 2.5}, {"b", 2}, {"c", 3.5}, {"x", 0.3}}),
         scalars({{"a", 3}, {"b", 2}, {"c", 4}, {"x", -0.4}}),
         scalars({{"a", 2}, {"b", 2}, {"c", 2}, {"x", 0.25}}),
         scalars({{"a", 1.5}, {"b", 3}, {"c", 2.5}, {"x", 0.5}})});
    add("derivative_recurrence", 1e-6,
        {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"x", -0.4}}),
         scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"x", 0.1}}),
         scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"x", 0.5}}),
         scalars({{"a", 2}, {"b", 0.5}, {"c", 1.7}, {"x", 0.3}}),
         scalars({{"a", 1.5}, {"b", 2.5}, {"c", 3}, {"x", -0.2}})});
    add("tricomi_eigen", 1e-9,
        {scalars({{"nu", 0}, {"lambda", 1}, {"x", 0.7}}),
         scalars({{"nu", 1.5}, {"lambda", 2}, {"x", 0.3}}),
         scalars({{"nu", 0.5}, {"lambda", 1}, {"x", 1.2}}),
         scalars({{"nu", 2}, {"lambda", 0.5}, {"x", 2}}),
         scalars({{"nu", 1}, {"lambda", 3}, {"x", 0.4}})});
    add("kummer_ode", 1e-9,
        {scalars({{"a", 1}, {"b", 2}, {"x", 0.5}}),
         scalars({{"a", -2}, {"b", 1.5}, {"x", 3}}),
         scalars({{"a", 0.5}, {"b", 1.5}, {"x", -2}}),
         scalars({{"a", 2}, {"b", 3}, {"x", 1}}),
         scalars({{"a", 1.5}, {"b", 2.5}, {"x", -1}})});
    add("kummer_contiguous", 1e-9,
        {scalars({{"a", 1}, {"b", 2}, {"x", 1}}),
         scalars({{"a", 0.5}, {"b", 1.5}, {"x", -2}}),
         scalars({{"a", 2}, {"b", 3}, {"x", 0.7}}),
         scalars({{"a", 1.2}, {"b", 2.2}, {"x", -0.5}}),
         scalars({{"a", 0.8}, {"b", 1.8}, {"x", 1.5}})});
    add("gauss_ode", 1e-9,
        {scalars({{"a", 1}, {"b", 1}, {"c", 2}, {"x", 0.3}}),
         scalars({{"a", 2}, {"b", 0.5}, {"c", 1.7}, {"x", -0.6}}),
         scalars({{"a", 1.5}, {"b", 2.5}, {"c", 3.5}, {"x", 0.5}}),
         scalars({{"a", 0.7}, {"b", 1.3}, {"c", 2.1}, {"x", -0.3}}),
         scalars({{"a", 2}, {"b", 2}, {"c", 3}, {"x", 0.8}})});
    add("cosine_ode", 1e-8,
        {scalars({{"x", 0}}), scalars({{"x", 0.5}}), scalars({{"x", 2}}),
         scalars({{"x", 5}}), scalars({{"x", 10}})});
    add("tricomi_bessel", 1e-10,
        {scalars({{"x", 0.5}}), scalars({{"x", 1}}), scalars({{"x", 2}}),
         scalars({{"x", 3.5}}), scalars({{"x", 5}}), scalars({{"x", 9}})});
    add("j0_squared", 1e-10,
        {scalars({{"x", 0}}), scalars({{"x", 0.5}}), scalars({{"x", 1}}),
         scalars({{"x", 2}}), scalars({{"x", 3}}), scalars({{"x", 5}})});
    add("cos_gauss_transform", 1e-9,
        {scalars({{"x", 0}}), scalars({{"x", 0.5}}), scalars({{"x", 1}}),
         scalars({{"x", 2}}), scalars({{"x", 3}}), scalars({{"x", 4}})});
    add("pythagorean", 1e-10,
        {scalars({{"x", -10}}), scalars({{"x", -5}}), scalars({{"x", -2}}),
         scalars({{"x", -0.5}}), scalars({{"x", 0}}), scalars({{"x", 0.5}}),
         scalars({{"x", 2}}), scalars({{"x", 5}}), scalars({{"x", 10}})});
    add("landau_radial", 1e-6,
        {scalars({{"lambda", 0.3}, {"m_l", 1}, {"xi", 1}}),
         scalars({{"lambda", 0.1}, {"m_l", 0}, {"xi", 2}}),
         scalars({{"lambda", -0.5}, {"m_l", 0.5}, {"xi", 0.8}}),
         scalars({{"lambda", 0.2}, {"m_l", 2}, {"xi", 1.5}}),
         scalars({{"lambda", -0.9}, {"m_l", 1}, {"xi", 3}})});
    add("pochhammer_duplication", 1e-12,
        {scalars({{"d", 1}, {"r", 1}}), scalars({{"d", 3}, {"r", 0}}),
         scalars({{"d", 2}, {"r", 2}}), scalars({{"d", 0.5}, {"r", 3}}),
         scalars({{"d", 7.3}, {"r", 5}}), scalars({{"d", -2.5}, {"r", 4}})});
    add("appell_double_sum", 1e-10,
        {scalars({{"alpha", 1},
                  {"gamma", 2},
                  {"beta", 1},
                  {"beta_prime", 1},
                  {"x", 0.1},
                  {"y", 0.2}}),
         scalars({{"alpha", 0.8},
                  {"gamma", 2.5},
                  {"beta", 1.2},
                  {"beta_prime", 1.7},
                  {"x", 0.15},
                  {"y", 0.1}}),
         scalars({{"alpha", 2},
                  {"gamma", 3},
                  {"beta", 0.5},
                  {"beta_prime", 1.5},
                  {"x", -0.2},
                  {"y", 0.3}})});
    return suite;
}

std::string format_params(const ParamRecord& params) {
    std::string out;
    for (const auto& [key, values] : params) {
        if (!out.empty()) out += ';';
        out += key;
        out += '=';
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += '|';
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.15g", values[i]);
            out += buf;
        }
    }
    return out;
}

std::string to_csv(const std::vector<IdentityReport>& reports) {
    std::string out = "identity_id,params,lhs,rhs,rel_diff,passed\n";
    for (const IdentityReport& r : reports) {
        char buf[128];
        out += r.identity_id;
        out += ',';
        out += format_params(r.params);
        std::snprintf(buf, sizeof(buf), ",%.15g,%.15g,%.15g,", r.lhs, r.rhs,
                      r.rel_diff);
        out += buf;
        out += r.passed ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace pfq
