#include <cmath>

#include "pfq/errors.hpp"
#include "pfq/integrals.hpp"
#include "pfq/quadrature.hpp"
#include "testing.hpp"

using namespace pfq;

TEST_CASE("mellin closed form") {
    CHECK_REL(mellin_integral(2, 3, 4, 1), 1.5, 1e-13);
    CHECK_REL(mellin_integral(3, 5, 2, 0.5), 0.64427193091196932, 1e-12);
    CHECK_REL(mellin_integral(2.5, 4, 3, 1.5), 1.0 / 3.0, 1e-12);
    CHECK_REL(mellin_integral(4, 6, 5, 2), 0.1, 1e-12);
    CHECK_THROWS_AS(mellin_integral(2, 3, 4, 2.5), DomainError);
    CHECK_THROWS_AS(mellin_integral(2, 3, 4, 0.0), DomainError);
}

TEST_CASE("power mellin closed form") {
    CHECK_REL(mellin_power_integral(2, 3, 4, 2, 1), 0.3 * M_PI, 1e-13);
    CHECK_THROWS_AS(mellin_power_integral(2, 3, 4, 2, 0.0), DomainError);
    CHECK_THROWS_AS(mellin_power_integral(2, 3, 4, 0.0, 1), DomainError);
    // mu = 1 is bitwise the plain Mellin path.
    for (double nu : {0.25, 0.9, 1.5})
        CHECK(mellin_power_integral(2.2, 3.1, 4.3, 1.0, nu) ==
              mellin_integral(2.2, 3.1, 4.3, nu));
}

TEST_CASE("gaussian reduction of pFq") {
    const GaussianReduction g = gaussian_integral_pfq({{1}, {2}}, 1.0, 1.0);
    CHECK(g.params.upper == std::vector<double>{0.5, 1.0});
    CHECK(g.params.lower == std::vector<double>{1.0, 1.5});
    CHECK(g.argument == 0.25);
    CHECK_REL(g.value(), 1.9319289830082137, 1e-12);

    // One lower parameter: the argument picks up the 4^{p-q} factor.
    const GaussianReduction h = gaussian_integral_pfq({{0.7}, {1.1, 2.0}}, 2.0, 3.0);
    CHECK_REL(h.argument, 9.0 / (16.0 * 2.0), 1e-15);

    const GaussianReduction zero_beta = gaussian_integral_pfq({{1}, {2}}, 4.0, 0.0);
    CHECK(zero_beta.value() == std::sqrt(M_PI / 4.0));

    CHECK_THROWS_AS(gaussian_integral_pfq({{1, 2, 3}, {4}}, 1.0, 1.0),
                    DomainError);
    CHECK_THROWS_AS(gaussian_integral_pfq({{1}, {2}}, -1.0, 1.0), DomainError);
    // p = q+1 doubles into a divergent series unless beta = 0.
    CHECK_THROWS_AS(gaussian_integral_pfq({{1.3, 2.1}, {2.4}}, 1.0, 0.5),
                    DomainError);
    CHECK(gaussian_integral_pfq({{1.3, 2.1}, {2.4}}, 1.0, 0.0).value() ==
          std::sqrt(M_PI));
}

TEST_CASE("gaussian cosine integral") {
    CHECK(gaussian_cosine_integral(1.0, 0.0) == std::sqrt(M_PI));
    CHECK_REL(gaussian_cosine_integral(1.0, 1.0), 1.8094129494897069, 1e-12);
    CHECK_THROWS_AS(gaussian_cosine_integral(-1.0, 1.0), DomainError);
}

TEST_CASE("quadratic-argument integral") {
    // beta = 0 keeps only the r = 0 moment.
    const double expected0 =
        std::sqrt(M_PI) * vacuum_moment(UmbralSymbol({1.0}, {2.0, 2.0}), -0.5);
    CHECK_REL(gaussian_quadratic_arg_integral(1.0, 2.0, 2.0, 1.0, 0.0),
              expected0, 1e-14);
    // Fully cancelling symbol: the series collapses to the Gaussian shift.
    CHECK_REL(gaussian_quadratic_arg_integral(UmbralSymbol({2.0}, {2.0}), 1.0,
                                              1.0),
              std::sqrt(M_PI) * std::exp(0.25), 1e-12);
    CHECK_THROWS_AS(
        gaussian_quadratic_arg_integral(1.0, 2.0, 2.0, -0.5, 1.0),
        DomainError);
}

TEST_CASE("geometric gaussian integral") {
    CHECK(geometric_gaussian_integral(1.0, 0.0) == M_PI);
    CHECK_REL(geometric_gaussian_integral(1.0, 1.0), 3.6275987284684357,
              1e-13);
    CHECK_THROWS_AS(geometric_gaussian_integral(1.0, 2.0), DomainError);
    for (double alpha : {0.5, 1.0, 2.0, 7.3})
        CHECK(geometric_gaussian_integral(alpha, 0.0) ==
              M_PI / std::sqrt(alpha));
}

TEST_CASE("weighted exponential integral") {
    CHECK_REL(weighted_exp_integral(1, 1, 2, 0, 0.5), 0.45206832401833697,
              1e-11);
    // Vanishing upper limit: value ~ x^{alpha+1}/(alpha+1).
    const double tiny = weighted_exp_integral(1, 1, 2, 0, 1e-6);
    CHECK_REL(tiny, 1e-6, 1e-5);
    CHECK_THROWS_AS(weighted_exp_integral(1, 1, 2, 0, 1.5), DomainError);
    CHECK_THROWS_AS(weighted_exp_integral(1, 1, 2, -1.0, 0.5), DomainError);
    CHECK_THROWS_AS(weighted_exp_integral(1, 1, -2, 0, 0.5), PoleError);
}

TEST_CASE("bessel squared gaussian integral") {
    CHECK_REL(bessel_squared_gaussian_integral(1.0), 1.8561701344089106,
              1e-12);
    CHECK_REL(bessel_squared_gaussian_integral(2.0), 1.2828003722902931,
              1e-12);
    // Large alpha: the r = 0 term dominates, value -> Gamma(1/2)/sqrt(alpha).
    CHECK_REL(bessel_squared_gaussian_integral(1e6),
              std::sqrt(M_PI / 1e6), 1e-6);
    CHECK_THROWS_AS(bessel_squared_gaussian_integral(0.0), DomainError);
}

TEST_CASE("fox-wright form of the gaussian integral") {
    const double psi_form = fox_wright_gaussian_form(1, 2, 3, 1, 2);
    CHECK_REL(psi_form, std::sqrt(M_PI) * 1.0280567391382915, 1e-12);
    const double f24_form = gaussian_integral_pfq({{1}, {2, 3}}, 1, 2).value();
    CHECK_REL(psi_form, f24_form, 1e-10);
    CHECK_REL(fox_wright_gaussian_form(1.5, 2.5, 3.5, 2, 0),
              std::sqrt(M_PI / 2.0), 1e-14);
}

TEST_CASE("euler integral representation of 1F1") {
    CHECK_REL(euler_integral_1f1(1, 2, 1), M_E - 1.0, 1e-10);
    CHECK_REL(euler_integral_1f1(1.3, 2.9, 0.0), 1.0, 1e-11);
    CHECK_REL(euler_integral_1f1(0.5, 1.5, -2.0),
              eval_pfq({{0.5}, {1.5}}, -2.0).value, 1e-9);
    CHECK_THROWS_AS(euler_integral_1f1(2.0, 1.0, 0.5), DomainError);
}

TEST_CASE("euler integral representation of 2F1") {
    CHECK_REL(euler_integral_2f1(1, 1, 2, 0.5), 1.3862943611198906, 1e-9);
    CHECK_REL(euler_integral_2f1(1.3, 0.7, 2.9, 0.0), 1.0, 1e-11);
    CHECK_REL(euler_integral_2f1(0.7, 2.1, 3.3, -0.8), 0.75702894839463333,
              1e-9);
    CHECK_THROWS_AS(euler_integral_2f1(1, 1, 2, 1.5), DomainError);
    CHECK_THROWS_AS(euler_integral_2f1(3.0, 1.0, 2.0, 0.5), DomainError);
}

TEST_CASE("kummer gauss transform") {
    CHECK_REL(kummer_gauss_transform(1, 2, 1, 0), 1.0, 1e-11);
    CHECK_REL(kummer_gauss_transform(1, 2, 1, 1), 1.0899742083672444, 1e-10);
    const double u = 9.0 / 8.0;
    CHECK_REL(kummer_gauss_transform(0.5, 2.5, 2, 3),
              eval_pfq({{0.25, 0.75}, {1.25, 1.75}}, u).value, 1e-9);
    CHECK_REL(kummer_gauss_transform(0.5, 2.5, 2, 3), 1.1199829239293817,
              1e-9);
    CHECK_THROWS_AS(kummer_gauss_transform(2, 1, 1, 1), DomainError);
}
