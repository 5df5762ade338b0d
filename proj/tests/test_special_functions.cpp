#include "doctest.h"

#include <cmath>

#include "erd/complex_ops.hpp"
#include "erd/errors.hpp"
#include "erd/gamma.hpp"

#include "oracles.hpp"

using erd::Complex;
using erd::pi;

TEST_SUITE_BEGIN("special_functions");

TEST_CASE("principal_log branch and examples") {
    CHECK(erd::principal_log({1.0, 0.0}) == Complex{0.0, 0.0});
    const Complex lm1 = erd::principal_log({-1.0, 0.0});
    CHECK(lm1.real() == 0.0);
    CHECK(lm1.imag() == doctest::Approx(pi));
    // 0.5i: modulus 1/2, argument pi/2
    const Complex lhi = erd::principal_log({0.0, 0.5});
    CHECK(lhi.real() == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(lhi.imag() == doctest::Approx(pi / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(erd::principal_log({0.0, 0.0}), erd::DomainError);
    // negative real with negative zero imaginary still lands on +pi
    CHECK(erd::principal_log(Complex{-2.0, -0.0}).imag() == doctest::Approx(pi));
}

TEST_CASE("principal_log round trip") {
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Complex z{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        if (std::abs(z) < 1e-6) continue;
        const Complex back = std::exp(erd::principal_log(z));
        CHECK(std::abs(back - z) <= 1e-13 * std::abs(z));
        const double im = erd::principal_log(z).imag();
        CHECK(im > -pi);
        CHECK(im <= pi);
    }
}

TEST_CASE("principal_arctan examples and real-axis agreement") {
    CHECK(erd::principal_arctan({0.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(erd::principal_arctan({1.0, 0.0}).real() == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(erd::principal_arctan({0.5, 0.0}).real() ==
          doctest::Approx(0.46364760900080611).epsilon(1e-15));
    CHECK(erd::principal_arctan({0.5, 0.0}).real() ==
          doctest::Approx(oracle::arctan_series(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(erd::principal_arctan({0.0, 1.0}), erd::DomainError);
    CHECK_THROWS_AS(erd::principal_arctan({0.0, -1.0}), erd::DomainError);

    for (int i = 0; i <= 400; ++i) {
        const double x = -10.0 + 20.0 * i / 400.0;
        const Complex w = erd::principal_arctan({x, 0.0});
        CHECK(w.imag() == 0.0);
        CHECK(std::abs(w.real() - std::atan(x)) <= 1e-14);
        CHECK(std::abs(w.real()) < pi / 2.0);
    }
}

TEST_CASE("complex_gamma known values") {
    CHECK(erd::complex_gamma({0.5, 0.0}).real() ==
          doctest::Approx(1.7724538509055160).epsilon(1e-14));
    CHECK(erd::complex_gamma({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(erd::complex_gamma({-0.5, 0.0}).real() ==
          doctest::Approx(-3.5449077018110321).epsilon(1e-13));
    CHECK(erd::complex_gamma({1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(erd::complex_gamma({0.0, 0.0}), erd::PoleError);
    CHECK_THROWS_AS(erd::complex_gamma({-3.0, 0.0}), erd::PoleError);
    try {
        erd::complex_gamma({-2.0, 0.0});
        FAIL("no pole error");
    } catch (const erd::PoleError& e) {
        CHECK(e.pole() == -2);
    }
}

TEST_CASE("overflow surfaces as an error, never as inf") {
    CHECK_THROWS_AS(erd::complex_gamma({200.0, 0.0}), erd::OverflowError);
    CHECK_NOTHROW(erd::complex_gamma({170.0, 0.0}));  // just inside binary64
}

TEST_CASE("incomplete gamma at large imaginary order") {
    const Complex s{2.0, 8.0};
    const Complex lib = erd::upper_incomplete_gamma(s, 1.0);
    const Complex ref = oracle::upper_gamma_quad(s, 1.0);
    CHECK(std::abs(lib - ref) <= 1e-9 * (1.0 + std::abs(ref)));
}

TEST_CASE("gamma recurrence property") {
    oracle::Rng rng(21);
    int tested = 0;
    while (tested < 100) {
        const Complex s{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        bool near_pole = false;
        for (int m = 0; m <= 4; ++m)
            if (std::abs(s + static_cast<double>(m)) < 0.1) near_pole = true;
        if (near_pole) continue;
        ++tested;
        const Complex g1 = erd::complex_gamma(s + 1.0);
        const Complex g0 = erd::complex_gamma(s);
        CHECK(std::abs(g1 - s * g0) <= 1e-12 * std::abs(g1));
    }
}

TEST_CASE("upper incomplete gamma examples") {
    CHECK(erd::upper_incomplete_gamma({1.0, 0.0}, 2.0).real() ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    const double l2 = std::log(2.0);
    CHECK(erd::upper_incomplete_gamma({2.0, 0.0}, l2).real() ==
          doctest::Approx((1.0 + l2) / 2.0).epsilon(1e-14));
    // E1(1), frozen from the quadrature oracle
    const double e1 = oracle::upper_gamma_quad({0.0, 0.0}, 1.0).real();
    CHECK(e1 == doctest::Approx(0.21938393439552027).epsilon(1e-11));
    CHECK(erd::upper_incomplete_gamma({0.0, 0.0}, 1.0).real() ==
          doctest::Approx(0.21938393439552027).epsilon(1e-13));
    CHECK_THROWS_AS(erd::upper_incomplete_gamma({1.0, 0.0}, 0.0), erd::DomainError);
    CHECK_THROWS_AS(erd::upper_incomplete_gamma({1.0, 0.0}, -1.0), erd::DomainError);
}

TEST_CASE("upper incomplete gamma vs quadrature oracle") {
    const Complex ss[] = {{-1.5, 0.0}, {0.3, 0.0}, {2.0, 1.0}};
    const double xs[] = {0.2, 1.0, 5.0};
    for (Complex s : ss)
        for (double x : xs) {
            const Complex lib = erd::upper_incomplete_gamma(s, x);
            const Complex ref = oracle::upper_gamma_quad(s, x);
            CHECK(std::abs(lib - ref) <= 1e-9 * (1.0 + std::abs(ref)));
        }
}

TEST_CASE("upper incomplete gamma near non-positive integers") {
    // The regrouped series must join continuously onto the generic branches.
    for (double x : {0.1, 0.5, 1.5}) {
        for (int m = 0; m <= 3; ++m) {
            const Complex at = erd::upper_incomplete_gamma({-static_cast<double>(m), 0.0}, x);
            const Complex lo =
                erd::upper_incomplete_gamma({-static_cast<double>(m) - 1e-9, 0.0}, x);
            const Complex hi =
                erd::upper_incomplete_gamma({-static_cast<double>(m) + 1e-9, 0.0}, x);
            CHECK(std::abs(at - lo) <= 1e-7 * (1.0 + std::abs(at)));
            CHECK(std::abs(at - hi) <= 1e-7 * (1.0 + std::abs(at)));
            const Complex ref = oracle::upper_gamma_quad({-static_cast<double>(m), 0.0}, x);
            CHECK(std::abs(at - ref) <= 1e-9 * (1.0 + std::abs(ref)));
        }
    }
    // complex offsets near a pole
    const Complex s{-1.0 + 3e-4, 2e-4};
    const Complex lib = erd::upper_incomplete_gamma(s, 0.3);
    const Complex ref = oracle::upper_gamma_quad(s, 0.3);
    CHECK(std::abs(lib - ref) <= 1e-9 * (1.0 + std::abs(ref)));
}

TEST_CASE("splitting: upper + lower = complete, real s > 0") {
    oracle::Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const double s = rng.uniform(0.2, 6.0);
        const double x = rng.uniform(0.1, 10.0);
        const Complex upper = erd::upper_incomplete_gamma({s, 0.0}, x);
        const Complex lower = oracle::lower_gamma_series({s, 0.0}, x);
        const Complex whole = erd::complex_gamma({s, 0.0});
        CHECK(std::abs(upper + lower - whole) <= 1e-10 * std::abs(whole));
    }
}

TEST_CASE("dirichlet_lambda examples") {
    CHECK(erd::dirichlet_lambda({2.0, 0.0}).value.real() ==
          doctest::Approx(pi * pi / 8.0).epsilon(1e-13));
    CHECK(erd::dirichlet_lambda({4.0, 0.0}).value.real() ==
          doctest::Approx(std::pow(pi, 4) / 96.0).epsilon(1e-13));
    // 7 zeta(3) / 8
    CHECK(erd::dirichlet_lambda({3.0, 0.0}).value.real() ==
          doctest::Approx(1.0517997902646450).epsilon(1e-13));
    CHECK_THROWS_AS(erd::dirichlet_lambda({1.0, 0.0}), erd::DomainError);
    CHECK_THROWS_AS(erd::dirichlet_lambda({0.5, 2.0}), erd::DomainError);
}

TEST_CASE("dirichlet_lambda against (1 - 2^{-s}) zeta oracle") {
    for (double s = 2.0; s <= 12.0; s += 0.5) {
        const erd::LambdaResult lam = erd::dirichlet_lambda({s, 0.0});
        const Complex ref = (1.0 - std::pow(2.0, -s)) * oracle::zeta_direct({s, 0.0});
        CHECK(std::abs(lam.value - ref) <= 1e-10 * std::abs(ref));
        CHECK(std::abs(lam.value - ref) <= lam.tail_bound + 1e-10);
    }
    // complex argument sanity against a long direct sum
    const Complex s{2.5, 1.3};
    Complex direct{0.0, 0.0};
    for (long k = 200000; k-- > 0;)
        direct += std::exp(-s * std::log(2.0 * static_cast<double>(k) + 1.0));
    CHECK(std::abs(erd::dirichlet_lambda(s).value - direct) <= 1e-7);
}

TEST_SUITE_END();
