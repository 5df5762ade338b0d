#include "doctest.h"

#include <cmath>

#include "erd/errors.hpp"
#include "erd/series.hpp"

#include "oracles.hpp"

using erd::Complex;
using erd::EvalResult;
using erd::Precision;

TEST_SUITE_BEGIN("series");

TEST_CASE("eval_alt examples") {
    CHECK(erd::eval_alt({1, 0}, 0.5).value.real() ==
          doctest::Approx(std::log(1.5)).epsilon(1e-14));
    const EvalResult zero = erd::eval_alt({2.5, 1.0}, 0.0);
    CHECK(zero.value == Complex{0, 0});
    CHECK(zero.terms_used == 0);
    CHECK(zero.tail_bound == 0.0);
    // a/(1+a)^2, cross-checked by a long plain sum
    const EvalResult r = erd::eval_alt({-1, 0}, 0.5);
    CHECK(r.value.real() == doctest::Approx(0.5 / 2.25).epsilon(1e-13));
    double plain = 0.0;
    for (int n = 10000; n >= 1; --n)
        plain += (n % 2 ? 1.0 : -1.0) * std::pow(0.5, n) * n;
    CHECK(r.value.real() == doctest::Approx(plain).epsilon(1e-12));
    CHECK_THROWS_AS(erd::eval_alt({1, 0}, 1.0), erd::DomainError);
    CHECK_THROWS_AS(erd::eval_alt({1, 0}, -0.2), erd::DomainError);
}

TEST_CASE("eval_geo examples") {
    CHECK(erd::eval_geo({1, 0}, 0.5).value.real() ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(erd::eval_geo({3, 0}, 0.0).value == Complex{0, 0});
    // dilogarithm at 1/2 via a 1e5-term partial-sum oracle
    double li2 = 0.0;
    for (int n = 100000; n >= 1; --n) li2 += std::pow(0.5, n) / (static_cast<double>(n) * n);
    CHECK(erd::eval_geo({2, 0}, 0.5).value.real() == doctest::Approx(li2).epsilon(1e-13));
    CHECK(li2 == doctest::Approx(0.58224052646501250).epsilon(1e-14));
    CHECK_THROWS_AS(erd::eval_geo({1, 0}, 1.0), erd::DomainError);
}

TEST_CASE("eval_heli examples") {
    const EvalResult plus = erd::eval_heli({1, 0}, 0.5);
    CHECK(plus.value.real() == doctest::Approx(-0.46364760900080611).epsilon(1e-13));
    CHECK(plus.value.imag() == doctest::Approx(-0.11157177565710488).epsilon(1e-13));
    CHECK(erd::eval_heli({2, 1}, 0.0).value == Complex{0, 0});
    const EvalResult minus = erd::eval_heli({1, 0}, -0.5);
    CHECK(minus.value.real() == doctest::Approx(0.46364760900080611).epsilon(1e-13));
    CHECK(minus.value.imag() == doctest::Approx(-0.11157177565710488).epsilon(1e-13));
    CHECK_THROWS_AS(erd::eval_heli({1, 0}, 1.0), erd::DomainError);
    CHECK_THROWS_AS(erd::eval_heli({1, 0}, -1.0), erd::DomainError);
}

TEST_CASE("closed_form_s1 matches series at s=1 over random parameters") {
    oracle::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const int fam = static_cast<int>(rng.bits() % 3);
        if (fam == 0) {
            const double a = rng.uniform(0.0, 0.999);
            const EvalResult r = erd::eval_alt({1, 0}, a);
            CHECK(std::abs(r.value - erd::closed_form_s1(erd::Family::Alt, a)) <=
                  r.tail_bound + 1e-13);
        } else if (fam == 1) {
            const double b = rng.uniform(-0.999, 0.999);
            const EvalResult r = erd::eval_geo({1, 0}, b);
            CHECK(std::abs(r.value - erd::closed_form_s1(erd::Family::Geo, b)) <=
                  r.tail_bound + 1e-13);
        } else {
            const double t = rng.uniform(-0.999, 0.999);
            const EvalResult r = erd::eval_heli({1, 0}, t);
            CHECK(std::abs(r.value - erd::closed_form_s1(erd::Family::Heli, t)) <=
                  r.tail_bound + 1e-13);
        }
    }
    CHECK(erd::closed_form_s1(erd::Family::Alt, 0.5).real() ==
          doctest::Approx(0.40546510810816438).epsilon(1e-15));
    CHECK(erd::closed_form_s1(erd::Family::Geo, 0.0) == Complex{0, 0});
}

TEST_CASE("tail bound honesty under 10x longer summation") {
    oracle::Rng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        const Complex s{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const double mag = rng.uniform(0.01, 0.95);
        const std::size_t N = 5 + static_cast<std::size_t>(rng.bits() % 40);
        const Precision pN{1e-30, 1e-300, N};
        const Precision pN10{1e-30, 1e-300, N * 10};
        EvalResult rN, rN10;
        switch (rng.bits() % 3) {
        case 0:
            rN = erd::eval_alt(s, mag, pN);
            rN10 = erd::eval_alt(s, mag, pN10);
            break;
        case 1: {
            const double b = rng.uniform() < 0.5 ? -mag : mag;
            rN = erd::eval_geo(s, b, pN);
            rN10 = erd::eval_geo(s, b, pN10);
            break;
        }
        default: {
            const double t = rng.uniform() < 0.5 ? -mag : mag;
            rN = erd::eval_heli(s, t, pN);
            rN10 = erd::eval_heli(s, t, pN10);
            break;
        }
        }
        CHECK(std::abs(rN.value - rN10.value) <= rN.tail_bound);
    }
}

TEST_CASE("deep negative Re(s) overflow surfaces as an error") {
    CHECK_THROWS_AS(erd::eval_alt({-400.0, 0.0}, 0.5), erd::OverflowError);
}

TEST_CASE("result independent of max_terms once the bound is under abs_tol") {
    const Precision tight{1e-16, 1e-12, 2000};
    const Precision roomy{1e-16, 1e-12, 2000000};
    const EvalResult a = erd::eval_alt({0.5, 2.0}, 0.6, tight);
    const EvalResult b = erd::eval_alt({0.5, 2.0}, 0.6, roomy);
    CHECK(a.value == b.value);
    CHECK(a.terms_used == b.terms_used);
}

TEST_CASE("heli symmetry: odd-k bracket structure") {
    for (double t = -0.9; t <= 0.9001; t += 0.15) {
        const Complex diff =
            erd::eval_heli({1, 0}, t).value - erd::eval_heli({1, 0}, -t).value;
        CHECK(std::abs(diff.real() + 2.0 * std::atan(t)) <= 1e-12);
        CHECK(std::abs(diff.imag()) <= 1e-12);
    }
}

TEST_CASE("probe_sigma_limit") {
    const erd::SigmaLimitProbe p = erd::probe_sigma_limit(0.9, 30.0);
    CHECK(p.limit_bound <= 7.6e-9);
    CHECK(std::abs(p.eval.value.real() - 0.9) <= p.limit_bound);

    const erd::SigmaLimitProbe unit = erd::probe_sigma_limit(0.5, 1.0);
    CHECK(unit.eval.value.real() == doctest::Approx(std::log(1.5)).epsilon(1e-13));

    const erd::SigmaLimitProbe deep = erd::probe_sigma_limit(0.5, 60.0);
    CHECK(deep.eval.value.real() == 0.5);  // below one ulp of the limit
    CHECK(deep.limit_bound <= 4.4e-19);

    CHECK_THROWS_AS(erd::probe_sigma_limit(1.0, 30.0), erd::DomainError);
    CHECK_THROWS_AS(erd::probe_sigma_limit(0.5, 0.5), erd::DomainError);
}

TEST_CASE("probe_oscillation") {
    const std::vector<double> empty;
    CHECK(erd::probe_oscillation(0.5, 0.5, empty).empty());

    const std::vector<double> zero{0.0};
    const auto at0 = erd::probe_oscillation(0.5, 0.5, zero);
    CHECK(at0.size() == 1);
    CHECK(at0[0] == erd::eval_alt({0.5, 0.0}, 0.5).value);

    const std::vector<double> ts{10.0, 100.0, 1000.0};
    const auto samples = erd::probe_oscillation(0.9, 0.5, ts);
    CHECK(samples.size() == 3);
    for (const Complex& v : samples)
        CHECK(std::abs(v) <= 9.0);  // dominated by sum a^n = a/(1-a)
}

TEST_SUITE_END();
