#include "erd/gamma.hpp"

#include <cmath>
#include <cstdlib>

#include "erd/errors.hpp"
#include "erd/summation.hpp"

namespace erd {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set; ~15 significant digits).
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double euler_gamma = 0.57721566490153286060651209008;
constexpr double zeta3 = 1.20205690315959428539973816151;
constexpr double zeta4 = 1.08232323371113819151600369654;

long nearest_nonpositive_integer(Complex s) {
    // Index m >= 0 of -m closest to s (only meaningful when Re(s) < 0.5).
    const double m = std::nearbyint(-s.real());
    return m < 0.0 ? 0 : static_cast<long>(m);
}

Complex lanczos_positive(Complex z) {
    // Valid for Re(z) >= 0.5.
    z -= 1.0;
    Complex x{lanczos_c[0], 0.0};
    for (int i = 1; i < 9; ++i)
        x += lanczos_c[i] / (z + static_cast<double>(i));
    const Complex t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// psi, psi', psi'', psi''' at the positive integer m+1.
struct PolygammaAtInt {
    double psi, psi1, psi2, psi3;
};

PolygammaAtInt polygamma_int(long m) {
    double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;
    for (long j = 1; j <= m; ++j) {
        const double dj = static_cast<double>(j);
        h1 += 1.0 / dj;
        h2 += 1.0 / (dj * dj);
        h3 += 1.0 / (dj * dj * dj);
        h4 += 1.0 / (dj * dj * dj * dj);
    }
    return {-euler_gamma + h1,
            pi * pi / 6.0 - h2,
            -2.0 * zeta3 + 2.0 * h3,
            6.0 * zeta4 - 6.0 * h4};
}

// g(eps) = Gamma(-m + eps) - (-1)^m / (m! eps), the gamma function with its
// pole at -m removed.  Needed by the regrouped incomplete-gamma series.
Complex gamma_minus_pole(long m, Complex eps) {
    double mfact = 1.0;
    for (long j = 2; j <= m; ++j) mfact *= static_cast<double>(j);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;

    if (std::abs(eps) < 1e-3) {
        // q(eps) = pi eps / (sin(pi eps) Gamma(1+m-eps)) expanded to eps^3;
        // g = (-1)^m (q - q(0)) / eps.
        const auto pg = polygamma_int(m);
        const double a2 = pi * pi / 6.0;
        const double a4 = 7.0 * pi * pi * pi * pi / 360.0;
        const double b1 = pg.psi;
        const double b2 = pg.psi * pg.psi / 2.0 - pg.psi1 / 2.0;
        const double b3 = pg.psi * pg.psi * pg.psi / 6.0 - pg.psi * pg.psi1 / 2.0 + pg.psi2 / 6.0;
        const double b4 = pg.psi * pg.psi * pg.psi * pg.psi / 24.0
                          - pg.psi * pg.psi * pg.psi1 / 4.0
                          + pg.psi1 * pg.psi1 / 8.0
                          + pg.psi * pg.psi2 / 6.0
                          - pg.psi3 / 24.0;
        const double c1 = b1;
        const double c2 = b2 + a2;
        const double c3 = b3 + a2 * b1;
        const double c4 = b4 + a2 * b2 + a4;
        return sign / mfact * (c1 + eps * (c2 + eps * (c3 + eps * c4)));
    }

    const Complex s = -static_cast<double>(m) + eps;
    const Complex gamma = pi / (sinpi(s) * lanczos_positive(1.0 - s));
    return gamma - sign / (mfact * eps);
}

// Lower-gamma power series:  gamma(s,x) = x^s e^{-x} sum_n x^n / (s...(s+n)).
// Valid (by continuation) for any s off the poles.
Complex lower_gamma_series(Complex s, double x) {
    Complex term = 1.0 / s;
    ComplexSum sum;
    sum.add(term);
    for (int n = 1; n < 10000; ++n) {
        term *= x / (s + static_cast<double>(n));
        sum.add(term);
        if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
    }
    return principal_pow(Complex{x, 0.0}, s) * std::exp(-x) * sum.value();
}

// Continued fraction (modified Lentz), good for x above ~|s|+1:
// Gamma(s,x) = e^{-x} x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(...))).
Complex upper_gamma_cf(Complex s, double x) {
    const double tiny = 1e-300;
    Complex b = x + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i <= 200000; ++i) {
        const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) * principal_pow(Complex{x, 0.0}, s) * h;
}

// Small-x evaluation with the pole pair of Gamma(s) and the n = m series
// term regrouped so the formula stays finite through s = -m:
//   Gamma(s,x) = g(eps) + (-1)^m/m! * (1 - x^eps)/eps
//              - x^s sum_{n != m} (-x)^n / (n! (s+n)),   eps = s + m.
Complex upper_gamma_near_pole(Complex s, double x, long m) {
    const Complex eps = s + static_cast<double>(m);
    double mfact = 1.0;
    for (long j = 2; j <= m; ++j) mfact *= static_cast<double>(j);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;

    const double lx = std::log(x);
    const Complex pole_pair = sign / mfact * (-lx) * expm1_over(eps * lx);

    ComplexSum series;
    double nfact = 1.0;
    double xn = 1.0;
    for (long n = 0; n < 10000; ++n) {
        if (n > 0) {
            nfact *= static_cast<double>(n);
            xn *= -x;
        }
        if (n != m) {
            const Complex t = xn / (nfact * (s + static_cast<double>(n)));
            series.add(t);
            if (n > m && n > 2 * x && std::abs(t) < 1e-18 * (std::abs(series.value()) + 1e-30))
                break;
        }
    }
    const Complex xs = principal_pow(Complex{x, 0.0}, s);
    return gamma_minus_pole(m, eps) + pole_pair - xs * series.value();
}

} // namespace

Complex complex_gamma(Complex s) {
    if (!is_finite(s)) throw DomainError("complex_gamma: non-finite argument");
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::nearbyint(s.real()))
        throw PoleError("complex_gamma: pole at non-positive integer",
                        static_cast<long>(s.real()));
    Complex g;
    if (s.real() >= 0.5) {
        g = lanczos_positive(s);
    } else {
        g = pi / (sinpi(s) * lanczos_positive(1.0 - s));
    }
    if (!is_finite(g)) throw OverflowError("complex_gamma: result overflows binary64");
    return g;
}

Complex upper_incomplete_gamma(Complex s, double x) {
    if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: requires x > 0", std::to_string(x));
    if (!is_finite(s)) throw DomainError("upper_incomplete_gamma: non-finite s");

    Complex g;
    if (x >= std::abs(s) + 1.0) {
        g = upper_gamma_cf(s, x);
    } else {
        const long m = nearest_nonpositive_integer(s);
        const Complex eps = s + static_cast<double>(m);
        if (s.real() < 0.5 && std::abs(eps) < 0.25) {
            g = upper_gamma_near_pole(s, x, m);
        } else {
            g = complex_gamma(s) - lower_gamma_series(s, x);
        }
    }
    if (!is_finite(g)) throw OverflowError("upper_incomplete_gamma: result overflows binary64");
    return g;
}

LambdaResult dirichlet_lambda(Complex s, Precision p) {
    if (!is_finite(s)) throw DomainError("dirichlet_lambda: non-finite s");
    const double sigma = s.real();
    if (sigma <= 1.0)
        throw DomainError("dirichlet_lambda: direct series requires Re(s) > 1",
                          std::to_string(sigma));

    const bool real_s = s.imag() == 0.0;
    const auto pow_term = [&](double u) -> Complex {
        if (real_s) return {std::pow(u, -sigma), 0.0};
        return std::exp(-s * std::log(u));
    };

    std::size_t K = 32;
    Complex value{};
    double bound = 0.0;
    for (;;) {
        ComplexSum sum;
        for (std::size_t k = 0; k < K; ++k)
            sum.add(pow_term(2.0 * static_cast<double>(k) + 1.0));

        // Euler-Maclaurin tail starting at k = K, f(k) = (2k+1)^{-s}:
        //   int + f/2 + (s/6) u^{-s-1} - (s)_3/90 u^{-s-3} + (s)_5/945 u^{-s-5}
        const double u = 2.0 * static_cast<double>(K) + 1.0;
        const Complex us = pow_term(u);
        const Complex integral = us * u / (2.0 * (s - 1.0));
        const Complex t1 = 0.5 * us;
        const Complex t2 = (s / 6.0) * us / u;
        const Complex s3 = s * (s + 1.0) * (s + 2.0);
        const Complex t3 = -(s3 / 90.0) * us / (u * u * u);
        const Complex s5 = s3 * (s + 3.0) * (s + 4.0);
        const Complex t4 = (s5 / 945.0) * us / (u * u * u * u * u);
        const Complex s7 = s5 * (s + 5.0) * (s + 6.0);
        const double next = std::abs(s7) * std::pow(u, -sigma - 7.0) / 9450.0;

        sum.add(integral);
        sum.add(t1);
        sum.add(t2);
        sum.add(t3);
        sum.add(t4);
        value = sum.value();
        bound = 2.0 * next;

        if (bound <= std::max(p.abs_tol, p.rel_tol * std::abs(value)) || 2 * K > p.max_terms)
            break;
        K *= 2;
    }
    if (!is_finite(value)) throw OverflowError("dirichlet_lambda: overflow");
    return {value, bound, K};
}

} // namespace erd
