#include "erd/complex_ops.hpp"

#include <cmath>

#include "erd/errors.hpp"

namespace erd {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex principal_log(Complex z) {
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw DomainError("principal_log: argument is zero", "0");
    double im = std::atan2(z.imag(), z.real());
    // atan2 returns -pi for (-x, -0); fold onto the (-pi, pi] convention.
    if (im == -pi) im = pi;
    return {std::log(std::abs(z)), im};
}

Complex principal_arctan(Complex w) {
    const Complex a{1.0 + w.imag(), -w.real()};  // 1 - i w
    const Complex b{1.0 - w.imag(), w.real()};   // 1 + i w
    if ((a.real() == 0.0 && a.imag() == 0.0) || (b.real() == 0.0 && b.imag() == 0.0))
        throw DomainError("principal_arctan: argument at logarithmic singularity +/-i");
    const Complex diff = principal_log(a) - principal_log(b);
    return Complex{0.0, 0.5} * diff;
}

Complex principal_pow(Complex z, Complex e) {
    if (e == Complex{0.0, 0.0}) return {1.0, 0.0};
    return std::exp(e * principal_log(z));
}

Complex sinpi(Complex z) {
    const double x = z.real();
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double y = z.imag();
    // sin(pi(n + r + iy)) = (-1)^n [sin(pi r) cosh(pi y) + i cos(pi r) sinh(pi y)]
    Complex s{std::sin(pi * r) * std::cosh(pi * y), std::cos(pi * r) * std::sinh(pi * y)};
    const bool odd = std::fmod(std::abs(n), 2.0) == 1.0;
    return odd ? -s : s;
}

Complex expm1_over(Complex w) {
    if (std::abs(w) < 0.5) {
        // Taylor: 1 + w/2 + w^2/6 + ...
        Complex sum{1.0, 0.0};
        Complex term{1.0, 0.0};
        for (int k = 2; k <= 24; ++k) {
            term *= w / static_cast<double>(k);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

} // namespace erd
