#pragma once

#include <complex>
#include <numbers>

namespace erd {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

bool is_finite(Complex z);

// Principal branch: Im in (-pi, pi].  Throws DomainError at z = 0.
Complex principal_log(Complex z);

// arctan(w) = (i/2) (log(1 - i w) - log(1 + i w)), principal branch.
// Exactly real for real input.  Throws DomainError at w = +/- i.
Complex principal_arctan(Complex w);

// z^e with z in the right half plane or positive real, principal log.
Complex principal_pow(Complex z, Complex e);

// sin(pi z) and cos(pi z) with the real part reduced first; accurate close
// to integers, which matters in the gamma reflection formula.
Complex sinpi(Complex z);

// (exp(w) - 1) / w, stable for small |w|; equals 1 at w = 0.
Complex expm1_over(Complex w);

} // namespace erd
