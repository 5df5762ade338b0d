#pragma once

#include <cstddef>

#include "erd/complex_ops.hpp"
#include "erd/precision.hpp"

namespace erd {

// Complete gamma function, Lanczos approximation with reflection for
// Re(s) < 0.5.  Throws PoleError at non-positive integers.
Complex complex_gamma(Complex s);

// Upper incomplete gamma  Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt,
// complex s, real x > 0.  Power series below x = |s|+1 (with the pole pair
// regrouped analytically when s sits near a non-positive integer), modified
// Lentz continued fraction above.
Complex upper_incomplete_gamma(Complex s, double x);

struct LambdaResult {
    Complex value;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

// Odd-integer zeta sum  lambda(s) = sum_{k>=0} (2k+1)^{-s}, Re(s) > 1.
// Direct summation plus Euler-Maclaurin tail; the returned bound covers the
// discarded remainder.
LambdaResult dirichlet_lambda(Complex s, Precision p = {});

} // namespace erd
