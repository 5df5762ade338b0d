#pragma once

#include <cstddef>

#include "erd/precision.hpp"

namespace erd::detail {

// Scalar s = 1 evaluators shared by the public series API and the identity
// decomposition loops.  Keeping a single implementation guarantees the two
// callers agree to the last bit.
struct S1Result {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

// sum_{n>=1} (-1)^{n-1} a^n / n, 0 <= a < 1 assumed checked by the caller.
S1Result alt_s1(double a, const Precision& p);

// sum_{n>=1} b^n / n, |b| < 1 assumed checked by the caller.
S1Result geo_s1(double b, const Precision& p);

} // namespace erd::detail
