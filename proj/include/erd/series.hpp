#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "erd/complex_ops.hpp"
#include "erd/precision.hpp"

namespace erd {

// The three series families.  All share geometric coefficients param^n and a
// complex exponent s on n:
//   Alt  : sum_{n>=1} (-1)^{n-1} param^n / n^s        (0 <= param < 1)
//   Geo  : sum_{n>=1}            param^n / n^s        (|param| < 1)
//   Heli : sum_{k>=1} i^{k+1}    param^k / k^s        (|param| < 1)
enum class Family { Alt, Geo, Heli };

struct EvalResult {
    Complex value;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
};

EvalResult eval_alt(Complex s, double a, Precision p = {});
EvalResult eval_geo(Complex s, double b, Precision p = {});
EvalResult eval_heli(Complex s, double t, Precision p = {});

// Exact s = 1 values: Alt -> log(1+a), Geo -> -log(1-b),
// Heli -> -i log(1 - i t).  Independent of the summation path.
Complex closed_form_s1(Family family, double param);

struct SigmaLimitProbe {
    EvalResult eval;
    double limit = 0.0;        // the limit point, i.e. a itself
    double limit_bound = 0.0;  // |value - a| <= a^2 2^{-sigma} / (1-a)
};

// Large-Re(s) behaviour: the alternating series collapses onto its first
// term.  Requires 0 < a < 1 and sigma >= 1.
SigmaLimitProbe probe_sigma_limit(double a, double sigma, Precision p = {});

// Samples along Re(s) = sigma for inspection; nothing is asserted about the
// Im(s) -> inf behaviour.
std::vector<Complex> probe_oscillation(double a, double sigma,
                                       std::span<const double> t_values,
                                       Precision p = {});

} // namespace erd
