#include "erd/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "erd/detail/series_s1.hpp"
#include "erd/errors.hpp"
#include "erd/summation.hpp"

namespace erd {

namespace detail {

namespace {

// Truncation bounds are exact statements about the mathematical tail; the
// accumulated value additionally carries a couple of ulps of rounding.  Fold
// that in so |value - exact sum| <= tail_bound holds as stated.
double with_rounding(double bound, double value) {
    return bound + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
}

} // namespace

// Tail after n terms, s = 1: sum_{m>n} r^m / m <= r^{n+1} / ((n+1)(1-r)).
S1Result alt_s1(double a, const Precision& p) {
    if (a == 0.0) return {};
    NeumaierSum sum;
    double pw = 1.0;
    std::size_t n = 0;
    double bound = std::numeric_limits<double>::infinity();
    while (n < p.max_terms) {
        ++n;
        pw *= a;
        sum.add((n % 2 == 0) ? -pw / static_cast<double>(n) : pw / static_cast<double>(n));
        bound = pw * a / ((static_cast<double>(n) + 1.0) * (1.0 - a));
        if (bound <= std::max(p.abs_tol, p.rel_tol * std::abs(sum.value()))) break;
    }
    return {sum.value(), with_rounding(bound, sum.value()), n};
}

S1Result geo_s1(double b, const Precision& p) {
    if (b == 0.0) return {};
    const double r = std::abs(b);
    NeumaierSum sum;
    double pw = 1.0;
    double rw = 1.0;
    std::size_t n = 0;
    double bound = std::numeric_limits<double>::infinity();
    while (n < p.max_terms) {
        ++n;
        pw *= b;
        rw *= r;
        sum.add(pw / static_cast<double>(n));
        bound = rw * r / ((static_cast<double>(n) + 1.0) * (1.0 - r));
        if (bound <= std::max(p.abs_tol, p.rel_tol * std::abs(sum.value()))) break;
    }
    return {sum.value(), with_rounding(bound, sum.value()), n};
}

} // namespace detail

namespace {

enum class Sign { Alternating, Positive, PowerOfI };

// Geometric-domination tail bound after N terms:
//   sum_{n>N} r^n n^{-sigma} <= r^{N+1} (N+1)^{-sigma} / (1 - r e^{max(0,-sigma)/(N+1)})
// from (1 + j/(N+1))^{-sigma} <= e^{max(0,-sigma) j/(N+1)}.  For sigma >= 0
// this is the plain geometric bound; for sigma < 0 the exponential factor
// keeps it valid despite the polynomially growing n^{-sigma}.
double tail_bound_after(double r_pow_np1, double r, double sigma, double np1) {
    double denom;
    if (sigma >= 0.0)
        denom = 1.0 - r;
    else
        denom = 1.0 - r * std::exp(-sigma / np1);
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    const double npow = (sigma == 1.0) ? 1.0 / np1 : std::pow(np1, -sigma);
    return r_pow_np1 * npow / denom;
}

EvalResult eval_family(Complex s, double param, Precision p, Sign sign) {
    if (!p.valid()) throw DomainError("series: invalid precision policy");
    if (!is_finite(s)) throw DomainError("series: non-finite exponent s");
    if (param == 0.0) return {Complex{0.0, 0.0}, 0, 0.0};

    const bool real_s = s.imag() == 0.0;
    if (real_s && s.real() == 1.0 && sign != Sign::PowerOfI) {
        const detail::S1Result r = (sign == Sign::Alternating)
                                       ? detail::alt_s1(param, p)
                                       : detail::geo_s1(param, p);
        return {Complex{r.value, 0.0}, r.terms, r.tail_bound};
    }

    const double sigma = s.real();
    const double r = std::abs(param);

    ComplexSum sum;
    double pw = 1.0;   // param^n
    double rw = 1.0;   // r^n
    std::size_t n = 0;
    double bound = std::numeric_limits<double>::infinity();
    while (n < p.max_terms) {
        ++n;
        pw *= param;
        rw *= r;
        const double dn = static_cast<double>(n);
        Complex term;
        if (real_s)
            term = Complex{pw * std::pow(dn, -sigma), 0.0};
        else
            term = pw * std::exp(-s * std::log(dn));
        switch (sign) {
        case Sign::Alternating:
            if (n % 2 == 0) term = -term;
            break;
        case Sign::Positive:
            break;
        case Sign::PowerOfI:
            // i^{n+1}: n mod 4 = 1,2,3,0 -> -1, -i, +1, +i
            switch (n % 4) {
            case 1: term = -term; break;
            case 2: term = Complex{term.imag(), -term.real()}; break;
            case 3: break;
            case 0: term = Complex{-term.imag(), term.real()}; break;
            }
            break;
        }
        sum.add(term);
        if (!is_finite(sum.value()))
            throw OverflowError("series: accumulation overflowed binary64");

        bound = tail_bound_after(rw * r, r, sigma, dn + 1.0);
        if (bound <= std::max(p.abs_tol, p.rel_tol * std::abs(sum.value())))
            break;
    }
    bound += 4.0 * std::numeric_limits<double>::epsilon() * std::abs(sum.value());
    return {sum.value(), n, bound};
}

} // namespace

EvalResult eval_alt(Complex s, double a, Precision p) {
    if (!(a >= 0.0) || a >= 1.0)
        throw DomainError("eval_alt: parameter must satisfy 0 <= a < 1", std::to_string(a));
    return eval_family(s, a, p, Sign::Alternating);
}

EvalResult eval_geo(Complex s, double b, Precision p) {
    if (!(std::abs(b) < 1.0))
        throw DomainError("eval_geo: parameter must satisfy |b| < 1", std::to_string(b));
    return eval_family(s, b, p, Sign::Positive);
}

EvalResult eval_heli(Complex s, double t, Precision p) {
    if (!(std::abs(t) < 1.0))
        throw DomainError("eval_heli: parameter must satisfy |t| < 1", std::to_string(t));
    return eval_family(s, t, p, Sign::PowerOfI);
}

Complex closed_form_s1(Family family, double param) {
    switch (family) {
    case Family::Alt:
        if (!(param >= 0.0) || param >= 1.0)
            throw DomainError("closed_form_s1: 0 <= a < 1 required", std::to_string(param));
        return {std::log1p(param), 0.0};
    case Family::Geo:
        if (!(std::abs(param) < 1.0))
            throw DomainError("closed_form_s1: |b| < 1 required", std::to_string(param));
        return {-std::log1p(-param), 0.0};
    case Family::Heli:
        if (!(std::abs(param) < 1.0))
            throw DomainError("closed_form_s1: |t| < 1 required", std::to_string(param));
        return Complex{0.0, -1.0} * principal_log(Complex{1.0, -param});
    }
    throw DomainError("closed_form_s1: unknown family");
}

SigmaLimitProbe probe_sigma_limit(double a, double sigma, Precision p) {
    if (!(a > 0.0 && a < 1.0))
        throw DomainError("probe_sigma_limit: requires 0 < a < 1", std::to_string(a));
    if (!(sigma >= 1.0))
        throw DomainError("probe_sigma_limit: requires sigma >= 1", std::to_string(sigma));
    SigmaLimitProbe probe;
    probe.eval = eval_alt(Complex{sigma, 0.0}, a, p);
    probe.limit = a;
    // |sum_{n>=2} (-1)^{n-1} a^n/n^sigma| <= a^2 2^{-sigma} sum_j a^j
    probe.limit_bound = a * a * std::pow(2.0, -sigma) / (1.0 - a);
    return probe;
}

std::vector<Complex> probe_oscillation(double a, double sigma,
                                       std::span<const double> t_values, Precision p) {
    if (!(a > 0.0 && a < 1.0))
        throw DomainError("probe_oscillation: requires 0 < a < 1", std::to_string(a));
    std::vector<Complex> samples;
    samples.reserve(t_values.size());
    for (double t : t_values)
        samples.push_back(eval_alt(Complex{sigma, t}, a, p).value);
    return samples;
}

} // namespace erd
