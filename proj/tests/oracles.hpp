// Test-only oracles, deliberately independent of the library's evaluation
// paths: adaptive Simpson instead of Gauss panels, direct partial sums with
// integral corrections instead of the production accelerations.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

// Deterministic uniform doubles (splitmix64); std::uniform_real_distribution
// is implementation-defined and would make "frozen" random checks drift.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double uniform() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                                double b, double tol, int depth = 28) {
    const double m = 0.5 * (a + b);
    const Complex fa = f(a), fm = f(m), fb = f(b);
    const std::function<Complex(double, double, Complex, Complex, Complex, double, int)>
        rec = [&](double lo, double hi, Complex flo, Complex fmid, Complex fhi,
                  double eps, int d) -> Complex {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        const Complex flm = f(lm), frm = f(rm);
        const Complex whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        const Complex left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const Complex right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        const Complex delta = left + right - whole;
        if (d <= 0 || std::abs(delta) <= 15.0 * eps)
            return left + right + delta / 15.0;
        return rec(lo, mid, flo, flm, fmid, 0.5 * eps, d - 1) +
               rec(mid, hi, fmid, frm, fhi, 0.5 * eps, d - 1);
    };
    return rec(a, b, fa, fm, fb, tol, depth);
}

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt by panelled adaptive Simpson.
inline Complex upper_gamma_quad(Complex s, double x, double tol = 1e-12) {
    const auto f = [&](double t) -> Complex {
        return std::exp((s - 1.0) * std::log(t) - t);
    };
    Complex total{0.0, 0.0};
    double lo = x;
    double width = std::max(0.5, x * 0.5);
    for (int panel = 0; panel < 400; ++panel) {
        const double hi = lo + width;
        total += adaptive_simpson(f, lo, hi, tol * 0.01);
        lo = hi;
        width *= 1.5;
        if (std::exp((s.real() - 1.0) * std::log(lo) - lo) < tol * 1e-4) break;
    }
    return total;
}

// Lower gamma by the positive-term Kummer series, stable for s > 0:
// gamma(s,x) = x^s e^{-x} sum_n x^{n} Gamma(s) / Gamma(s+n+1)
//            = x^s e^{-x} / s * sum_n prod_{j<=n} x/(s+j).
inline Complex lower_gamma_series(Complex s, double x) {
    Complex term = 1.0 / s;
    Complex sum = term;
    for (int n = 1; n < 5000; ++n) {
        term *= x / (s + static_cast<double>(n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(s * std::log(x) - x) * sum;
}

// zeta(s) by direct summation with the first Euler-Maclaurin corrections.
inline Complex zeta_direct(Complex s, long N = 100000) {
    Complex sum{0.0, 0.0};
    for (long n = 1; n <= N; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double dN = static_cast<double>(N);
    const Complex ns = std::exp(-s * std::log(dN));
    sum += ns * dN / (s - 1.0);  // integral from N
    sum -= 0.5 * ns;             // we counted f(N) fully
    sum += s / 12.0 * ns / dN;   // B2 correction
    return sum;
}

// Direct evaluation of sum_k (2k+1)^{s-base} / (A^2/(2k+1)^2 + 1) with an
// Euler-Maclaurin tail on the (A-free) remainder, which is all that survives
// rounding past K.
inline Complex lambda_ratio_direct(Complex s, double A, double base, long K = 200000) {
    Complex sum{0.0, 0.0};
    for (long k = K; k-- > 0;) {
        const double n = 2.0 * static_cast<double>(k) + 1.0;
        sum += std::exp((s - base) * std::log(n)) / (A * A / (n * n) + 1.0);
    }
    // tail over k >= K of (2k+1)^{-p}, p = base - s (the A^2/N^2 factor is
    // below 1e-11 there): integral + half term + B2 term.
    const Complex p = base - s;
    const double u = 2.0 * static_cast<double>(K) + 1.0;
    const Complex up = std::exp(-p * std::log(u));
    sum += up * u / (2.0 * (p - 1.0));
    sum += 0.5 * up;
    sum += p / 6.0 * up / u;
    return sum;
}

// arctan by its Maclaurin/Euler series on |x| <= 1 extended by argument
// reduction; used as a table-free cross-check for a few spot values.
inline double arctan_series(double x) {
    if (x < 0.0) return -arctan_series(-x);
    if (x > 1.0) return 1.5707963267948966 - arctan_series(1.0 / x);
    // Euler's accelerated form: sum_n 2^{2n} (n!)^2/(2n+1)! * x^{2n+1}/(1+x^2)^{n+1}
    const double y = x * x / (1.0 + x * x);
    double term = x / (1.0 + x * x);
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
        sum += term;
        term *= y * (2.0 * n + 2.0) / (2.0 * n + 3.0);
        if (term < 1e-18) break;
    }
    return sum;
}

} // namespace oracle
