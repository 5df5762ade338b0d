#pragma once

#include <string>
#include <utility>
#include <vector>

#include "erd/complex_ops.hpp"
#include "erd/precision.hpp"

namespace erd {

// Half-integer grid constants.  e_k and f_k are written in reduced form;
// e_1 = 1 exactly and e_k, f_k decrease monotonically.
inline double grid_c(long k) { return (static_cast<double>(k) - 0.5) * pi; }
inline double grid_d(long k) { return (static_cast<double>(k) + 0.5) * pi; }
inline double grid_e(long k) { return 1.0 / (2.0 * static_cast<double>(k) - 1.0); }  // pi/(2 c_k)
inline double grid_f(long k) { return 1.0 / (2.0 * static_cast<double>(k) + 1.0); }  // pi/(2 d_k)

// One identity verification at one input: both sides, the exact residual,
// a certified truncation bound, and the pass verdict
//   pass  <=>  abs_residual <= tail_bound + tolerance.
struct IdentityReport {
    std::string check_name;
    std::vector<std::pair<std::string, double>> inputs;
    Complex lhs{};
    Complex rhs{};
    double abs_residual = 0.0;
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;
};

IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, double>> inputs,
                           Complex lhs, Complex rhs, double tail_bound,
                           std::size_t terms_used, double tol,
                           std::string notes = {});

// cos(X+A)/cos A against the K-term partial product over half-integer
// multiples of pi.  A must stay 1e-8 away from odd multiples of pi/2.
IdentityReport er_product_check(double X, double A, long K, double tol);

// log(cos y / cos x) = sum_k log((c_k^2 - y^2)/(c_k^2 - x^2)), cos x, cos y > 0.
IdentityReport check_log_identity(double x, double y, long K, double tol);

// Dirichlet decomposition of the log identity:
// sum_k [ Alt(1, x^2/(c_k^2-x^2)) - Geo(1, y^2/c_k^2) ],
// |x| < pi/(2 sqrt 2), |y| < sqrt(pi/2).
IdentityReport check_prop1(double x, double y, long K, double tol);

// Twisted variant: substitute (x - y cot theta, y / sin theta) and run the
// same decomposition; theta = pi/2 reduces to check_prop1 on the same path.
IdentityReport check_prop3_twisted(double x, double y, double theta, long K, double tol);

// arctan(tanh X cot A) = arctan(X/A)
//   + sum_k [arctan(X/(k pi + A)) - arctan(X/(k pi - A))]
// (second denominator corrected to k pi - A; the source prints the same term
// twice).  A must avoid multiples of pi.
IdentityReport check_entry11(double X, double A, long K, double tol);

// arctan(2X/pi) = sum_k [arctan(X/c_k) - arctan(X/d_k)].
IdentityReport check_arctan_telescope(double X, long K, double tol);

// arctan t = -1/2 Re[ Heli(1, t) - Heli(1, -t) ], |t| < 1; the bracket's
// imaginary part must vanish.
IdentityReport check_prop4_helicoid(double t, double tol, Precision p = {});

// Heli(1,t) - Heli(1,-t) against its half-integer rescaled telescoping:
// sum_k [(H(e_k t) - H(-e_k t)) - (H(f_k t) - H(-f_k t))].
IdentityReport check_prop6(double t, long K, double tol);

} // namespace erd
