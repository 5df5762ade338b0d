#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "erd/complex_ops.hpp"
#include "erd/identities.hpp"

namespace erd {

struct SurfacePoint3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

enum class SurfaceKind { ScherkWE, ScherkFamily, HelicoidWE };
enum class ResidualKind { None, Prop1, Prop2, Prop4, Prop5 };

// Rectangle in the parameter plane.  Interpretation per surface:
//   ScherkWE     : (u, v) = (Re zeta, Im zeta)
//   ScherkFamily : (u, v) surface parameters
//   HelicoidWE   : (u, v) = (r, phi), zeta = r e^{i phi}
struct ParamRect {
    double u0 = 0.0, u1 = 0.0;
    double v0 = 0.0, v1 = 0.0;
};

struct Mesh {
    std::vector<SurfacePoint3> vertices;
    std::vector<double> residuals;                    // one per vertex; 0 when not computed
    std::vector<std::uint8_t> valid;                  // residual window / evaluability flag
    std::vector<std::array<std::size_t, 4>> faces;    // quads, parameter order
    std::vector<std::pair<double, double>> param_coords;
};

// Scherk surface from its complex parametrization; fails at zeta = +-1, +-i
// (guard radius 1e-8).
SurfacePoint3 scherk_we(Complex zeta);

// z(zeta) against the Dirichlet decomposition at (x(zeta), y(zeta)); also
// asserts z = log(cos y / cos x) to 1e-12 before any truncation enters.
IdentityReport check_prop2(Complex zeta, long K, double tol);

// One-parameter family (u + v cos theta, v sin theta, log(cos v / cos u)).
// Built as alpha(u) + beta_theta(v) so the translation decomposition is exact
// to the bit.
SurfacePoint3 scherk_family(double u, double v, double theta);
SurfacePoint3 alpha_curve(double u);
SurfacePoint3 beta_curve(double v, double theta);

// Helicoid from its complex parametrization; zeta = 0 excluded (guard 1e-8).
SurfacePoint3 helicoid_we(Complex zeta);

// z(zeta) = -pi/2 + arg zeta against -1/2 Re[H(1, y/x) - H(1, -y/x)],
// compared modulo pi with the applied shift recorded.  Enforces |y| < |x|
// pointwise (|zeta| < 1 alone does not guarantee it).
IdentityReport check_prop5(Complex zeta, double tol, Precision p = {});

struct MeshOptions {
    long residual_terms = 200000;  // K for per-vertex identity checks
    double residual_tol = 1e-4;
    double theta = pi / 2.0;       // ScherkFamily only
};

Mesh sample_mesh(SurfaceKind surface, const ParamRect& region, int nu, int nv,
                 ResidualKind residual, const MeshOptions& opt = {});

// Mean curvature from first/second fundamental forms via central differences
// of step h; O(h^2) at smooth interior points.  The full 5x5 stencil must
// evaluate.
double mean_curvature_probe(SurfaceKind surface, double theta, double u, double v, double h);

} // namespace erd
