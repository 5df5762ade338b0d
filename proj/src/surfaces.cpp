#include "erd/surfaces.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "erd/errors.hpp"
#include "erd/parallel.hpp"
#include "erd/series.hpp"

namespace erd {

namespace {

constexpr double singular_guard = 1e-8;

std::string fmt_zeta(Complex z) {
    return std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i";
}

void require_finite_zeta(Complex z, const char* what) {
    if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite zeta");
}

} // namespace

SurfacePoint3 scherk_we(Complex zeta) {
    require_finite_zeta(zeta, "scherk_we");
    for (Complex bad : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}})
        if (std::abs(zeta - bad) <= singular_guard)
            throw DomainError("scherk_we: parametrization fails at zeta = +-1, +-i",
                              fmt_zeta(zeta));
    const double x = 2.0 * principal_arctan(zeta).real();
    const double y = -principal_log((1.0 + zeta) / (1.0 - zeta)).imag();
    const Complex z2 = zeta * zeta;
    const double z = principal_log((1.0 + z2) / (1.0 - z2)).real();
    return {x, y, z};
}

IdentityReport check_prop2(Complex zeta, long K, double tol) {
    require_finite_zeta(zeta, "check_prop2");
    if (!(std::abs(zeta) < 0.5))
        throw DomainError("check_prop2: requires |zeta| < 1/2", fmt_zeta(zeta));

    const SurfacePoint3 p = scherk_we(zeta);
    const double z_nonparametric = std::log(std::cos(p.y) / std::cos(p.x));
    const double consistency = std::abs(p.z - z_nonparametric);
    if (consistency > 1e-12)
        throw std::logic_error("check_prop2: parametric z drifted from log(cos y / cos x)");

    IdentityReport inner = check_prop1(p.x, p.y, K, tol);
    IdentityReport r = make_report(
        "prop2",
        {{"zeta_re", zeta.real()}, {"zeta_im", zeta.imag()}, {"K", static_cast<double>(K)}},
        Complex{p.z, 0.0}, inner.rhs, inner.tail_bound, inner.terms_used, tol,
        "z vs log(cos y/cos x) consistency " + std::to_string(consistency));
    return r;
}

SurfacePoint3 alpha_curve(double u) {
    if (!(std::cos(u) > 0.0))
        throw DomainError("alpha_curve: cos u must be positive", std::to_string(u));
    return {u, 0.0, -std::log(std::cos(u))};
}

SurfacePoint3 beta_curve(double v, double theta) {
    if (!(std::cos(v) > 0.0))
        throw DomainError("beta_curve: cos v must be positive", std::to_string(v));
    return {v * std::cos(theta), v * std::sin(theta), std::log(std::cos(v))};
}

SurfacePoint3 scherk_family(double u, double v, double theta) {
    const SurfacePoint3 a = alpha_curve(u);
    const SurfacePoint3 b = beta_curve(v, theta);
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

SurfacePoint3 helicoid_we(Complex zeta) {
    require_finite_zeta(zeta, "helicoid_we");
    if (std::abs(zeta) <= singular_guard)
        throw DomainError("helicoid_we: zeta = 0 excluded", fmt_zeta(zeta));
    const Complex inv = 1.0 / zeta;
    const double x = -0.5 * (zeta + inv).imag();
    const double y = 0.5 * (zeta - inv).real();
    const double z = -pi / 2.0 + principal_log(zeta).imag();
    return {x, y, z};
}

IdentityReport check_prop5(Complex zeta, double tol, Precision p) {
    require_finite_zeta(zeta, "check_prop5");
    if (!(std::abs(zeta) < 1.0))
        throw DomainError("check_prop5: requires |zeta| < 1", fmt_zeta(zeta));
    const SurfacePoint3 pt = helicoid_we(zeta);  // also rejects zeta ~ 0
    if (pt.x == 0.0 || !(std::abs(pt.y) < std::abs(pt.x)))
        throw DomainError("check_prop5: |y| < |x| fails at this zeta "
                          "(|zeta| < 1 alone does not guarantee it)",
                          fmt_zeta(zeta));

    const double ratio = pt.y / pt.x;
    const Complex one{1.0, 0.0};
    const EvalResult plus = eval_heli(one, ratio, p);
    const EvalResult minus = eval_heli(one, -ratio, p);
    const Complex bracket = plus.value - minus.value;
    const double rhs = -0.5 * bracket.real();
    const double imag_residue = std::abs(0.5 * bracket.imag());

    const double lhs = pt.z;
    const double shift = std::nearbyint((lhs - rhs) / pi);
    const double residual = std::abs(lhs - rhs - shift * pi);
    const double tail = 0.5 * (plus.tail_bound + minus.tail_bound);

    IdentityReport r;
    r.check_name = "prop5";
    r.inputs = {{"zeta_re", zeta.real()}, {"zeta_im", zeta.imag()}, {"ratio", ratio}};
    r.lhs = Complex{lhs, 0.0};
    r.rhs = Complex{rhs, 0.0};
    r.abs_residual = residual;
    r.tail_bound = tail;
    r.terms_used = plus.terms_used + minus.terms_used;
    r.tolerance = tol;
    r.pass = std::isfinite(residual) && std::isfinite(tail) && residual <= tail + tol &&
             imag_residue <= 1e-12;
    r.notes = "equality modulo pi, branch shift " + std::to_string(static_cast<long>(shift)) +
              "; bracket sign convention -1/2";
    return r;
}

namespace {

struct VertexSample {
    SurfacePoint3 point{};
    double residual = 0.0;
    bool valid = false;
};

VertexSample sample_vertex(SurfaceKind surface, double u, double v,
                           ResidualKind residual, const MeshOptions& opt) {
    VertexSample out;
    try {
        switch (surface) {
        case SurfaceKind::ScherkWE:
            out.point = scherk_we(Complex{u, v});
            break;
        case SurfaceKind::ScherkFamily:
            out.point = scherk_family(u, v, opt.theta);
            break;
        case SurfaceKind::HelicoidWE:
            out.point = helicoid_we(std::polar(u, v));
            break;
        }
    } catch (const DomainError&) {
        return out;  // unevaluable vertex: invalid, zero residual
    }
    out.valid = true;

    if (residual == ResidualKind::None) return out;
    try {
        switch (residual) {
        case ResidualKind::Prop1:
            if (surface != SurfaceKind::ScherkFamily)
                throw DomainError("sample_mesh: prop1 residual applies to scherk-family");
            out.residual = check_prop3_twisted(out.point.x, out.point.y, opt.theta,
                                               opt.residual_terms, opt.residual_tol)
                               .abs_residual;
            break;
        case ResidualKind::Prop2:
            if (surface != SurfaceKind::ScherkWE)
                throw DomainError("sample_mesh: prop2 residual applies to scherk-we");
            out.residual =
                check_prop2(Complex{u, v}, opt.residual_terms, opt.residual_tol).abs_residual;
            break;
        case ResidualKind::Prop4: {
            if (surface != SurfaceKind::HelicoidWE)
                throw DomainError("sample_mesh: prop4 residual applies to helicoid");
            if (out.point.x == 0.0 || !(std::abs(out.point.y) < std::abs(out.point.x)))
                throw DomainError("outside |y| < |x| window");
            out.residual =
                check_prop4_helicoid(out.point.y / out.point.x, opt.residual_tol).abs_residual;
            break;
        }
        case ResidualKind::Prop5:
            if (surface != SurfaceKind::HelicoidWE)
                throw DomainError("sample_mesh: prop5 residual applies to helicoid");
            out.residual = check_prop5(std::polar(u, v), opt.residual_tol).abs_residual;
            break;
        case ResidualKind::None:
            break;
        }
    } catch (const DomainError&) {
        // Vertex falls outside the identity's validity window: flagged, not
        // extrapolated.
        out.residual = 0.0;
        out.valid = false;
    }
    return out;
}

} // namespace

Mesh sample_mesh(SurfaceKind surface, const ParamRect& region, int nu, int nv,
                 ResidualKind residual, const MeshOptions& opt) {
    if (nu < 2 || nv < 2)
        throw DomainError("sample_mesh: nu, nv >= 2 required");
    if (!(std::isfinite(region.u0) && std::isfinite(region.u1) &&
          std::isfinite(region.v0) && std::isfinite(region.v1)))
        throw DomainError("sample_mesh: non-finite region");

    // Residual/surface compatibility is a usage error, not a per-vertex one.
    if (residual == ResidualKind::Prop1 && surface != SurfaceKind::ScherkFamily)
        throw DomainError("sample_mesh: prop1 residual applies to scherk-family only");
    if (residual == ResidualKind::Prop2 && surface != SurfaceKind::ScherkWE)
        throw DomainError("sample_mesh: prop2 residual applies to scherk-we only");
    if ((residual == ResidualKind::Prop4 || residual == ResidualKind::Prop5) &&
        surface != SurfaceKind::HelicoidWE)
        throw DomainError("sample_mesh: prop4/prop5 residuals apply to helicoid only");

    const std::size_t n = static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv);
    Mesh mesh;
    mesh.vertices.resize(n);
    mesh.residuals.resize(n);
    mesh.valid.resize(n);
    mesh.param_coords.resize(n);

    parallel_for(n, [&](std::size_t idx) {
        const int iu = static_cast<int>(idx) / nv;
        const int iv = static_cast<int>(idx) % nv;
        const double u = region.u0 + (region.u1 - region.u0) * iu / (nu - 1);
        const double v = region.v0 + (region.v1 - region.v0) * iv / (nv - 1);
        const VertexSample s = sample_vertex(surface, u, v, residual, opt);
        mesh.vertices[idx] = s.point;
        mesh.residuals[idx] = s.residual;
        mesh.valid[idx] = s.valid ? 1 : 0;
        mesh.param_coords[idx] = {u, v};
    });

    bool any_valid = false;
    for (std::uint8_t f : mesh.valid) any_valid |= (f != 0);
    if (!any_valid)
        throw DomainError("sample_mesh: region entirely outside the valid domain");

    mesh.faces.reserve(static_cast<std::size_t>(nu - 1) * static_cast<std::size_t>(nv - 1));
    for (int iu = 0; iu + 1 < nu; ++iu)
        for (int iv = 0; iv + 1 < nv; ++iv) {
            const std::size_t base = static_cast<std::size_t>(iu) * nv + iv;
            mesh.faces.push_back({base, base + nv, base + nv + 1, base + 1});
        }
    return mesh;
}

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

} // namespace

double mean_curvature_probe(SurfaceKind surface, double theta, double u, double v, double h) {
    if (!(h > 0.0)) throw DomainError("mean_curvature_probe: h > 0 required");

    const auto eval = [&](double uu, double vv) -> Vec3 {
        SurfacePoint3 p;
        switch (surface) {
        case SurfaceKind::ScherkWE:
            p = scherk_we(Complex{uu, vv});
            break;
        case SurfaceKind::ScherkFamily:
            p = scherk_family(uu, vv, theta);
            break;
        case SurfaceKind::HelicoidWE:
            p = helicoid_we(std::polar(uu, vv));
            break;
        }
        return {p.x, p.y, p.z};
    };

    // The whole 5x5 stencil must sit inside the domain; DomainError propagates
    // with a clearer message.
    try {
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j)
                (void)eval(u + i * h, v + j * h);
    } catch (const DomainError&) {
        throw DomainError("mean_curvature_probe: stencil leaves the valid region");
    }

    // Fourth-order central differences for the straight derivatives, second
    // order for the cross term.
    const Vec3 fpu = eval(u + h, v), fmu = eval(u - h, v);
    const Vec3 fpu2 = eval(u + 2 * h, v), fmu2 = eval(u - 2 * h, v);
    const Vec3 fpv = eval(u, v + h), fmv = eval(u, v - h);
    const Vec3 fpv2 = eval(u, v + 2 * h), fmv2 = eval(u, v - 2 * h);
    const Vec3 f0 = eval(u, v);
    const Vec3 fpp = eval(u + h, v + h), fpm = eval(u + h, v - h);
    const Vec3 fmp = eval(u - h, v + h), fmm = eval(u - h, v - h);

    const Vec3 ru = (1.0 / (12.0 * h)) * ((-1.0) * fpu2 + 8.0 * fpu + (-8.0) * fmu + fmu2);
    const Vec3 rv = (1.0 / (12.0 * h)) * ((-1.0) * fpv2 + 8.0 * fpv + (-8.0) * fmv + fmv2);
    const Vec3 ruu = (1.0 / (12.0 * h * h)) *
                     ((-1.0) * fpu2 + 16.0 * fpu + (-30.0) * f0 + 16.0 * fmu + (-1.0) * fmu2);
    const Vec3 rvv = (1.0 / (12.0 * h * h)) *
                     ((-1.0) * fpv2 + 16.0 * fpv + (-30.0) * f0 + 16.0 * fmv + (-1.0) * fmv2);
    const Vec3 ruv = (1.0 / (4.0 * h * h)) * (fpp - fpm - fmp + fmm);

    const double E = dot(ru, ru), F = dot(ru, rv), G = dot(rv, rv);
    const Vec3 nvec = cross(ru, rv);
    const double nlen = std::sqrt(dot(nvec, nvec));
    if (nlen == 0.0)
        throw DomainError("mean_curvature_probe: degenerate tangent plane");
    const Vec3 nh = (1.0 / nlen) * nvec;
    const double L = dot(ruu, nh), M = dot(ruv, nh), N = dot(rvv, nh);
    const double denom = E * G - F * F;
    if (denom == 0.0)
        throw DomainError("mean_curvature_probe: singular first fundamental form");
    return (E * N - 2.0 * F * M + G * L) / (2.0 * denom);
}

} // namespace erd
