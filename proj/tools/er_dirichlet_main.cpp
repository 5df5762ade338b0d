// er_dirichlet: evaluate the series families, verify the identity suite,
// sample minimal-surface meshes, and probe asymptotics from the shell.
//
// Exit codes: 0 pass, 1 check failed, 2 domain/usage error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "erd/cli_parse.hpp"
#include "erd/errors.hpp"
#include "erd/functional_equation.hpp"
#include "erd/identities.hpp"
#include "erd/json_io.hpp"
#include "erd/mesh_io.hpp"
#include "erd/series.hpp"
#include "erd/surfaces.hpp"

namespace {

using erd::Complex;
using nlohmann::ordered_json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_domain = 2;
constexpr int exit_io = 3;

struct CliError {
    int code;
    ordered_json body;
};

[[noreturn]] void fail_domain(const erd::DomainError& e) {
    throw CliError{exit_domain,
                   ordered_json{{"code", "domain_error"},
                                {"message", e.what()},
                                {"offending_input", e.offending_input()}}};
}

[[noreturn]] void fail_io(const std::string& message, const std::string& path) {
    throw CliError{exit_io,
                   ordered_json{{"code", "io_error"},
                                {"message", message},
                                {"offending_input", path}}};
}

void emit(const ordered_json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) fail_io("cannot open output file", output_path);
    out << text;
    if (!out) fail_io("write failed", output_path);
}

// Deterministic uniform doubles from raw mt19937_64 bits; the standard
// distributions are implementation-defined and would break byte-stable
// sweeps across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double uniform() {
        // splitmix64 step
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
    double x = 0.3, y = 0.5, theta = erd::pi / 2.0, t = 0.5;
    double X = 1.0, A = 1.0, a = 0.5;
    std::string zeta = "0.3+0i";
    std::string s = "-1";
    long terms = 10000;
    double tol = 1e-4;
    std::string output;
};

erd::IdentityReport run_identity_check(const std::string& name, const VerifyArgs& v) {
    if (name == "prop1") return erd::check_prop1(v.x, v.y, v.terms, v.tol);
    if (name == "prop2") return erd::check_prop2(erd::parse_complex(v.zeta), v.terms, v.tol);
    if (name == "prop3") return erd::check_prop3_twisted(v.x, v.y, v.theta, v.terms, v.tol);
    if (name == "prop4") return erd::check_prop4_helicoid(v.t, v.tol);
    if (name == "prop5") return erd::check_prop5(erd::parse_complex(v.zeta), v.tol);
    if (name == "prop6") return erd::check_prop6(v.t, v.terms, v.tol);
    if (name == "log") return erd::check_log_identity(v.x, v.y, v.terms, v.tol);
    if (name == "product") return erd::er_product_check(v.X, v.A, v.terms, v.tol);
    if (name == "entry11") return erd::check_entry11(v.X, v.A, v.terms, v.tol);
    if (name == "telescope") return erd::check_arctan_telescope(v.X, v.terms, v.tol);
    throw erd::DomainError("unknown check '" + name + "'", name);
}

int cmd_verify(const std::string& name, const VerifyArgs& v) {
    if (name == "funceq") {
        const double tol = (v.tol == 1e-4) ? 1e-7 : v.tol;
        const erd::Prop7Report rep =
            erd::prop7_compare(erd::parse_complex(v.s), v.a, tol);
        emit(erd::to_json(rep), v.output);
        return rep.pass_abel ? exit_pass : exit_fail;
    }
    const erd::IdentityReport rep = run_identity_check(name, v);
    emit(erd::to_json(rep), v.output);
    return rep.pass ? exit_pass : exit_fail;
}

// ----------------------------------------------------------------- sweep --

struct SweepArgs {
    std::string x, y, theta, t, X, A;
    long terms = 10000;
    double tol = 1e-4;
    long count = 100;
    std::uint64_t seed = 1;
    double rmin = 0.2, rmax = 0.45, phimin = 0.6, phimax = 2.5;
    bool skip_invalid = false;
    std::string format = "csv";
    std::string output;
};

std::vector<double> grid_or(const std::string& spec, double fallback) {
    if (spec.empty()) return {fallback};
    return erd::parse_grid(spec);
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int emit_reports(const std::vector<erd::IdentityReport>& reports, long skipped,
                 const SweepArgs& sw) {
    if (reports.empty())
        throw erd::DomainError("sweep: grid entirely invalid", "");

    if (sw.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(erd::to_json(r));
        ordered_json j{{"reports", std::move(arr)}, {"skipped_invalid", skipped}};
        emit(j, sw.output);
    } else {
        std::string text;
        text += "check";
        for (const auto& [key, _] : reports.front().inputs) text += "," + key;
        text += ",lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,tail_bound,terms_used,tolerance,pass\n";
        for (const auto& r : reports) {
            text += r.check_name;
            for (const auto& [_, value] : r.inputs) text += "," + csv_num(value);
            text += "," + csv_num(r.lhs.real()) + "," + csv_num(r.lhs.imag());
            text += "," + csv_num(r.rhs.real()) + "," + csv_num(r.rhs.imag());
            text += "," + csv_num(r.abs_residual) + "," + csv_num(r.tail_bound);
            text += "," + std::to_string(r.terms_used) + "," + csv_num(r.tolerance);
            text += r.pass ? ",1\n" : ",0\n";
        }
        if (sw.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(sw.output, std::ios::binary);
            if (!out) fail_io("cannot open output file", sw.output);
            out << text;
        }
    }
    for (const auto& r : reports)
        if (!r.pass) return exit_fail;
    return exit_pass;
}

int cmd_sweep(const std::string& name, const SweepArgs& sw) {
    std::vector<erd::IdentityReport> reports;
    long skipped = 0;
    const auto attempt = [&](const std::function<erd::IdentityReport()>& f) {
        try {
            reports.push_back(f());
        } catch (const erd::DomainError& e) {
            if (!sw.skip_invalid) fail_domain(e);
            ++skipped;
        }
    };

    if (name == "prop2" || name == "prop5") {
        // Random complex samples, reproducible under --seed.
        Rng rng(sw.seed);
        for (long i = 0; i < sw.count; ++i) {
            Complex zeta;
            if (name == "prop2") {
                do {
                    zeta = {rng.uniform(-sw.rmax, sw.rmax), rng.uniform(-sw.rmax, sw.rmax)};
                } while (std::abs(zeta) >= sw.rmax);
                attempt([&] { return erd::check_prop2(zeta, sw.terms, sw.tol); });
            } else {
                zeta = std::polar(rng.uniform(sw.rmin, sw.rmax),
                                  rng.uniform(sw.phimin, sw.phimax));
                attempt([&] { return erd::check_prop5(zeta, sw.tol); });
            }
        }
    } else {
        // Deterministic cartesian grid, loops nested in flag order
        // x -> y -> theta -> t -> X -> A.
        for (double x : grid_or(sw.x, 0.3))
            for (double y : grid_or(sw.y, 0.5))
                for (double theta : grid_or(sw.theta, erd::pi / 2.0))
                    for (double t : grid_or(sw.t, 0.5))
                        for (double X : grid_or(sw.X, 1.0))
                            for (double A : grid_or(sw.A, 1.0)) {
                                VerifyArgs v;
                                v.x = x; v.y = y; v.theta = theta; v.t = t;
                                v.X = X; v.A = A;
                                v.terms = sw.terms; v.tol = sw.tol;
                                attempt([&] { return run_identity_check(name, v); });
                            }
    }
    return emit_reports(reports, skipped, sw);
}

// --------------------------------------------------------------- surface --

struct SurfaceArgs {
    double r = 0.4;
    double umin = 0.0, umax = 0.0, vmin = 0.0, vmax = 0.0;
    bool explicit_region = false;
    double theta = erd::pi / 2.0;
    int nu = 32, nv = 32;
    std::string residual = "none";
    long terms = 200000;
    double tol = 1e-4;
    std::string format = "obj";
    std::string output;
};

int cmd_surface(const std::string& which, const SurfaceArgs& sa) {
    erd::SurfaceKind kind;
    erd::ParamRect region;
    if (which == "scherk-we") {
        kind = erd::SurfaceKind::ScherkWE;
        region = {-sa.r, sa.r, -sa.r, sa.r};
    } else if (which == "scherk-family") {
        kind = erd::SurfaceKind::ScherkFamily;
        region = {-1.0, 1.0, -1.0, 1.0};
    } else if (which == "helicoid") {
        kind = erd::SurfaceKind::HelicoidWE;
        region = {0.2, 0.9, 0.6, 2.5};
    } else {
        throw erd::DomainError("unknown surface '" + which + "'", which);
    }
    if (sa.explicit_region) region = {sa.umin, sa.umax, sa.vmin, sa.vmax};

    erd::ResidualKind rk = erd::ResidualKind::None;
    if (sa.residual == "prop1") rk = erd::ResidualKind::Prop1;
    else if (sa.residual == "prop2") rk = erd::ResidualKind::Prop2;
    else if (sa.residual == "prop4") rk = erd::ResidualKind::Prop4;
    else if (sa.residual == "prop5") rk = erd::ResidualKind::Prop5;
    else if (sa.residual != "none")
        throw erd::DomainError("unknown residual '" + sa.residual + "'", sa.residual);

    erd::MeshOptions opt;
    opt.residual_terms = sa.terms;
    opt.residual_tol = sa.tol;
    opt.theta = sa.theta;
    const erd::Mesh mesh = erd::sample_mesh(kind, region, sa.nu, sa.nv, rk, opt);

    double max_residual = 0.0;
    std::size_t valid = 0;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
        if (mesh.valid[i]) {
            ++valid;
            max_residual = std::max(max_residual, mesh.residuals[i]);
        }

    const auto write_mesh = [&](std::ostream& out) {
        if (sa.format == "obj")
            erd::write_obj(out, mesh);
        else if (sa.format == "csv")
            erd::write_mesh_csv(out, mesh);
        else
            throw erd::DomainError("unknown format '" + sa.format + "'", sa.format);
    };

    if (!sa.output.empty()) {
        std::ofstream out(sa.output, std::ios::binary);
        if (!out) fail_io("cannot open output file", sa.output);
        write_mesh(out);
        if (!out) fail_io("write failed", sa.output);
        if (sa.format == "obj" && rk != erd::ResidualKind::None) {
            // Residuals travel in a CSV sidecar; OBJ stays plain geometry.
            const std::string sidecar = sa.output + ".residuals.csv";
            std::ofstream side(sidecar, std::ios::binary);
            if (!side) fail_io("cannot open sidecar file", sidecar);
            erd::write_mesh_csv(side, mesh);
        }
    } else {
        write_mesh(std::cout);
    }

    ordered_json summary{{"surface", which},
                         {"vertices", mesh.vertices.size()},
                         {"faces", mesh.faces.size()},
                         {"valid_vertices", valid},
                         {"max_residual", max_residual},
                         {"residual", sa.residual},
                         {"format", sa.format},
                         {"output", sa.output}};
    if (!sa.output.empty())
        std::cout << summary.dump(2) << "\n";
    else
        std::cerr << summary.dump(2) << "\n";
    return exit_pass;
}

// ---------------------------------------------------------- series/probe --

int cmd_series(const std::string& family, const std::string& s_text, double param,
               double tol, long max_terms, const std::string& output) {
    const Complex s = erd::parse_complex(s_text);
    erd::Precision p;
    p.abs_tol = tol;
    p.rel_tol = tol;
    p.max_terms = static_cast<std::size_t>(max_terms);
    erd::EvalResult r;
    if (family == "alt") r = erd::eval_alt(s, param, p);
    else if (family == "geo") r = erd::eval_geo(s, param, p);
    else if (family == "heli") r = erd::eval_heli(s, param, p);
    else throw erd::DomainError("unknown family '" + family + "'", family);
    emit(erd::to_json(r), output);
    return exit_pass;
}

int cmd_probe_sigma(double a, double sigma, const std::string& output) {
    const erd::SigmaLimitProbe probe = erd::probe_sigma_limit(a, sigma);
    const double abs_error = std::abs(probe.eval.value - Complex{probe.limit, 0.0});
    const bool pass = abs_error <= probe.limit_bound + probe.eval.tail_bound;
    ordered_json j{{"a", a},
                   {"sigma", sigma},
                   {"value_re", probe.eval.value.real()},
                   {"value_im", probe.eval.value.imag()},
                   {"terms_used", probe.eval.terms_used},
                   {"tail_bound", probe.eval.tail_bound},
                   {"limit", probe.limit},
                   {"abs_error", abs_error},
                   {"limit_bound", probe.limit_bound},
                   {"pass", pass}};
    emit(j, output);
    return pass ? exit_pass : exit_fail;
}

int cmd_probe_oscillation(double a, double sigma, const std::string& t_spec,
                          const std::string& output) {
    const std::vector<double> ts = t_spec.empty() ? std::vector<double>{}
                                                  : erd::parse_grid(t_spec);
    const std::vector<Complex> samples = erd::probe_oscillation(a, sigma, ts);
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < samples.size(); ++i)
        arr.push_back(ordered_json{{"t", ts[i]},
                                   {"value_re", samples[i].real()},
                                   {"value_im", samples[i].imag()}});
    emit(arr, output);
    return exit_pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet-series identity toolkit: series evaluation, identity "
                 "verification, minimal-surface sampling"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run one identity check, print a JSON report");
    std::string verify_name;
    VerifyArgs va;
    verify->add_option("name", verify_name,
                       "prop1|prop2|prop3|prop4|prop5|prop6|log|product|entry11|telescope|funceq")
        ->required();
    verify->add_option("--x", va.x);
    verify->add_option("--y", va.y);
    verify->add_option("--theta", va.theta);
    verify->add_option("--t", va.t);
    verify->add_option("--X", va.X);
    verify->add_option("--A", va.A);
    verify->add_option("--zeta", va.zeta, "complex literal RE+IMi");
    verify->add_option("--s", va.s, "complex literal RE+IMi");
    verify->add_option("--a", va.a);
    verify->add_option("--terms", va.terms);
    verify->add_option("--tol", va.tol);
    verify->add_option("-o,--output", va.output);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a check over a grid, print CSV/JSON");
    std::string sweep_name;
    SweepArgs sw;
    sweep->add_option("name", sweep_name, "check name; prop2/prop5 sample randomly")->required();
    sweep->add_option("--x", sw.x, "grid lo:hi:count or v1,v2,...");
    sweep->add_option("--y", sw.y);
    sweep->add_option("--theta", sw.theta);
    sweep->add_option("--t", sw.t);
    sweep->add_option("--X", sw.X);
    sweep->add_option("--A", sw.A);
    sweep->add_option("--terms", sw.terms);
    sweep->add_option("--tol", sw.tol);
    sweep->add_option("--count", sw.count, "random sample count (prop2/prop5)");
    sweep->add_option("--seed", sw.seed);
    sweep->add_option("--rmin", sw.rmin);
    sweep->add_option("--rmax", sw.rmax);
    sweep->add_option("--phimin", sw.phimin);
    sweep->add_option("--phimax", sw.phimax);
    sweep->add_flag("--skip-invalid", sw.skip_invalid);
    sweep->add_option("--format", sw.format, "csv|json");
    sweep->add_option("-o,--output", sw.output);

    // surface
    auto* surface = app.add_subcommand("surface", "sample a surface mesh to OBJ/CSV");
    std::string surface_name;
    SurfaceArgs sa;
    surface->add_option("which", surface_name, "scherk-we|scherk-family|helicoid")->required();
    surface->add_option("--r", sa.r, "scherk-we: half-width of the square region");
    auto* op_umin = surface->add_option("--umin", sa.umin);
    surface->add_option("--umax", sa.umax);
    surface->add_option("--vmin", sa.vmin);
    surface->add_option("--vmax", sa.vmax);
    surface->add_option("--theta", sa.theta);
    surface->add_option("--nu", sa.nu);
    surface->add_option("--nv", sa.nv);
    surface->add_option("--residual", sa.residual, "none|prop1|prop2|prop4|prop5");
    surface->add_option("--terms", sa.terms);
    surface->add_option("--tol", sa.tol);
    surface->add_option("--format", sa.format, "obj|csv");
    surface->add_option("-o,--output", sa.output);

    // series
    auto* series = app.add_subcommand("series", "evaluate one series, print JSON");
    std::string fam = "alt", s_text = "1";
    double param = 0.5, series_tol = 1e-14;
    long series_terms = 2000000;
    std::string series_out;
    series->add_option("--family", fam, "alt|geo|heli")->required();
    series->add_option("--s", s_text)->required();
    series->add_option("--param", param)->required();
    series->add_option("--tol", series_tol);
    series->add_option("--terms", series_terms);
    series->add_option("-o,--output", series_out);

    // probe
    auto* probe = app.add_subcommand("probe", "asymptotic probes");
    std::string probe_kind;
    double pa = 0.5, psigma = 1.0;
    std::string pt, probe_out;
    probe->add_option("kind", probe_kind, "sigma-limit|oscillation")->required();
    probe->add_option("--a", pa);
    probe->add_option("--sigma", psigma);
    probe->add_option("--t", pt, "comma list of Im(s) samples");
    probe->add_option("-o,--output", probe_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        ordered_json j{{"code", "usage_error"}, {"message", e.what()}, {"offending_input", ""}};
        std::cout << j.dump(2) << "\n";
        return exit_domain;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_name, va);
        if (sweep->parsed()) return cmd_sweep(sweep_name, sw);
        if (surface->parsed()) {
            sa.explicit_region = op_umin->count() > 0;
            return cmd_surface(surface_name, sa);
        }
        if (series->parsed())
            return cmd_series(fam, s_text, param, series_tol, series_terms, series_out);
        if (probe->parsed()) {
            if (probe_kind == "sigma-limit") return cmd_probe_sigma(pa, psigma, probe_out);
            if (probe_kind == "oscillation")
                return cmd_probe_oscillation(pa, psigma, pt, probe_out);
            throw erd::DomainError("unknown probe '" + probe_kind + "'", probe_kind);
        }
    } catch (const CliError& e) {
        std::cout << e.body.dump(2) << "\n";
        return e.code;
    } catch (const erd::DomainError& e) {
        ordered_json j{{"code", "domain_error"},
                       {"message", e.what()},
                       {"offending_input", e.offending_input()}};
        std::cout << j.dump(2) << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        ordered_json j{{"code", "internal_error"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return exit_domain;
    }
    return exit_domain;
}
