#include "erd/mesh_io.hpp"

#include <cstdio>

namespace erd {

namespace {

// Shortest text that round-trips binary64 is locale-trouble; a fixed %.17g
// keeps files byte-reproducible everywhere.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_obj(std::ostream& out, const Mesh& mesh) {
    for (const SurfacePoint3& p : mesh.vertices)
        out << "v " << num(p.x) << " " << num(p.y) << " " << num(p.z) << "\n";
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << " " << f[3] + 1
            << "\n";
}

void write_mesh_csv(std::ostream& out, const Mesh& mesh) {
    out << "u,v,x,y,z,residual,valid\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& [u, v] = mesh.param_coords[i];
        const SurfacePoint3& p = mesh.vertices[i];
        out << num(u) << "," << num(v) << "," << num(p.x) << "," << num(p.y) << ","
            << num(p.z) << "," << num(mesh.residuals[i]) << ","
            << static_cast<int>(mesh.valid[i]) << "\n";
    }
}

} // namespace erd
