#pragma once

#include <ostream>

#include "erd/surfaces.hpp"

namespace erd {

// Wavefront OBJ: "v x y z" lines then quad "f i j k l" lines, 1-based
// indices, LF endings, %.17g numbers.
void write_obj(std::ostream& out, const Mesh& mesh);

// CSV with header u,v,x,y,z,residual,valid (valid as 0/1).
void write_mesh_csv(std::ostream& out, const Mesh& mesh);

} // namespace erd
