#pragma once

#include <string>
#include <vector>

#include "erd/complex_ops.hpp"

namespace erd {

// Complex literal "RE+IMi", e.g. "-2.5+1.3i", "0.5-0.5i", "1.3i", "-1".
// Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

// Grid spec: "lo:hi:count" (inclusive linspace), "v1,v2,v3", or one value.
std::vector<double> parse_grid(const std::string& text);

} // namespace erd
