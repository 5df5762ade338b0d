#pragma once

#include <cstddef>

namespace erd {

// Truncation policy shared by every series evaluator: stop once the certified
// tail bound drops under max(abs_tol, rel_tol * |partial sum|), or give up at
// max_terms.
struct Precision {
    double rel_tol = 1e-14;
    double abs_tol = 1e-15;
    std::size_t max_terms = 2'000'000;

    bool valid() const {
        return rel_tol > 0.0 && abs_tol > 0.0 && max_terms >= 1;
    }
};

} // namespace erd
